#include "golden/words.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace golden::words {

namespace {

const char* kBlocks[3] = {"00", "001", "01"};

// Depth-first block parse of the tail w[1..] into w_{i_1}...w_{i_n} t with
// t = 1 - i_n/2.  The decomposition is unique, but a 1-token lookahead is
// not quite enough near the end, so backtrack and remember the deepest
// failure position for the error report.
bool parse_tail(const std::string& w, size_t pos, std::vector<int>& indices, size_t& deepest) {
    if (!indices.empty()) {
        int last = indices.back();
        if (pos + 1 == w.size() && last != 1 && w[pos] - '0' == 1 - last / 2) return true;
    }
    deepest = std::max(deepest, pos);
    for (int i : {1, 0, 2}) {
        const std::string blk = kBlocks[i];
        if (w.compare(pos, blk.size(), blk) != 0) continue;
        if (indices.empty() && !(i == 2 || pos + blk.size() + 1 == w.size())) continue;  // i_1=2 when n>=2
        indices.push_back(i);
        if (parse_tail(w, pos + blk.size(), indices, deepest)) return true;
        indices.pop_back();
    }
    return false;
}

GoldenNum beta_pow(long k) { return GoldenNum::power(k); }

int threads_from_env() {
    if (const char* s = std::getenv("GOLDEN_THREADS")) {
        int n = std::atoi(s);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? (int)hc : 1;
}

}  // namespace

BlockDecomposition parse_block_form(const Word01& w) {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != '0' && w[i] != '1') throw NotAdmissible{i};
    if (w == "10") return BlockDecomposition{{}, 0, true};
    if (w.size() < 4 || w[0] != '1') throw NotAdmissible{0};
    BlockDecomposition out;
    size_t deepest = 1;
    if (!parse_tail(w, 1, out.indices, deepest)) throw NotAdmissible{deepest};
    out.terminal = 1 - out.indices.back() / 2;
    return out;
}

Word01 assemble(const BlockDecomposition& blocks) {
    if (blocks.exceptional) return "10";
    Word01 w = "1";
    for (int i : blocks.indices) w += kBlocks[i];
    w += char('0' + blocks.terminal);
    return w;
}

SignedWord phi(const BlockDecomposition& blocks) {
    if (blocks.exceptional) return {0, -1};
    SignedWord e = {0};
    for (int i : blocks.indices)
        for (const char c : std::string(kBlocks[2 - i])) e.push_back(-(c - '0'));
    e.push_back(-(blocks.indices.back() / 2));
    return e;
}

SignedWord phi(const Word01& w) { return phi(parse_block_form(w)); }

SignedWord to_signed(const Word01& w) {
    SignedWord out;
    out.reserve(w.size());
    for (char c : w) out.push_back(c - '0');
    return out;
}

SignedWord negate(SignedWord w) {
    for (int& d : w) d = -d;
    return w;
}

int lex_compare(const SignedWord& u, const SignedWord& w) {
    size_t n = std::max(u.size(), w.size());
    for (size_t j = 0; j < n; ++j) {
        int a = j < u.size() ? u[j] : 0;
        int b = j < w.size() ? w[j] : 0;
        if (a != b) return a < b ? -1 : 1;
    }
    return 0;
}

PropertyMResult property_M_check(const Word01& w) {
    PropertyMResult res;
    BlockDecomposition blocks;
    try {
        blocks = parse_block_form(w);
    } catch (const NotAdmissible& na) {
        res.witness = na.position;
        return res;
    }
    res.admissible = true;
    SignedWord d = to_signed(w);
    SignedWord me = negate(phi(blocks));
    for (size_t j = 0; j < d.size(); ++j) {
        SignedWord sd(d.begin() + j, d.end());
        SignedWord se(me.begin() + j, me.end());
        if (lex_compare(sd, d) > 0 || lex_compare(se, d) > 0) {
            res.witness = j;
            return res;
        }
    }
    res.holds = true;
    return res;
}

GoldenNum valuation(const SignedWord& w) {
    GoldenNum v(0);
    for (size_t j = 0; j < w.size(); ++j)
        if (w[j] != 0) v += GoldenNum(Rat(w[j])) * beta_pow(-(long)(j + 1));
    return v;
}

GoldenNum valuation(const std::string& w) {
    SignedWord s;
    s.reserve(w.size());
    for (char c : w) s.push_back(c - '0');
    return valuation(s);
}

Interval interval_endpoints(const Word01& d) {
    if (d == "10")
        return {GoldenNum(1) + beta_pow(-2), GoldenNum::beta(), true};
    long m = (long)d.size();
    long dm = d.back() - '0';
    GoldenNum v = valuation(d);
    GoldenNum bm = beta_pow(m);
    GoldenNum lo = (bm + beta_pow(dm)) / (bm * v + beta_pow(dm));
    GoldenNum hi = (bm - beta_pow(1 - dm)) / (bm * v - beta_pow(1 - dm));
    return {lo, hi, false};
}

Interval cylinder(const Word01& u) {
    GoldenNum v = valuation(u);
    long n = (long)u.size();
    long shift = u.back() == '1' ? n + 1 : n;
    return {v, v + beta_pow(-shift), false};
}

Word01 psi(const Word01& d) {
    if (d == "10" || d == "1001") throw std::domain_error("psi: exceptional word " + d);
    SignedWord e = phi(d);
    Word01 out = d;
    size_t start = d.back() == '1' ? 1 : 0;
    for (size_t j = start; j < e.size(); ++j) out += char('0' - e[j]);
    return out;
}

std::string xi(const BlockDecomposition& blocks) {
    if (blocks.exceptional) return "101";
    std::string out = "1";
    for (int i : blocks.indices) out += (i == 1) ? "030" : "02";
    out += "01";
    return out;
}

int n_count(const Word01& d) {
    SignedWord e = phi(d);
    int ones = (int)std::count(d.begin(), d.end(), '1');
    int neg = (int)std::count(e.begin(), e.end(), -1);
    return ones - neg;
}

GoldenNum k_constant(const Word01& d) {
    SignedWord e = phi(d);
    GoldenNum K(0);
    GoldenNum vd(0), ve(0);  // valuations of the prefixes d_1..d_t, e_1..e_t
    for (size_t t = 0; t < d.size(); ++t) {
        if (d[t] == '1') K += vd;
        if (e[t] == -1) K -= GoldenNum(1) + ve;
        vd += GoldenNum(Rat(d[t] - '0')) * beta_pow(-(long)(t + 1));
        ve += GoldenNum(Rat(e[t])) * beta_pow(-(long)(t + 1));
    }
    return K;
}

GoldenNum k_constant_alternate(const Word01& d) {
    BlockDecomposition blocks = parse_block_form(d);
    if (blocks.exceptional) throw std::domain_error("k_constant_alternate: d = 10");
    long m = (long)d.size();
    size_t n = blocks.indices.size();
    GoldenNum K(-1);
    Word01 prefix = "1";
    for (size_t k = 0; k + 1 < n; ++k) {
        prefix += kBlocks[blocks.indices[k]];
        if (blocks.indices[k] == 2) K += valuation(prefix);
        if (blocks.indices[k] == 0) K -= valuation(prefix);
    }
    K += beta_pow(-1) * valuation(d.substr(0, m - 3)) + beta_pow(-(m - 1));
    return K;
}

MatchingRecord make_record(const Word01& d) {
    MatchingRecord rec;
    rec.d = d;
    rec.blocks = parse_block_form(d);
    rec.e = phi(rec.blocks);
    rec.m = (int)d.size();
    Interval I = interval_endpoints(d);
    rec.alpha_minus = I.lo;
    rec.alpha_plus = I.hi;
    rec.closed_right = I.closed_right;
    rec.n = n_count(d);
    rec.K = k_constant(d);
    rec.xi_word = xi(rec.blocks);
    rec.xi_valuation = valuation(rec.xi_word);
    return rec;
}

namespace {

// Depth-first over block index sequences; `first` pins i_1 for the
// parallel split.  Assembled words are filtered by Property M.
void enumerate_branch(int first, int max_len, std::vector<Word01>& out) {
    struct Frame {
        std::vector<int> indices;
        int len;  // length of 1 w_{i_1} ... w_{i_k}
    };
    std::vector<Frame> stack;
    stack.push_back({{first}, 1 + (int)std::string(kBlocks[first]).size()});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.len + 1 <= max_len && f.indices.back() != 1) {
            BlockDecomposition blocks{f.indices, 1 - f.indices.back() / 2, false};
            Word01 w = assemble(blocks);
            if (property_M_check(w).holds) out.push_back(w);
        }
        for (int i = 0; i < 3; ++i) {
            int len = f.len + (int)std::string(kBlocks[i]).size();
            if (len + 1 > max_len) continue;
            Frame g = f;
            g.indices.push_back(i);
            g.len = len;
            stack.push_back(std::move(g));
        }
    }
}

}  // namespace

std::vector<MatchingRecord> enumerate_matching_words(int max_len) {
    if (max_len < 2) throw std::invalid_argument("enumerate_matching_words: max_len < 2");
    std::vector<Word01> found;
    if (max_len >= 2) found.push_back("10");
    // n = 1 allows i_1 in {0, 2}; n >= 2 requires i_1 = 2, so branch 2
    // covers everything beyond the two shortest words.
    if (max_len >= 4 && property_M_check("1001").holds) found.push_back("1001");
    if (max_len >= 4) {
        std::vector<Word01> branch;
        enumerate_branch(2, max_len, branch);
        found.insert(found.end(), branch.begin(), branch.end());
    }

    std::vector<MatchingRecord> atlas(found.size());
    int nthreads = std::min<int>(threads_from_env(), found.empty() ? 1 : (int)found.size());
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int t = 0; t < nthreads; ++t)
        futs.push_back(std::async(std::launch::async, [&] {
            for (size_t i = next.fetch_add(1); i < found.size(); i = next.fetch_add(1))
                atlas[i] = make_record(found[i]);
        }));
    for (auto& f : futs) f.get();

    std::sort(atlas.begin(), atlas.end(), [](const MatchingRecord& a, const MatchingRecord& b) {
        return a.alpha_minus > b.alpha_minus;
    });

    std::map<Word01, size_t> index;
    for (size_t i = 0; i < atlas.size(); ++i) index[atlas[i].d] = i;
    for (const auto& rec : atlas) {
        if (rec.d == "10" || rec.d == "1001") continue;
        auto it = index.find(psi(rec.d));
        if (it != index.end()) atlas[it->second].cascade_parent = rec.d;
    }
    return atlas;
}

std::string signed_to_string(const SignedWord& w) {
    std::string out;
    for (int d : w) out += d == 0 ? '0' : (d > 0 ? '+' : '-');
    return out;
}

GoldenNum freq_S_closed_form(const MatchingRecord& rec, const GoldenNum& alpha) {
    GoldenNum n_minus_1(Rat(rec.n - 1));
    return GoldenNum(1) -
           (n_minus_1 / alpha - rec.K) / (GoldenNum::beta() * rec.xi_valuation);
}

std::string atlas_to_csv(const std::vector<MatchingRecord>& atlas) {
    std::ostringstream os;
    os << "word,e_word,m,alpha_minus_exact,alpha_plus_exact,alpha_minus_dec,alpha_plus_dec,"
          "length_dec,n_count,K_d_exact,freq_S_exact,cascade_parent\n";
    for (const auto& r : atlas) {
        GoldenNum mid = (r.alpha_minus + r.alpha_plus) / GoldenNum(2);
        os << r.d << ',' << signed_to_string(r.e) << ',' << r.m << ',' << r.alpha_minus.to_string()
           << ',' << r.alpha_plus.to_string() << ',' << r.alpha_minus.decimal(15) << ','
           << r.alpha_plus.decimal(15) << ',' << (r.alpha_plus - r.alpha_minus).decimal(15) << ','
           << r.n << ',' << r.K.to_string() << ',' << freq_S_closed_form(r, mid).to_string() << ','
           << r.cascade_parent << '\n';
    }
    return os.str();
}

std::string atlas_to_json(const std::vector<MatchingRecord>& atlas) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& r : atlas) {
        GoldenNum mid = (r.alpha_minus + r.alpha_plus) / GoldenNum(2);
        os << (first ? "" : ",") << "\n  {\"word\":\"" << r.d << "\",\"e_word\":\""
           << signed_to_string(r.e) << "\",\"m\":" << r.m << ",\"alpha_minus\":" << r.alpha_minus.to_json()
           << ",\"alpha_plus\":" << r.alpha_plus.to_json()
           << ",\"length_dec\":\"" << (r.alpha_plus - r.alpha_minus).decimal(15)
           << "\",\"n_count\":" << r.n << ",\"K_d\":" << r.K.to_json()
           << ",\"freq_S\":" << freq_S_closed_form(r, mid).to_json()
           << ",\"cascade_parent\":\"" << r.cascade_parent << "\"}";
        first = false;
    }
    os << "\n]\n";
    return os.str();
}

}  // namespace golden::words
