#include "golden/verify.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "golden/dynamics.hpp"
#include "golden/measures.hpp"
#include "golden/montecarlo.hpp"
#include "golden/words.hpp"

namespace golden::verify {

namespace dyn = golden::dynamics;
namespace w = golden::words;
namespace ms = golden::measures;
namespace mc = golden::montecarlo;

namespace {

using Check = std::pair<bool, std::string>;

const GoldenNum kOne{1};
const GoldenNum& kBeta() {
    static const GoldenNum b = GoldenNum::beta();
    return b;
}

Check pass(const std::string& note) { return {true, note}; }
Check fail(const std::string& note) { return {false, note}; }

// 1. Exact endpoints of the two outermost intervals.
Check check_exact_endpoints(const std::string&) {
    auto i10 = w::interval_endpoints("10");
    if (!(i10.lo == kOne + GoldenNum::power(-2))) return fail("I_10 left endpoint");
    if (!(i10.hi == kBeta())) return fail("I_10 right endpoint");
    if (!i10.closed_right) return fail("I_10 must be closed on the right");
    auto i1001 = w::interval_endpoints("1001");
    if (!(i1001.lo == kOne + GoldenNum::power(-3))) return fail("I_1001 left endpoint");
    if (!(i1001.hi == kOne + GoldenNum::power(-2))) return fail("I_1001 right endpoint");
    if (i1001.closed_right) return fail("I_1001 must be open on the right");
    return pass("both intervals exact");
}

// 2. Frequency plateau on [1/2 + 1/beta, 1 + 1/beta^2].
Check check_frequency_plateau(const std::string&) {
    const GoldenNum lo = GoldenNum(Rat(1, 2)) + GoldenNum::power(-1);
    const GoldenNum hi = kOne + GoldenNum::power(-2);
    const GoldenNum want_s(Rat(4, 5));
    const GoldenNum want_t(Rat(3, 4));
    auto atlas = w::enumerate_matching_words(14);
    int checked = 0;
    for (const auto& r : atlas) {
        if (r.alpha_minus < lo || r.alpha_plus > hi) continue;
        GoldenNum mid = (r.alpha_minus + r.alpha_plus) / GoldenNum(2);
        GoldenNum fs = w::freq_S_closed_form(r, mid);
        if (!(fs == want_s)) return fail("freq_S != 4/5 on " + r.d);
        GoldenNum ft = GoldenNum(2) - fs.inverse();
        if (!(ft == want_t)) return fail("freq_T != 3/4 on " + r.d);
        ++checked;
    }
    if (checked == 0) return fail("no intervals inside the plateau");
    return pass(std::to_string(checked) + " plateau intervals exact");
}

// 3. Boundary values at alpha = 1 and alpha = beta.
Check check_boundary_values(const std::string&) {
    const GoldenNum want = (GoldenNum(5) + GoldenNum::sqrt5()) / GoldenNum(10);
    auto fs1 = ms::freq_S(kOne);
    if (!fs1.is_exact || !(fs1.exact == want)) return fail("freq_S(1) != (5+sqrt5)/10");
    auto ft1 = ms::freq_T(kOne);
    if (!ft1.is_exact || !(ft1.exact == GoldenNum::power(-1))) return fail("freq_T(1) != 1/beta");
    auto rec10 = w::make_record("10");
    GoldenNum fsb = w::freq_S_closed_form(rec10, kBeta());
    if (!(fsb == want)) return fail("freq_S(beta) != (5+sqrt5)/10");
    return pass("all three boundary values exact");
}

// 4. Closed-form frequency equals the integrated density; densities normalized.
Check check_dual_path(const std::string&) {
    auto atlas = w::enumerate_matching_words(10);
    for (const auto& r : atlas) {
        GoldenNum mid = (r.alpha_minus + r.alpha_plus) / GoldenNum(2);
        auto f = ms::density_S(mid);
        if (!(f.integral() == kOne)) return fail("integral f != 1 on " + r.d);
        if (!(ms::measure_J0(f) == w::freq_S_closed_form(r, mid)))
            return fail("closed form != integrated on " + r.d);
        auto g = ms::density_T(mid);
        if (!(g.integral() == kOne)) return fail("integral g != 1 on " + r.d);
    }
    return pass(std::to_string(atlas.size()) + " midpoints, both paths equal");
}

// 5. The detected matching index and leading expansion digits.
Check check_oracle_matching(const std::string&) {
    auto atlas = w::enumerate_matching_words(12);
    for (const auto& r : atlas) {
        GoldenNum mid = (r.alpha_minus + r.alpha_plus) / GoldenNum(2);
        auto out = dyn::matching_index(mid);
        if (!out.matched() || out.m != r.m) return fail("matching index on " + r.d);
        if (dyn::expansion(dyn::MapKind::S, mid, kOne, r.m) != w::to_signed(r.d))
            return fail("expansion of 1 on " + r.d);
        if (dyn::expansion(dyn::MapKind::S, mid, kOne - mid, r.m) != r.e)
            return fail("expansion of 1-alpha on " + r.d);
    }
    return pass(std::to_string(atlas.size()) + " midpoints verified");
}

// 6. Cascade adjacency: intervals of d and psi(d) abut exactly.
Check check_cascade_adjacency(const std::string&) {
    auto atlas = w::enumerate_matching_words(12);
    int checked = 0;
    for (const auto& r : atlas) {
        std::string image;
        try {
            image = w::psi(r.d);
        } catch (const std::domain_error&) {
            continue;  // the two exceptional words have no cascade image
        }
        auto child = w::make_record(image);
        if (!(r.alpha_minus == child.alpha_plus)) return fail("gap after " + r.d);
        if (child.n != 1) return fail("n(psi(d)) != 1 for " + r.d);
        ++checked;
    }
    if (checked == 0) return fail("no cascade images checked");
    return pass(std::to_string(checked) + " adjacencies exact");
}

// 7. Periodic base-beta orbits of the interval endpoints.
Check check_endpoint_periodicity(const std::string&) {
    auto atlas = w::enumerate_matching_words(12);
    auto orbit_matches = [](const GoldenNum& x0, const std::vector<int>& word) {
        GoldenNum x = x0;
        for (int rep = 0; rep < 2; ++rep)
            for (int digit : word) {
                if (dyn::branch_index_B(x) != digit) return false;
                x = dyn::step_B(x);
            }
        return x == x0;  // exact return after the period
    };
    int checked = 0;
    for (const auto& r : atlas) {
        if (r.d == "10") continue;
        std::vector<int> d = w::to_signed(r.d);
        std::vector<int> me;
        for (int v : r.e) me.push_back(-v);
        size_t m = r.d.size();
        bool ends1 = r.d.back() == '1';

        std::vector<int> w_minus = d;
        if (ends1)
            w_minus.insert(w_minus.end(), me.begin() + 1, me.begin() + (long)(m - 2));
        else
            w_minus.insert(w_minus.end(), me.begin(), me.begin() + (long)(m - 1));
        w_minus.push_back(0);
        if (!orbit_matches(r.alpha_minus.inverse(), w_minus))
            return fail("orbit of 1/alpha- for " + r.d);

        std::vector<int> w_plus(d.begin(), d.end() - (ends1 ? 1 : 2));
        w_plus.push_back(0);
        GoldenNum inv_plus = r.alpha_plus.inverse();
        if (!orbit_matches(inv_plus, w_plus)) return fail("orbit of 1/alpha+ for " + r.d);

        GoldenNum one_minus = kOne - inv_plus;
        if (ends1) {
            if (!orbit_matches(one_minus, me)) return fail("orbit of 1-1/alpha+ for " + r.d);
        } else {
            if (dyn::branch_index_B(one_minus) != 0)
                return fail("leading digit of 1-1/alpha+ for " + r.d);
            std::vector<int> tail(me.begin() + 1, me.end());
            if (!orbit_matches(dyn::step_B(one_minus), tail))
                return fail("orbit of 1-1/alpha+ for " + r.d);
        }
        ++checked;
    }
    return pass(std::to_string(checked) + " endpoint orbit triples exact");
}

// 8. Mirror identity v(d) - v(phi(d)) = 1.
Check check_mirror_identity(const std::string&) {
    auto atlas = w::enumerate_matching_words(16);
    for (const auto& r : atlas)
        if (!(w::valuation(w::to_signed(r.d)) - w::valuation(r.e) == kOne))
            return fail("identity fails on " + r.d);
    return pass(std::to_string(atlas.size()) + " words exact");
}

// 9. Monte Carlo digit-0 frequency against the closed form, T map.
Check check_monte_carlo(const std::string&) {
    auto atlas = w::enumerate_matching_words(10);
    mc::SplitMix64 rng(20260826);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        const auto& r = atlas[rng.next() % atlas.size()];
        double u = 0.1 + 0.8 * rng.next_unit();
        double a = r.alpha_minus.to_double() +
                   u * (r.alpha_plus.to_double() - r.alpha_minus.to_double());
        GoldenNum alpha{Rat(a)};
        if (!(r.alpha_minus < alpha) || !(alpha < r.alpha_plus)) return fail("sample left interval");
        GoldenNum fs = w::freq_S_closed_form(r, alpha);
        double ft = (GoldenNum(2) - fs.inverse()).to_double();
        mc::SimConfig cfg;
        cfg.map = dyn::MapKind::T;
        cfg.alpha = a;
        cfg.iterations = 10000000;
        cfg.seed = 1000 + (uint64_t)k;
        auto res = mc::simulate(cfg);
        double err = std::abs(res.freq_by_digit.at(0) - ft);
        worst = std::max(worst, err);
        if (err > 3e-3) return fail("deviation " + std::to_string(err) + " on " + r.d);
    }
    std::ostringstream os;
    os << "10 parameters, worst deviation " << worst;
    return pass(os.str());
}

// 10. Total-variation distance between the empirical and exact densities.
Check check_empirical_density(const std::string&) {
    auto rec = w::make_record("1001");
    GoldenNum mid = (rec.alpha_minus + rec.alpha_plus) / GoldenNum(2);
    mc::SimConfig cfg;
    cfg.map = dyn::MapKind::S;
    cfg.alpha = mid.to_double();
    cfg.iterations = 10000000;
    cfg.seed = 0;
    cfg.bins = 200;
    auto dens = mc::empirical_density(cfg);
    auto f = ms::density_S(mid);
    double binw = 2.0 / cfg.bins;
    double tv = 0;
    for (int i = 0; i < cfg.bins; ++i) {
        GoldenNum l(Rat(-1) + Rat(2 * i, cfg.bins));
        GoldenNum r(Rat(-1) + Rat(2 * (i + 1), cfg.bins));
        tv += 0.5 * std::abs(f.integrate(l, r).to_double() - dens[(size_t)i] * binw);
    }
    std::ostringstream os;
    os << "TV distance " << tv;
    if (tv > 0.02) return fail(os.str() + " exceeds 0.02");
    return pass(os.str());
}

// 11. Coverage of the parameter interval and the length-20 reference atlas.
Check check_coverage(const std::string& data_dir) {
    auto atlas = w::enumerate_matching_words(20);
    // pairwise disjoint inside (1, beta]; the list is sorted by alpha- descending
    for (const auto& r : atlas) {
        if (!(kOne < r.alpha_minus)) return fail("interval reaches below 1: " + r.d);
        if (!(r.alpha_plus <= kBeta())) return fail("interval beyond beta: " + r.d);
    }
    for (size_t i = 0; i + 1 < atlas.size(); ++i)
        if (!(atlas[i + 1].alpha_plus <= atlas[i].alpha_minus))
            return fail("overlap between " + atlas[i].d + " and " + atlas[i + 1].d);
    // covered length is nondecreasing in the cutoff and grows with new words
    GoldenNum prev_total{0};
    size_t prev_count = 0;
    for (int cap = 2; cap <= 20; ++cap) {
        GoldenNum total{0};
        size_t count = 0;
        for (const auto& r : atlas)
            if ((int)r.d.size() <= cap) {
                total = total + (r.alpha_plus - r.alpha_minus);
                ++count;
            }
        if (total < prev_total) return fail("covered length dropped at cutoff " + std::to_string(cap));
        if (count > prev_count && !(prev_total < total))
            return fail("covered length stalled at cutoff " + std::to_string(cap));
        prev_total = total;
        prev_count = count;
    }
    if (!(prev_total < kBeta() - kOne)) return fail("covered length >= beta - 1");
    // byte-exact comparison against the committed reference atlas
    std::ifstream in(data_dir + "/atlas_len20.csv", std::ios::binary);
    if (!in) return fail("missing reference file atlas_len20.csv in " + data_dir);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (buf.str() != w::atlas_to_csv(atlas)) return fail("atlas differs from the reference file");
    std::ostringstream os;
    os << atlas.size() << " intervals, covered length " << prev_total.to_double() << " of "
       << (kBeta() - kOne).to_double();
    return pass(os.str());
}

// 12. Ground-truth word list at cutoff 4.
Check check_atlas_ground_truth(const std::string&) {
    auto atlas = w::enumerate_matching_words(4);
    std::set<std::string> got;
    for (const auto& r : atlas) got.insert(r.d);
    if (got != std::set<std::string>{"10", "1001", "1010"})
        return fail("expected exactly {10, 1001, 1010}");
    return pass("exactly {10, 1001, 1010}");
}

struct Entry {
    const char* name;
    Check (*fn)(const std::string&);
};

const Entry kEntries[kNumCriteria] = {
    {"exact-endpoints", check_exact_endpoints},
    {"frequency-plateau", check_frequency_plateau},
    {"boundary-values", check_boundary_values},
    {"dual-path-equality", check_dual_path},
    {"oracle-matching", check_oracle_matching},
    {"cascade-adjacency", check_cascade_adjacency},
    {"endpoint-periodicity", check_endpoint_periodicity},
    {"mirror-identity", check_mirror_identity},
    {"monte-carlo-agreement", check_monte_carlo},
    {"empirical-density", check_empirical_density},
    {"coverage-atlas", check_coverage},
    {"atlas-ground-truth", check_atlas_ground_truth},
};

}  // namespace

CriterionResult run_criterion(int id, const std::string& data_dir) {
    if (id < 1 || id > kNumCriteria) throw std::out_of_range("criterion id");
    const Entry& e = kEntries[id - 1];
    CriterionResult r;
    r.id = id;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [ok, note] = e.fn(data_dir);
        r.passed = ok;
        r.detail = note;
    } catch (const std::exception& ex) {
        r.passed = false;
        r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CriterionResult> run_all(const std::string& data_dir) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kNumCriteria; ++id) out.push_back(run_criterion(id, data_dir));
    return out;
}

}  // namespace golden::verify
