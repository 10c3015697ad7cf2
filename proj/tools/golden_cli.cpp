#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "golden/dynamics.hpp"
#include "golden/golden_num.hpp"
#include "golden/measures.hpp"
#include "golden/montecarlo.hpp"
#include "golden/verify.hpp"
#include "golden/words.hpp"
#include "json.hpp"

namespace dyn = golden::dynamics;
namespace w = golden::words;
namespace ms = golden::measures;
namespace mc = golden::montecarlo;
using golden::GoldenNum;
using golden::Rat;
using nlohmann::json;

namespace {

constexpr int kDecimalDigits = 15;

struct AlphaValue {
    GoldenNum exact;
    bool float_mode = false;  // given as a decimal; exact holds its binary value
};

AlphaValue parse_alpha(const std::string& s) {
    AlphaValue out;
    auto endpoint = [&](const std::string& word, int which) {
        auto I = w::interval_endpoints(word);
        switch (which) {
            case 0: return I.lo;
            case 1: return I.hi;
            default: return (I.lo + I.hi) / GoldenNum(2);
        }
    };
    if (s.rfind("mid:", 0) == 0) {
        out.exact = endpoint(s.substr(4), 2);
    } else if (s.rfind("left:", 0) == 0) {
        out.exact = endpoint(s.substr(5), 0);
    } else if (s.rfind("right:", 0) == 0) {
        out.exact = endpoint(s.substr(6), 1);
    } else if (s.find('b') != std::string::npos) {
        out.exact = GoldenNum::parse(s);
    } else if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
               s.find('E') != std::string::npos) {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad decimal alpha: " + s);
        out.exact = GoldenNum(Rat(v));
        out.float_mode = true;
    } else {
        out.exact = GoldenNum::parse(s);
    }
    return out;
}

std::string dec(const GoldenNum& x) { return x.decimal(kDecimalDigits); }

std::string dec(double x) {
    std::ostringstream os;
    os.precision(kDecimalDigits);
    os << x;
    return os.str();
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + output);
        f << text;
    }
}

json freq_to_json(const ms::FrequencyValue& v) {
    static const char* names[] = {"closed_form", "integrated", "empirical", "limit_numeric"};
    json j;
    j["value_dec"] = v.is_exact ? dec(v.exact) : dec(v.value);
    j["exact"] = v.is_exact ? json(json::parse(v.exact.to_json())) : json(nullptr);
    j["method"] = names[(int)v.method];
    return j;
}

json alpha_to_json(const AlphaValue& a) {
    json j;
    j["exact"] = json::parse(a.exact.to_json());
    j["dec"] = dec(a.exact);
    j["float_mode"] = a.float_mode;
    return j;
}

dyn::MapKind map_from_string(const std::string& s) {
    if (s == "S") return dyn::MapKind::S;
    if (s == "T") return dyn::MapKind::T;
    if (s == "B") return dyn::MapKind::B;
    throw std::invalid_argument("map must be S, T, or B");
}

int cmd_expand(const std::string& alpha_s, const std::string& x_s, const std::string& map_s,
               int n, const std::string& format, const std::string& output) {
    auto alpha = parse_alpha(alpha_s);
    auto map = map_from_string(map_s);
    GoldenNum x = parse_alpha(x_s).exact;
    auto digits = dyn::expansion(map, alpha.exact, x, n);
    if (format == "json") {
        json j;
        j["map"] = map_s;
        j["alpha"] = alpha_to_json(alpha);
        j["x"] = json::parse(x.to_json());
        j["digits"] = digits;
        j["digit_string"] = dyn::digits_to_string(digits);
        emit(j.dump(2), output);
    } else {
        emit(dyn::digits_to_string(digits), output);
    }
    return 0;
}

int cmd_match(const std::string& alpha_s, int max_iter, const std::string& format,
              const std::string& output) {
    auto alpha = parse_alpha(alpha_s);
    auto out = dyn::matching_index(alpha.exact, max_iter);
    json j;
    j["alpha"] = alpha_to_json(alpha);
    std::ostringstream text;
    switch (out.kind) {
        case dyn::MatchingOutcome::Kind::Matched: {
            auto digits = dyn::expansion(dyn::MapKind::S, alpha.exact, GoldenNum(1), out.m);
            std::string word;
            for (int d : digits) word += char('0' + d);
            j["kind"] = "matched";
            j["m"] = out.m;
            j["word"] = word;
            text << "matched  m=" << out.m << "  word=" << word;
            break;
        }
        case dyn::MatchingOutcome::Kind::Markov:
            j["kind"] = "markov";
            j["preperiod"] = out.preperiod;
            j["period"] = out.period;
            text << "markov  preperiod=" << out.preperiod << "  period=" << out.period;
            break;
        case dyn::MatchingOutcome::Kind::NotFound:
            j["kind"] = "not_found";
            j["max_iter"] = max_iter;
            text << "no matching within " << max_iter << " iterations";
            break;
    }
    emit(format == "json" ? j.dump(2) : text.str(), output);
    return 0;
}

int cmd_atlas(int max_len, const std::string& format, const std::string& output) {
    auto atlas = w::enumerate_matching_words(max_len);
    emit(format == "json" ? w::atlas_to_json(atlas) : w::atlas_to_csv(atlas), output);
    return 0;
}

int cmd_interval(const std::string& word, const std::string& format, const std::string& output) {
    auto rec = w::make_record(word);
    if (format == "json") {
        json j;
        j["word"] = rec.d;
        j["e_word"] = w::signed_to_string(rec.e);
        j["m"] = rec.m;
        j["alpha_minus"] = {{"exact", json::parse(rec.alpha_minus.to_json())},
                            {"dec", dec(rec.alpha_minus)}};
        j["alpha_plus"] = {{"exact", json::parse(rec.alpha_plus.to_json())},
                           {"dec", dec(rec.alpha_plus)}};
        j["closed_right"] = rec.closed_right;
        j["n_count"] = rec.n;
        j["K"] = json::parse(rec.K.to_json());
        j["xi_word"] = rec.xi_word;
        emit(j.dump(2), output);
    } else {
        std::ostringstream os;
        os << "I_" << rec.d << " = (" << rec.alpha_minus.to_string() << ", "
           << rec.alpha_plus.to_string() << (rec.closed_right ? "]" : ")") << "\n"
           << "      = (" << dec(rec.alpha_minus) << ", " << dec(rec.alpha_plus)
           << (rec.closed_right ? "]" : ")");
        emit(os.str(), output);
    }
    return 0;
}

int cmd_cascade(const std::string& word, int steps, const std::string& format,
                const std::string& output) {
    json arr = json::array();
    std::ostringstream text;
    std::string cur = word;
    for (int k = 0; k <= steps; ++k) {
        auto rec = w::make_record(cur);
        if (format == "json") {
            json j;
            j["word"] = cur;
            j["alpha_minus_dec"] = dec(rec.alpha_minus);
            j["alpha_plus_dec"] = dec(rec.alpha_plus);
            j["n_count"] = rec.n;
            arr.push_back(j);
        } else {
            text << cur << "  (" << dec(rec.alpha_minus) << ", " << dec(rec.alpha_plus)
                 << (rec.closed_right ? "]" : ")") << "\n";
        }
        if (k == steps) break;
        try {
            cur = w::psi(cur);
        } catch (const std::domain_error&) {
            break;  // exceptional word: the chain stops here
        }
    }
    emit(format == "json" ? arr.dump(2) : text.str(), output);
    return 0;
}

int cmd_density(const std::string& alpha_s, const std::string& map_s, bool empirical,
                bool numeric, int truncation_depth, long iterations, uint64_t seed, int bins,
                const std::string& format, const std::string& output) {
    auto alpha = parse_alpha(alpha_s);
    if (empirical) {
        mc::SimConfig cfg;
        cfg.map = map_from_string(map_s);
        cfg.alpha = alpha.exact.to_double();
        cfg.iterations = iterations;
        cfg.seed = seed;
        cfg.bins = bins;
        auto res = mc::simulate(cfg);
        emit(format == "json" ? res.to_json() : res.histogram_csv(cfg.map), output);
        return 0;
    }
    if (numeric) {
        if (map_s != "S") throw std::invalid_argument("numeric densities are available for S only");
        auto nd = ms::density_S_numeric(alpha.exact.to_double(), truncation_depth);
        if (format == "json") {
            json j;
            j["cuts"] = nd.cuts;
            j["vals"] = nd.vals;
            j["tail_bound"] = nd.tail_bound;
            emit(j.dump(2), output);
        } else {
            std::ostringstream os;
            os << "x_left,value\n";
            for (size_t i = 0; i < nd.vals.size(); ++i)
                os << dec(nd.cuts[i]) << ',' << dec(nd.vals[i]) << '\n';
            emit(os.str(), output);
        }
        return 0;
    }
    auto f = map_s == "T" ? ms::density_T(alpha.exact) : ms::density_S(alpha.exact);
    emit(format == "json" ? f.to_json() : f.to_csv(), output);
    return 0;
}

int cmd_freq(const std::string& alpha_s, bool numeric, int truncation_depth, bool empirical,
             long iterations, uint64_t seed, const std::string& format,
             const std::string& output) {
    auto alpha = parse_alpha(alpha_s);
    json j;
    j["alpha"] = alpha_to_json(alpha);
    std::ostringstream text;
    if (empirical) {
        double fs = 0, ft = 0;
        for (auto map : {dyn::MapKind::S, dyn::MapKind::T}) {
            mc::SimConfig cfg;
            cfg.map = map;
            cfg.alpha = alpha.exact.to_double();
            cfg.iterations = iterations;
            cfg.seed = seed;
            auto res = mc::simulate(cfg);
            (map == dyn::MapKind::S ? fs : ft) = res.freq_by_digit.at(0);
        }
        j["freq_S"] = {{"value_dec", dec(fs)}, {"method", "empirical"}};
        j["freq_T"] = {{"value_dec", dec(ft)}, {"method", "empirical"}};
        text << "freq_S = " << dec(fs) << " (empirical)\nfreq_T = " << dec(ft)
             << " (empirical)";
    } else {
        auto fs = ms::freq_S(alpha.exact, numeric, truncation_depth);
        auto ft = ms::freq_T(alpha.exact, numeric, truncation_depth);
        j["freq_S"] = freq_to_json(fs);
        j["freq_T"] = freq_to_json(ft);
        text << "freq_S = " << (fs.is_exact ? fs.exact.to_string() + " = " + dec(fs.exact)
                                            : dec(fs.value) + " (numeric)")
             << "\nfreq_T = " << (ft.is_exact ? ft.exact.to_string() + " = " + dec(ft.exact)
                                              : dec(ft.value) + " (numeric)");
    }
    emit(format == "json" ? j.dump(2) : text.str(), output);
    return 0;
}

int cmd_sweep(int max_len, int points, const std::string& format, const std::string& output) {
    auto atlas = w::enumerate_matching_words(max_len);
    json arr = json::array();
    std::ostringstream csv;
    csv << "word,alpha_exact,alpha_dec,freq_S_exact,freq_S_dec,freq_T_exact,freq_T_dec\n";
    for (const auto& r : atlas) {
        for (int k = 1; k <= points; ++k) {
            GoldenNum a = r.alpha_minus +
                          (r.alpha_plus - r.alpha_minus) * GoldenNum(Rat(k, points + 1));
            GoldenNum fs = w::freq_S_closed_form(r, a);
            GoldenNum ft = GoldenNum(2) - fs.inverse();
            if (format == "json") {
                json j;
                j["word"] = r.d;
                j["alpha"] = {{"exact", json::parse(a.to_json())}, {"dec", dec(a)}};
                j["freq_S"] = {{"exact", json::parse(fs.to_json())}, {"dec", dec(fs)}};
                j["freq_T"] = {{"exact", json::parse(ft.to_json())}, {"dec", dec(ft)}};
                arr.push_back(j);
            } else {
                csv << r.d << ',' << a.to_string() << ',' << dec(a) << ',' << fs.to_string()
                    << ',' << dec(fs) << ',' << ft.to_string() << ',' << dec(ft) << '\n';
            }
        }
    }
    emit(format == "json" ? arr.dump(2) : csv.str(), output);
    return 0;
}

int cmd_verify(const std::string& data_dir, int criterion, const std::string& format,
               const std::string& output) {
    std::vector<golden::verify::CriterionResult> results;
    if (criterion > 0)
        results.push_back(golden::verify::run_criterion(criterion, data_dir));
    else
        results = golden::verify::run_all(data_dir);
    int failures = 0;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id},
                           {"name", r.name},
                           {"passed", r.passed},
                           {"detail", r.detail},
                           {"seconds", r.seconds}});
            if (!r.passed) ++failures;
        }
        emit(arr.dump(2), output);
    } else {
        std::ostringstream os;
        for (const auto& r : results) {
            char line[256];
            std::snprintf(line, sizeof line, "[%s] %2d %-22s %7.2fs  %s\n",
                          r.passed ? "pass" : "FAIL", r.id, r.name.c_str(), r.seconds,
                          r.detail.c_str());
            os << line;
            if (!r.passed) ++failures;
        }
        emit(os.str(), output);
    }
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dynamics of the symmetric and skewed golden maps"};
    app.require_subcommand(1);

    std::string alpha_s, x_s = "1", word, map_s = "S", format = "csv", output, data_dir;
    int n = 20, max_iter = 10000, max_len = 8, points = 1, bins = 200, truncation_depth = 64;
    int steps = 5, criterion = 0;
    long iterations = 1000000;
    uint64_t seed = 0;
    bool numeric = false, empirical = false, json_errors = false;

    const char* env_dir = std::getenv("GOLDEN_DATA_DIR");
    data_dir = env_dir ? env_dir : "tests/golden";

    auto add_common = [&](CLI::App* c) {
        c->add_flag("--json-errors", json_errors, "report errors as JSON on stdout");
        c->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--output", output, "output file (default stdout)");
    };

    auto* expand = app.add_subcommand("expand", "digit expansion of a point");
    expand->add_option("--alpha", alpha_s)->required();
    expand->add_option("--x", x_s, "starting point (default 1)");
    expand->add_option("--map", map_s)->check(CLI::IsMember({"S", "T", "B"}));
    expand->add_option("-n,--digits", n, "number of digits");
    add_common(expand);

    auto* match = app.add_subcommand("match", "matching classification of a parameter");
    match->add_option("--alpha", alpha_s)->required();
    match->add_option("--max-iter", max_iter);
    add_common(match);

    auto* atlas = app.add_subcommand("atlas", "enumerate matching intervals");
    atlas->add_option("--max-len", max_len);
    add_common(atlas);

    auto* interval = app.add_subcommand("interval", "endpoints of one matching interval");
    interval->add_option("--word", word)->required();
    add_common(interval);

    auto* cascade = app.add_subcommand("cascade", "cascade chain from a word");
    cascade->add_option("--word", word)->required();
    cascade->add_option("--steps", steps);
    add_common(cascade);

    auto* density = app.add_subcommand("density", "invariant density at a parameter");
    density->add_option("--alpha", alpha_s)->required();
    density->add_option("--map", map_s)->check(CLI::IsMember({"S", "T", "B"}));
    density->add_flag("--numeric", numeric, "truncated float-mode density");
    density->add_flag("--empirical", empirical, "Monte Carlo histogram");
    density->add_option("--truncation-depth", truncation_depth);
    density->add_option("--iterations", iterations);
    density->add_option("--seed", seed);
    density->add_option("--bins", bins);
    add_common(density);

    auto* freq = app.add_subcommand("freq", "digit-0 frequency at a parameter");
    freq->add_option("--alpha", alpha_s)->required();
    freq->add_flag("--numeric", numeric, "allow the truncated-density fallback");
    freq->add_flag("--empirical", empirical, "Monte Carlo estimate");
    freq->add_option("--truncation-depth", truncation_depth);
    freq->add_option("--iterations", iterations);
    freq->add_option("--seed", seed);
    add_common(freq);

    auto* sweep = app.add_subcommand("sweep", "frequency rows over all atlas intervals");
    sweep->add_option("--max-len", max_len);
    sweep->add_option("--points", points, "sample points per interval");
    add_common(sweep);

    auto* verify = app.add_subcommand("verify", "run the built-in checks");
    verify->add_option("--data-dir", data_dir, "reference data directory");
    verify->add_option("--criterion", criterion, "run a single check (1-12)");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (expand->parsed()) return cmd_expand(alpha_s, x_s, map_s, n, format, output);
        if (match->parsed()) return cmd_match(alpha_s, max_iter, format, output);
        if (atlas->parsed()) return cmd_atlas(max_len, format, output);
        if (interval->parsed()) return cmd_interval(word, format, output);
        if (cascade->parsed()) return cmd_cascade(word, steps, format, output);
        if (density->parsed())
            return cmd_density(alpha_s, map_s, empirical, numeric, truncation_depth, iterations,
                               seed, bins, format, output);
        if (freq->parsed())
            return cmd_freq(alpha_s, numeric, truncation_depth, empirical, iterations, seed,
                            format, output);
        if (sweep->parsed()) return cmd_sweep(max_len, points, format, output);
        if (verify->parsed()) return cmd_verify(data_dir, criterion, format, output);
    } catch (const std::exception& ex) {
        if (json_errors) {
            std::cout << json{{"error", ex.what()}}.dump() << '\n';
        } else {
            std::cerr << "error: " << ex.what() << '\n';
        }
        return 1;
    }
    return 0;
}
