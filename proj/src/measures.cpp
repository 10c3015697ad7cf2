#include "golden/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "golden/dynamics.hpp"

namespace golden::measures {

namespace dyn = golden::dynamics;

namespace {

const GoldenNum kOne(1);
const GoldenNum kMinusOne(-1);

}  // namespace

StepFunction::StepFunction(std::vector<GoldenNum> cuts, std::vector<GoldenNum> vals) {
    if (cuts.size() != vals.size() + 1 || vals.empty())
        throw std::invalid_argument("StepFunction: size mismatch");
    if (cuts.front() != kMinusOne || cuts.back() != kOne)
        throw std::invalid_argument("StepFunction: domain must be [-1,1]");
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (!(cuts[i] < cuts[i + 1]))
            throw std::invalid_argument("StepFunction: cuts not increasing");
    // merge equal neighbours
    cuts_.push_back(cuts[0]);
    for (size_t i = 0; i < vals.size(); ++i) {
        if (!vals_.empty() && vals_.back() == vals[i]) {
            cuts_.back() = cuts[i + 1];
        } else {
            vals_.push_back(vals[i]);
            cuts_.push_back(cuts[i + 1]);
        }
    }
}

const GoldenNum& StepFunction::value_at(const GoldenNum& x) const {
    if (x < cuts_.front() || x > cuts_.back())
        throw std::out_of_range("StepFunction::value_at: x outside [-1,1]");
    for (size_t i = 0; i < vals_.size(); ++i)
        if (x < cuts_[i + 1]) return vals_[i];
    return vals_.back();  // x == 1
}

GoldenNum StepFunction::integral() const { return integrate(cuts_.front(), cuts_.back()); }

GoldenNum StepFunction::integrate(const GoldenNum& lo, const GoldenNum& hi) const {
    GoldenNum a = std::max(lo, cuts_.front());
    GoldenNum b = std::min(hi, cuts_.back());
    GoldenNum acc(0);
    if (!(a < b)) return acc;
    for (size_t i = 0; i < vals_.size(); ++i) {
        GoldenNum l = std::max(a, cuts_[i]);
        GoldenNum r = std::min(b, cuts_[i + 1]);
        if (l < r) acc += vals_[i] * (r - l);
    }
    return acc;
}

bool StepFunction::is_symmetric() const {
    for (size_t i = 0; i < vals_.size(); ++i) {
        GoldenNum mid = (cuts_[i] + cuts_[i + 1]) / GoldenNum(2);
        if (value_at(mid) != value_at(-mid)) return false;
    }
    return true;
}

std::string StepFunction::to_csv() const {
    std::ostringstream os;
    os << "x_left_exact,x_left_dec,value_exact,value_dec\n";
    for (size_t i = 0; i < vals_.size(); ++i)
        os << cuts_[i].to_string() << ',' << cuts_[i].decimal(15) << ',' << vals_[i].to_string()
           << ',' << vals_[i].decimal(15) << '\n';
    return os.str();
}

std::string StepFunction::to_json() const {
    std::ostringstream os;
    os << "{\"pieces\":[";
    for (size_t i = 0; i < vals_.size(); ++i)
        os << (i ? "," : "") << "\n  {\"x_left\":" << cuts_[i].to_json()
           << ",\"x_right\":" << cuts_[i + 1].to_json() << ",\"value\":" << vals_[i].to_json()
           << "}";
    os << "\n]}\n";
    return os.str();
}

std::string StepFunction::to_plot_data() const {
    std::ostringstream os;
    for (size_t i = 0; i < vals_.size(); ++i) {
        os << cuts_[i].decimal(15) << ' ' << vals_[i].decimal(15) << '\n'
           << cuts_[i + 1].decimal(15) << ' ' << vals_[i].decimal(15) << '\n';
    }
    return os.str();
}

namespace {

// Accumulates weighted indicator intervals [a, b) and emits a StepFunction.
class Accumulator {
public:
    void add(const GoldenNum& a, const GoldenNum& b, const GoldenNum& w) {
        if (b < a) throw std::logic_error("density: reversed indicator interval");
        if (a == b) return;
        deltas_[a] += w;
        deltas_[b] -= w;
    }

    StepFunction build_normalized() const {
        std::map<GoldenNum, GoldenNum, ReallessCmp> d = deltas_;
        d[kMinusOne];  // ensure endpoints present
        d[kOne];
        std::vector<GoldenNum> cuts, vals;
        GoldenNum level(0);
        for (const auto& [x, delta] : d) {
            if (!cuts.empty()) vals.push_back(level);
            cuts.push_back(x);
            level += delta;
        }
        StepFunction raw(std::move(cuts), std::move(vals));
        GoldenNum total = raw.integral();
        std::vector<GoldenNum> nv;
        for (const auto& v : raw.vals()) nv.push_back(v / total);
        return StepFunction(raw.cuts(), std::move(nv));
    }

private:
    struct ReallessCmp {
        bool operator()(const GoldenNum& x, const GoldenNum& y) const { return x < y; }
    };
    std::map<GoldenNum, GoldenNum, ReallessCmp> deltas_;
};

}  // namespace

StepFunction density_S(const GoldenNum& alpha) {
    auto outcome = dyn::matching_index(alpha);
    if (outcome.kind == dyn::MatchingOutcome::Kind::NotFound)
        throw NonMatchingExact("density_S: alpha is neither matching nor Markov");

    Accumulator acc;
    auto add_pair = [&acc](const GoldenNum& y, const GoldenNum& x, const GoldenNum& w) {
        // [S^t(1-a), S^t(1)) and its mirror [S^t(-1), S^t(a-1))
        acc.add(y, x, w);
        acc.add(-x, -y, w);
    };

    GoldenNum x(1), y = kOne - alpha;
    if (outcome.matched()) {
        GoldenNum w = GoldenNum::power(-1);
        for (int t = 0; t < outcome.m; ++t) {
            add_pair(y, x, w);
            x = dyn::step_S(alpha, x);
            y = dyn::step_S(alpha, y);
            w *= GoldenNum::power(-1);
        }
    } else {
        // Markov: the orbit pair is eventually periodic; the tail of the sum
        // is the one-period sum scaled by sum_k beta^{-kp} = beta^p/(beta^p-1).
        int p0 = outcome.preperiod, p = outcome.period;
        GoldenNum w = GoldenNum::power(-1);
        for (int t = 0; t < p0; ++t) {
            add_pair(y, x, w);
            x = dyn::step_S(alpha, x);
            y = dyn::step_S(alpha, y);
            w *= GoldenNum::power(-1);
        }
        GoldenNum bp = GoldenNum::power(p);
        GoldenNum factor = bp / (bp - kOne);
        for (int t = 0; t < p; ++t) {
            add_pair(y, x, w * factor);
            x = dyn::step_S(alpha, x);
            y = dyn::step_S(alpha, y);
            w *= GoldenNum::power(-1);
        }
    }
    return acc.build_normalized();
}

StepFunction density_T(const GoldenNum& alpha) {
    StepFunction f = density_S(alpha);
    GoldenNum nu0 = measure_J0(f);
    GoldenNum inv_beta = GoldenNum::power(-1);
    std::vector<GoldenNum> cuts{kMinusOne}, vals;
    for (size_t i = 0; i < f.vals().size(); ++i) {
        const GoldenNum& l = f.cuts()[i];
        const GoldenNum& r = f.cuts()[i + 1];
        if (r <= -inv_beta || l >= inv_beta) continue;  // outside J_0
        GoldenNum rr = std::min(r, inv_beta) * GoldenNum::beta();
        vals.push_back(f.vals()[i] / (GoldenNum::beta() * nu0));
        cuts.push_back(rr < kOne ? rr : kOne);
    }
    cuts.back() = kOne;
    return StepFunction(std::move(cuts), std::move(vals));
}

GoldenNum measure_J0(const StepFunction& f) {
    GoldenNum ib = GoldenNum::power(-1);
    return f.integrate(-ib, ib);
}

NumericDensity density_S_numeric(double alpha, int truncation_depth) {
    if (truncation_depth < 1) throw std::invalid_argument("truncation_depth < 1");
    const double beta = 1.6180339887498948482;
    std::map<double, double> deltas;
    deltas[-1.0];
    deltas[1.0];
    double x = 1.0, y = 1.0 - alpha;
    double w = 1.0 / beta;
    double total = 0;
    for (int t = 0; t < truncation_depth; ++t) {
        if (y < x) {
            deltas[y] += w;
            deltas[x] -= w;
            deltas[-x] += w;
            deltas[-y] -= w;
            total += 2 * w * (x - y);
        }
        x = dyn::step_float(dyn::MapKind::S, alpha, x).x;
        y = dyn::step_float(dyn::MapKind::S, alpha, y).x;
        w /= beta;
    }
    // remaining terms each bounded by 2 beta^{-(t+1)} * beta*alpha
    double tail = 2 * beta * alpha * (w * beta / (beta - 1)) / (total > 0 ? total : 1);
    NumericDensity out;
    double level = 0;
    for (const auto& [cut, delta] : deltas) {
        if (!out.cuts.empty()) out.vals.push_back(level / total);
        out.cuts.push_back(cut);
        level += delta;
    }
    out.tail_bound = tail;
    return out;
}

GoldenNum freq_S_on_interval(const words::MatchingRecord& rec, const GoldenNum& alpha) {
    return words::freq_S_closed_form(rec, alpha);
}

FrequencyValue freq_S(const GoldenNum& alpha, bool allow_numeric, int truncation_depth) {
    FrequencyValue out;
    if (alpha == kOne) {
        // (5+sqrt5)/10 = (2+beta)/5
        out.exact = (GoldenNum(2) + GoldenNum::beta()) / GoldenNum(5);
        out.is_exact = true;
        out.method = FreqMethod::closed_form;
        out.value = out.exact.to_double();
        return out;
    }
    auto outcome = dyn::matching_index(alpha);
    if (outcome.matched()) {
        auto digits = dyn::expansion(dyn::MapKind::S, alpha, kOne, outcome.m);
        words::Word01 word;
        for (int d : digits) word += char('0' + d);
        auto rec = words::make_record(word);
        out.exact = freq_S_on_interval(rec, alpha);
        out.is_exact = true;
        out.method = FreqMethod::closed_form;
        out.value = out.exact.to_double();
        return out;
    }
    if (outcome.kind == dyn::MatchingOutcome::Kind::Markov) {
        out.exact = measure_J0(density_S(alpha));
        out.is_exact = true;
        out.method = FreqMethod::integrated;
        out.value = out.exact.to_double();
        return out;
    }
    if (!allow_numeric) throw NonMatchingExact("freq_S: non-matching alpha (pass allow_numeric)");
    auto nd = density_S_numeric(alpha.to_double(), truncation_depth);
    double ib = 1 / 1.6180339887498948482;
    double acc = 0;
    for (size_t i = 0; i < nd.vals.size(); ++i) {
        double l = std::max(nd.cuts[i], -ib);
        double r = std::min(nd.cuts[i + 1], ib);
        if (l < r) acc += nd.vals[i] * (r - l);
    }
    out.is_exact = false;
    out.method = FreqMethod::limit_numeric;
    out.value = acc;
    return out;
}

FrequencyValue freq_T(const GoldenNum& alpha, bool allow_numeric, int truncation_depth) {
    FrequencyValue s = freq_S(alpha, allow_numeric, truncation_depth);
    FrequencyValue out = s;
    if (s.is_exact) {
        out.exact = GoldenNum(2) - s.exact.inverse();
        out.value = out.exact.to_double();
    } else {
        out.value = 2 - 1 / s.value;
    }
    return out;
}

}  // namespace golden::measures
