#include "golden/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace golden::montecarlo {

namespace dyn = golden::dynamics;

namespace {

constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

SplitMix64::SplitMix64(uint64_t seed, uint64_t stream) : state_(seed ^ mix(stream + 1)) {}

uint64_t SplitMix64::next() {
    state_ += kGamma;
    return mix(state_);
}

double SplitMix64::next_unit() { return (next() >> 11) * 0x1.0p-53; }

double SplitMix64::next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

SimResult simulate(const SimConfig& cfg) {
    if (cfg.iterations < 1 || cfg.bins < 2)
        throw std::invalid_argument("simulate: iterations >= 1 and bins >= 2 required");
    auto t0 = std::chrono::steady_clock::now();
    SplitMix64 rng(cfg.seed);

    const bool is_b = cfg.map == dyn::MapKind::B;
    const double lo = is_b ? 0.0 : -1.0;
    const double hi = 1.0;
    double x = cfg.random_x0 ? rng.next_in(lo, hi) : cfg.x0;

    SimResult res;
    res.histogram.assign(cfg.bins, 0);
    res.freq_by_digit[-1] = 0;
    res.freq_by_digit[0] = 0;
    res.freq_by_digit[1] = 0;
    std::map<int, long> tally = {{-1, 0}, {0, 0}, {1, 0}};

    for (long i = 0; i < cfg.burn_in; ++i)
        x = dyn::step_float(cfg.map, cfg.alpha, x, cfg.guard).x;

    for (long i = 0; i < cfg.iterations; ++i) {
        auto st = dyn::step_float(cfg.map, cfg.alpha, x, cfg.guard);
        if (st.ambiguous) {
            ++res.boundary_hits;
        } else {
            ++tally[st.digit];
            ++res.tallied;
            int bin = (int)((x - lo) / (hi - lo) * cfg.bins);
            if (bin >= cfg.bins) bin = cfg.bins - 1;
            if (bin < 0) bin = 0;
            ++res.histogram[bin];
        }
        x = st.x;
    }
    for (auto& [digit, count] : tally)
        res.freq_by_digit[digit] = res.tallied ? (double)count / (double)res.tallied : 0.0;
    res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

std::vector<double> normalize_histogram(const std::vector<long>& hist, double domain_len) {
    long total = 0;
    for (long c : hist) total += c;
    std::vector<double> out(hist.size(), 0.0);
    if (!total) return out;
    double bin_width = domain_len / (double)hist.size();
    for (size_t i = 0; i < hist.size(); ++i)
        out[i] = (double)hist[i] / ((double)total * bin_width);
    return out;
}

std::vector<double> empirical_density(const SimConfig& cfg) {
    SimResult res = simulate(cfg);
    double domain = cfg.map == dyn::MapKind::B ? 1.0 : 2.0;
    return normalize_histogram(res.histogram, domain);
}

SimResult merge(const SimResult& a, const SimResult& b) {
    if (a.histogram.size() != b.histogram.size())
        throw std::invalid_argument("merge: bin counts differ");
    SimResult out;
    out.histogram.resize(a.histogram.size());
    for (size_t i = 0; i < out.histogram.size(); ++i)
        out.histogram[i] = a.histogram[i] + b.histogram[i];
    out.boundary_hits = a.boundary_hits + b.boundary_hits;
    out.tallied = a.tallied + b.tallied;
    out.wall_time = a.wall_time + b.wall_time;
    for (int d : {-1, 0, 1}) {
        double ca = a.freq_by_digit.count(d) ? a.freq_by_digit.at(d) * (double)a.tallied : 0;
        double cb = b.freq_by_digit.count(d) ? b.freq_by_digit.at(d) * (double)b.tallied : 0;
        out.freq_by_digit[d] = out.tallied ? (ca + cb) / (double)out.tallied : 0.0;
    }
    return out;
}

std::string SimResult::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"freq\":{";
    bool first = true;
    for (const auto& [d, f] : freq_by_digit) {
        os << (first ? "" : ",") << "\"" << d << "\":" << f;
        first = false;
    }
    os << "},\"boundary_hits\":" << boundary_hits << ",\"tallied\":" << tallied
       << ",\"wall_time\":" << wall_time << ",\"histogram\":[";
    for (size_t i = 0; i < histogram.size(); ++i) os << (i ? "," : "") << histogram[i];
    os << "]}\n";
    return os.str();
}

std::string SimResult::histogram_csv(dyn::MapKind map) const {
    double lo = map == dyn::MapKind::B ? 0.0 : -1.0;
    double domain = 1.0 - lo;
    auto dens = normalize_histogram(histogram, domain);
    double w = domain / (double)histogram.size();
    std::ostringstream os;
    os.precision(15);
    os << "bin_left,bin_right,density_estimate\n";
    for (size_t i = 0; i < histogram.size(); ++i)
        os << lo + w * (double)i << ',' << lo + w * (double)(i + 1) << ',' << dens[i] << '\n';
    return os.str();
}

}  // namespace golden::montecarlo
