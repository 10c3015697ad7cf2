#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "golden/dynamics.hpp"

namespace golden::montecarlo {

/// SplitMix64 counter-based generator: output(k) = mix(seed + k * GAMMA).
/// Stateless per draw, so chains are reproducible and cheap to split; a
/// worker stream is derived by hashing the stream index into the seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed, uint64_t stream = 0);
    uint64_t next();
    /// Uniform in [0,1).
    double next_unit();
    /// Uniform in [lo, hi).
    double next_in(double lo, double hi);

private:
    uint64_t state_;
};

struct SimConfig {
    dynamics::MapKind map = dynamics::MapKind::S;
    double alpha = 1.0;
    bool random_x0 = true;
    double x0 = 0.0;            // used when !random_x0
    long iterations = 1000000;
    long burn_in = 1000;
    uint64_t seed = 0;
    int bins = 200;
    double guard = 1e-12;
};

struct SimResult {
    std::map<int, double> freq_by_digit;
    std::vector<long> histogram;   // over [-1,1] for S/T, [0,1] for B
    long boundary_hits = 0;
    long tallied = 0;
    double wall_time = 0;

    std::string to_json() const;
    /// CSV: bin_left, bin_right, density_estimate.
    std::string histogram_csv(dynamics::MapKind map) const;
};

/// Deterministic single-chain simulation; identical config gives an
/// identical result bit for bit.
SimResult simulate(const SimConfig& cfg);

/// Histogram from simulate(), normalized so the piecewise-constant density
/// estimate integrates to 1.
std::vector<double> empirical_density(const SimConfig& cfg);
std::vector<double> normalize_histogram(const std::vector<long>& hist, double domain_len);

/// Tally merge for independent chains; order-independent by construction.
SimResult merge(const SimResult& a, const SimResult& b);

}  // namespace golden::montecarlo
