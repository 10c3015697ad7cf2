#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "golden/golden_num.hpp"
#include "golden/words.hpp"

namespace golden::measures {

/// Exact step function on [-1,1]: cuts_[0] = -1 < ... < cuts_[n] = 1, with
/// vals_[i] on [cuts_[i], cuts_[i+1]) (the last piece is closed at 1).
/// Adjacent pieces with equal values are merged on construction.
class StepFunction {
public:
    StepFunction() = default;
    StepFunction(std::vector<GoldenNum> cuts, std::vector<GoldenNum> vals);

    const std::vector<GoldenNum>& cuts() const { return cuts_; }
    const std::vector<GoldenNum>& vals() const { return vals_; }
    size_t pieces() const { return vals_.size(); }

    const GoldenNum& value_at(const GoldenNum& x) const;
    GoldenNum integral() const;
    /// Integral over [lo, hi] (clipped to [-1,1]).
    GoldenNum integrate(const GoldenNum& lo, const GoldenNum& hi) const;

    bool is_symmetric() const;

    /// CSV with header x_left_exact, x_left_dec, value_exact, value_dec.
    std::string to_csv() const;
    std::string to_json() const;
    /// (x, y) polyline: vertical segments at the jumps, for plotting.
    std::string to_plot_data() const;

private:
    std::vector<GoldenNum> cuts_;
    std::vector<GoldenNum> vals_;
};

struct NonMatchingExact : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invariant density of S_alpha as an exact step function.  Requires a
/// matching alpha or a Markov parameter (alpha in {1, 1+1/beta^3,
/// 1+1/beta^2}); throws NonMatchingExact otherwise.
StepFunction density_S(const GoldenNum& alpha);

/// Invariant density of T_alpha: g(x) = f(x/beta) / (beta nu(J_0)).
StepFunction density_T(const GoldenNum& alpha);

/// nu(J_0): the integral of f over [-1/beta, 1/beta].
GoldenNum measure_J0(const StepFunction& f);

/// Truncated float-mode density for arbitrary alpha, with the reported
/// bound on the mass ignored by the truncation.
struct NumericDensity {
    std::vector<double> cuts;
    std::vector<double> vals;
    double tail_bound = 0;
};
NumericDensity density_S_numeric(double alpha, int truncation_depth);

enum class FreqMethod { closed_form, integrated, empirical, limit_numeric };

struct FrequencyValue {
    GoldenNum exact;            // meaningful iff is_exact
    bool is_exact = false;
    double value = 0;           // always set
    FreqMethod method = FreqMethod::closed_form;
};

/// Digit-0 frequency of S_alpha.  Exact (closed_form) at matching alpha and
/// alpha = 1; exact (integrated) at the other Markov parameters; otherwise
/// limit_numeric from a truncated density when allow_numeric is set.
FrequencyValue freq_S(const GoldenNum& alpha, bool allow_numeric = false,
                      int truncation_depth = 64);
/// f_T = 2 - 1/f_S.
FrequencyValue freq_T(const GoldenNum& alpha, bool allow_numeric = false,
                      int truncation_depth = 64);

/// Closed-form frequency from a matching record, exact on I_d.
GoldenNum freq_S_on_interval(const words::MatchingRecord& rec, const GoldenNum& alpha);

}  // namespace golden::measures
