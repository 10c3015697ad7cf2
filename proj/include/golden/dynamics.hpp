#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golden/golden_num.hpp"

namespace golden::dynamics {

enum class MapKind { S, T, B };

/// Branch alphabet {-1, 0, 1}; the index t with x in J_t, where
/// J_{-1} = [-1, -1/beta), J_0 = [-1/beta, 1/beta], J_1 = (1/beta, 1].
/// J_0 is closed, so branch_index(+-1/beta) = 0.
int branch_index(const GoldenNum& x);

/// S_alpha(x) = beta*x - t(x)*alpha on [-1,1].
GoldenNum step_S(const GoldenNum& alpha, const GoldenNum& x);

/// T_alpha(x) = beta^{1+|t(x)|}*x - t(x)*beta*alpha on [-1,1]; the jump
/// transformation of S_alpha over J_0.
GoldenNum step_T(const GoldenNum& alpha, const GoldenNum& x);

/// B(x) = beta*x (mod 1) on [0,1], with digit b(x) = 1 iff x >= 1/beta.
GoldenNum step_B(const GoldenNum& x);
int branch_index_B(const GoldenNum& x);

/// First n digits of the chosen expansion of x.  Exact, bit-reproducible.
std::vector<int> expansion(MapKind map, const GoldenNum& alpha, const GoldenNum& x, int n);

/// Compact string over {-,0,+}, e.g. "+00+" for digits 1,0,0,1.
std::string digits_to_string(const std::vector<int>& digits);
std::vector<int> digits_from_string(const std::string& s);

struct MatchingOutcome {
    enum class Kind { Matched, Markov, NotFound } kind;
    /// Matching index m(alpha) when kind == Matched.
    int m = 0;
    /// Exact revisit data of the orbit pair when kind == Markov.
    int preperiod = 0;
    int period = 0;

    bool matched() const { return kind == Kind::Matched; }
};

/// Runs the orbits of 1 and 1-alpha under S_alpha until they meet, until the
/// exact orbit pair revisits a previous state (Markov, no matching), or until
/// max_iter.  The four-state difference automaton and the hole criterion
/// S^j(1) in (1/beta, alpha/beta] are tracked simultaneously; disagreement is
/// an internal error.
MatchingOutcome matching_index(const GoldenNum& alpha, int max_iter = 10000);

enum class DiffState { zero, alpha_over_beta, alpha, beta_alpha };

/// Value class of S_alpha^j(1) - S_alpha^j(1-alpha).
DiffState diff_state(const GoldenNum& alpha, int j);

enum class EllWhich { one, one_minus_alpha };

/// ell_alpha(x): the infimum index j with S^j(1) in (1/beta, alpha/beta]
/// (resp. S^j(1-alpha) in [-alpha/beta, -1/beta)); nullopt if not reached
/// within max_iter.  Requires alpha != 1.
std::optional<int> ell(const GoldenNum& alpha, EllWhich which, int max_iter = 10000);

/// Float-mode orbit step with a guard band around the branch boundaries:
/// points within `guard` of a boundary set the ambiguous flag.
struct FloatStep {
    double x;
    int digit;
    bool ambiguous;
};
FloatStep step_float(MapKind map, double alpha, double x, double guard = 1e-12);

}  // namespace golden::dynamics
