#include "golden/dynamics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace golden::dynamics {

namespace {

const GoldenNum kOne(Rat(1));
const GoldenNum kBeta = GoldenNum::beta();
const GoldenNum kInvBeta = GoldenNum::power(-1);  // 1/beta = -1 + beta

void check_domain(const GoldenNum& x, const GoldenNum& lo, const GoldenNum& hi) {
    if (x < lo || x > hi) throw std::domain_error("point outside map domain");
}

}  // namespace

int branch_index(const GoldenNum& x) {
    check_domain(x, -kOne, kOne);
    if (x < -kInvBeta) return -1;
    if (x > kInvBeta) return 1;
    return 0;
}

GoldenNum step_S(const GoldenNum& alpha, const GoldenNum& x) {
    int t = branch_index(x);
    GoldenNum y = kBeta * x;
    if (t == 1) y -= alpha;
    if (t == -1) y += alpha;
    return y;
}

GoldenNum step_T(const GoldenNum& alpha, const GoldenNum& x) {
    int t = branch_index(x);
    if (t == 0) return kBeta * x;
    GoldenNum y = kBeta * kBeta * x;
    GoldenNum shift = kBeta * alpha;
    return t == 1 ? y - shift : y + shift;
}

int branch_index_B(const GoldenNum& x) {
    check_domain(x, GoldenNum(0), kOne);
    return x >= kInvBeta ? 1 : 0;
}

GoldenNum step_B(const GoldenNum& x) {
    int b = branch_index_B(x);
    GoldenNum y = kBeta * x;
    if (b == 1) y -= kOne;
    return y;
}

std::vector<int> expansion(MapKind map, const GoldenNum& alpha, const GoldenNum& x, int n) {
    if (n < 1) throw std::invalid_argument("expansion: n must be >= 1");
    std::vector<int> digits;
    digits.reserve(n);
    GoldenNum p = x;
    for (int j = 0; j < n; ++j) {
        switch (map) {
            case MapKind::S:
                digits.push_back(branch_index(p));
                p = step_S(alpha, p);
                break;
            case MapKind::T:
                digits.push_back(branch_index(p));
                p = step_T(alpha, p);
                break;
            case MapKind::B:
                digits.push_back(branch_index_B(p));
                p = step_B(p);
                break;
        }
    }
    return digits;
}

std::string digits_to_string(const std::vector<int>& digits) {
    std::string s;
    s.reserve(digits.size());
    for (int d : digits) s += (d == 1 ? '+' : d == -1 ? '-' : '0');
    return s;
}

std::vector<int> digits_from_string(const std::string& s) {
    std::vector<int> d;
    d.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '+': case '1': d.push_back(1); break;
            case '0': d.push_back(0); break;
            case '-': d.push_back(-1); break;
            default: throw std::invalid_argument("bad digit character");
        }
    }
    return d;
}

namespace {

// Classifies x - y against {0, alpha/beta, alpha, beta*alpha}; throws if the
// difference leaves the four-state set (would contradict the orbit automaton).
DiffState classify_diff(const GoldenNum& alpha, const GoldenNum& diff) {
    if (diff.is_zero()) return DiffState::zero;
    if (diff == alpha * kInvBeta) return DiffState::alpha_over_beta;
    if (diff == alpha) return DiffState::alpha;
    if (diff == kBeta * alpha) return DiffState::beta_alpha;
    throw std::logic_error("orbit difference left the four-state set");
}

bool in_upper_hole(const GoldenNum& alpha, const GoldenNum& x) {
    return x > kInvBeta && x <= alpha * kInvBeta;
}

bool in_lower_hole(const GoldenNum& alpha, const GoldenNum& x) {
    return x >= -(alpha * kInvBeta) && x < -kInvBeta;
}

}  // namespace

MatchingOutcome matching_index(const GoldenNum& alpha, int max_iter) {
    if (max_iter < 1) throw std::invalid_argument("matching_index: max_iter must be >= 1");
    if (alpha < kOne || alpha > kBeta) throw std::domain_error("alpha outside [1, beta]");

    GoldenNum x = kOne;           // orbit of 1
    GoldenNum y = kOne - alpha;   // orbit of 1 - alpha
    std::optional<int> hole_hit;  // smallest j with an orbit in the hole

    std::map<std::pair<GoldenNum, GoldenNum>, int,
             decltype([](const auto& p, const auto& q) {
                 GoldenNumReprLess less;
                 if (p.first != q.first) return less(p.first, q.first);
                 return less(p.second, q.second);
             })>
        seen;
    seen.emplace(std::make_pair(x, y), 0);

    for (int j = 1; j <= max_iter; ++j) {
        if (!hole_hit && (in_upper_hole(alpha, x) || in_lower_hole(alpha, y)))
            hole_hit = j - 1;
        x = step_S(alpha, x);
        y = step_S(alpha, y);
        DiffState st = classify_diff(alpha, x - y);
        if (st == DiffState::zero) {
            // hole criterion must agree: m in {ell+1, ell+2}
            if (!hole_hit) throw std::logic_error("matching without hole entry");
            if (j < *hole_hit + 1 || j > *hole_hit + 2)
                throw std::logic_error("matching index disagrees with hole criterion");
            return {MatchingOutcome::Kind::Matched, j, 0, 0};
        }
        auto [it, inserted] = seen.emplace(std::make_pair(x, y), j);
        if (!inserted)
            return {MatchingOutcome::Kind::Markov, 0, it->second, j - it->second};
    }
    return {MatchingOutcome::Kind::NotFound, 0, 0, 0};
}

DiffState diff_state(const GoldenNum& alpha, int j) {
    GoldenNum x = kOne;
    GoldenNum y = kOne - alpha;
    for (int i = 0; i < j; ++i) {
        x = step_S(alpha, x);
        y = step_S(alpha, y);
    }
    return classify_diff(alpha, x - y);
}

std::optional<int> ell(const GoldenNum& alpha, EllWhich which, int max_iter) {
    if (alpha == kOne) throw std::domain_error("ell undefined for alpha = 1");
    GoldenNum p = which == EllWhich::one ? kOne : kOne - alpha;
    for (int j = 0; j <= max_iter; ++j) {
        bool hit = which == EllWhich::one ? in_upper_hole(alpha, p) : in_lower_hole(alpha, p);
        if (hit) return j;
        p = step_S(alpha, p);
    }
    return std::nullopt;
}

FloatStep step_float(MapKind map, double alpha, double x, double guard) {
    static const double beta = (1.0 + std::sqrt(5.0)) / 2.0;
    static const double inv_beta = beta - 1.0;
    FloatStep r{};
    switch (map) {
        case MapKind::S:
        case MapKind::T: {
            r.ambiguous = std::abs(std::abs(x) - inv_beta) < guard;
            int t = x < -inv_beta ? -1 : (x > inv_beta ? 1 : 0);
            r.digit = t;
            if (map == MapKind::S)
                r.x = beta * x - t * alpha;
            else
                r.x = t == 0 ? beta * x : beta * beta * x - t * beta * alpha;
            break;
        }
        case MapKind::B: {
            r.ambiguous = std::abs(x - inv_beta) < guard;
            int b = x >= inv_beta ? 1 : 0;
            r.digit = b;
            r.x = beta * x - b;
            break;
        }
    }
    if (!std::isfinite(r.x)) throw std::runtime_error("float orbit diverged");
    return r;
}

}  // namespace golden::dynamics
