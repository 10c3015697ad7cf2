#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <iosfwd>
#include <string>

namespace golden {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// An element a + b*beta of the field Q(beta), where beta = (1+sqrt5)/2 is
/// the golden mean, the positive root of beta^2 = beta + 1.  The basis {1,
/// beta} is canonical: products are reduced with beta^2 = beta + 1, so the
/// representation (a, b) of a field element is unique.  All comparisons are
/// exact; no floating point enters any decision path.
class GoldenNum {
public:
    GoldenNum() = default;
    GoldenNum(Rat a, Rat b = Rat(0)) : a_(std::move(a)), b_(std::move(b)) {}
    GoldenNum(long a) : a_(a) {}

    static GoldenNum beta() { return GoldenNum(Rat(0), Rat(1)); }
    /// 2*beta - 1.
    static GoldenNum sqrt5() { return GoldenNum(Rat(-1), Rat(2)); }
    /// beta^k, any integer k; beta^{-1} = beta - 1.
    static GoldenNum power(long k);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    /// Exact sign of the real number a + b*beta, by integer arithmetic:
    /// writing it as ((2a+b) + b*sqrt5)/2, when the two terms have opposite
    /// signs compare (2a+b)^2 against 5 b^2.
    int sign() const;

    GoldenNum operator-() const { return GoldenNum(-a_, -b_); }
    GoldenNum& operator+=(const GoldenNum& o);
    GoldenNum& operator-=(const GoldenNum& o);
    GoldenNum& operator*=(const GoldenNum& o);
    GoldenNum& operator/=(const GoldenNum& o);

    /// Multiplicative inverse; throws std::domain_error on zero.
    GoldenNum inverse() const;

    /// "p/q + r/s*b" in lowest terms, "b" denoting beta.
    std::string to_string() const;
    static GoldenNum parse(const std::string& s);

    /// Correctly rounded fixed-point decimal with `digits` fractional
    /// digits, produced by interval refinement of sqrt5 (bit-reproducible).
    std::string decimal(int digits) const;

    /// JSON object {"a":["p","q"],"b":["r","s"],"dec":"..."} as a string.
    std::string to_json() const;

    double to_double() const;

    friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const GoldenNum& x, const GoldenNum& y) { return !(x == y); }

private:
    Rat a_{0};
    Rat b_{0};
};

GoldenNum operator+(GoldenNum x, const GoldenNum& y);
GoldenNum operator-(GoldenNum x, const GoldenNum& y);
GoldenNum operator*(GoldenNum x, const GoldenNum& y);
GoldenNum operator/(GoldenNum x, const GoldenNum& y);

inline bool operator<(const GoldenNum& x, const GoldenNum& y) { return (x - y).sign() < 0; }
inline bool operator>(const GoldenNum& x, const GoldenNum& y) { return (x - y).sign() > 0; }
inline bool operator<=(const GoldenNum& x, const GoldenNum& y) { return (x - y).sign() <= 0; }
inline bool operator>=(const GoldenNum& x, const GoldenNum& y) { return (x - y).sign() >= 0; }

std::ostream& operator<<(std::ostream& os, const GoldenNum& x);

/// Total order on the canonical representation (a, then b); used for set and
/// map keys where only consistency matters, not the real-number order.
struct GoldenNumReprLess {
    bool operator()(const GoldenNum& x, const GoldenNum& y) const {
        if (x.a() != y.a()) return x.a() < y.a();
        return x.b() < y.b();
    }
};

}  // namespace golden
