#include "golden/golden_num.hpp"

#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace golden {

namespace {

BigInt floor_div(const BigInt& num, const BigInt& den) {
    // den > 0 assumed (cpp_rational keeps denominators positive)
    BigInt q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

BigInt floor_rat(const Rat& r) {
    return floor_div(numerator(r), denominator(r));
}

BigInt pow10(int d) {
    BigInt p = 1;
    for (int i = 0; i < d; ++i) p *= 10;
    return p;
}

std::string format_fixed(const BigInt& n, int digits) {
    // n is the value scaled by 10^digits, already rounded
    bool neg = n < 0;
    BigInt m = neg ? BigInt(-n) : n;
    std::string s = m.str();
    if ((int)s.size() < digits + 1) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (neg) out += '-';
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

}  // namespace

GoldenNum GoldenNum::power(long k) {
    GoldenNum result(Rat(1));
    // beta^{-1} = -1 + beta
    GoldenNum step = k >= 0 ? beta() : GoldenNum(Rat(-1), Rat(1));
    long n = k >= 0 ? k : -k;
    for (long i = 0; i < n; ++i) result *= step;
    return result;
}

int GoldenNum::sign() const {
    // a + b*beta = ((2a+b) + b*sqrt5)/2
    Rat u = 2 * a_ + b_;
    const Rat& v = b_;
    int su = u.sign();
    int sv = v.sign();
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // opposite signs: |u| vs sqrt5*|v| decided by u^2 vs 5 v^2 (never equal
    // for v != 0 since sqrt5 is irrational)
    return (u * u > 5 * v * v) ? su : sv;
}

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
    // (a1 + b1 B)(a2 + b2 B) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) B
    Rat a = a_ * o.a_ + b_ * o.b_;
    Rat b = a_ * o.b_ + o.a_ * b_ + b_ * o.b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

GoldenNum GoldenNum::inverse() const {
    // field norm: (a + b*beta)(a + b - b*beta) = a^2 + a b - b^2
    Rat norm = a_ * a_ + a_ * b_ - b_ * b_;
    if (norm == 0) throw std::domain_error("GoldenNum: division by zero");
    return GoldenNum((a_ + b_) / norm, -b_ / norm);
}

GoldenNum& GoldenNum::operator/=(const GoldenNum& o) {
    *this *= o.inverse();
    return *this;
}

GoldenNum operator+(GoldenNum x, const GoldenNum& y) { return x += y; }
GoldenNum operator-(GoldenNum x, const GoldenNum& y) { return x -= y; }
GoldenNum operator*(GoldenNum x, const GoldenNum& y) { return x *= y; }
GoldenNum operator/(GoldenNum x, const GoldenNum& y) { return x /= y; }

std::string GoldenNum::to_string() const {
    std::ostringstream os;
    os << numerator(a_) << '/' << denominator(a_) << (b_ < 0 ? " - " : " + ")
       << boost::multiprecision::abs(numerator(b_)) << '/' << denominator(b_) << "*b";
    return os.str();
}

GoldenNum GoldenNum::parse(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) t += c;
    static const std::regex full(R"((-?\d+)(?:/(\d+))?([+-])(\d+)(?:/(\d+))?\*b)");
    static const std::regex rat_only(R"((-?\d+)(?:/(\d+))?)");
    static const std::regex b_only(R"((-?)(?:(\d+)(?:/(\d+))?\*)?b)");
    std::smatch m;
    auto mk = [](const std::string& num, const std::string& den) {
        BigInt n = num.empty() ? BigInt(1) : BigInt(num);
        BigInt d = den.empty() ? BigInt(1) : BigInt(den);
        if (d == 0) throw std::invalid_argument("GoldenNum: zero denominator");
        return Rat(n, d);
    };
    if (std::regex_match(t, m, full)) {
        Rat b = mk(m[4], m[5]);
        if (m[3] == "-") b = -b;
        return GoldenNum(mk(m[1], m[2]), b);
    }
    if (std::regex_match(t, m, b_only)) {
        Rat b = mk(m[2], m[3]);
        if (m[1] == "-") b = -b;
        return GoldenNum(Rat(0), b);
    }
    if (std::regex_match(t, m, rat_only)) return GoldenNum(mk(m[1], m[2]));
    throw std::invalid_argument("GoldenNum: cannot parse \"" + s + "\"");
}

std::string GoldenNum::decimal(int digits) const {
    if (digits < 1) throw std::invalid_argument("decimal: digits must be >= 1");
    BigInt scale = pow10(digits);
    if (b_ == 0) {
        BigInt n = floor_rat(a_ * Rat(scale) + Rat(1, 2));
        return format_fixed(n, digits);
    }
    // x = (u + v*sqrt5)/2; refine a rational interval around sqrt5 by Newton
    // iteration (hi from above, 5/hi from below) until the rounded value is
    // pinned down.  x is irrational here, so x*10^d + 1/2 is never an
    // integer and the loop terminates.
    Rat u = 2 * a_ + b_;
    const Rat& v = b_;
    Rat hi(9, 4);
    for (;;) {
        hi = (hi + 5 / hi) / 2;
        Rat lo = 5 / hi;
        Rat xlo, xhi;
        if (v > 0) {
            xlo = (u + v * lo) / 2;
            xhi = (u + v * hi) / 2;
        } else {
            xlo = (u + v * hi) / 2;
            xhi = (u + v * lo) / 2;
        }
        BigInt nlo = floor_rat(xlo * Rat(scale) + Rat(1, 2));
        BigInt nhi = floor_rat(xhi * Rat(scale) + Rat(1, 2));
        if (nlo == nhi) return format_fixed(nlo, digits);
    }
}

std::string GoldenNum::to_json() const {
    std::ostringstream os;
    os << "{\"a\":[\"" << numerator(a_) << "\",\"" << denominator(a_) << "\"],\"b\":[\""
       << numerator(b_) << "\",\"" << denominator(b_) << "\"],\"dec\":\"" << decimal(15)
       << "\"}";
    return os.str();
}

double GoldenNum::to_double() const {
    return std::stod(decimal(19));
}

std::ostream& operator<<(std::ostream& os, const GoldenNum& x) {
    return os << x.to_string();
}

}  // namespace golden
