#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fsigma {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact dyadic rational n / 2^k.  Normalized so that k == 0 or n is odd;
// closed under +, -, * and multiplication by powers of two, which is all
// the arithmetic dyadic PL homeomorphisms ever need.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : num_(v) {}
    Dyadic(BigInt v) : num_(std::move(v)) {}
    Dyadic(BigInt numerator, unsigned exponent)
        : num_(std::move(numerator)), exp_(exponent) {
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    // value * 2^e, exact for any sign of e
    Dyadic mul_pow2(long e) const {
        if (e >= 0) {
            unsigned k = exp_ < static_cast<unsigned long>(e)
                             ? exp_
                             : static_cast<unsigned>(e);
            return Dyadic(num_ << (static_cast<unsigned>(e) - k), exp_ - k);
        }
        return Dyadic(num_, exp_ + static_cast<unsigned>(-e));
    }

    static Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
        return (a + b).mul_pow2(-1);
    }

    Rational to_rational() const {
        return Rational(num_, BigInt(1) << exp_);
    }

    // -1 / 0 / +1
    static int compare(const Dyadic& a, const Dyadic& b) {
        unsigned m = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        BigInt la = a.num_ << (m - a.exp_);
        BigInt lb = b.num_ << (m - b.exp_);
        return la < lb ? -1 : (lb < la ? 1 : 0);
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned m = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return Dyadic((a.num_ << (m - a.exp_)) + (b.num_ << (m - b.exp_)), m);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        unsigned m = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        return Dyadic((a.num_ << (m - a.exp_)) - (b.num_ << (m - b.exp_)), m);
    }
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num_, a.exp_); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

    // "13/16", "-3/4", "1", "0"
    std::string str() const {
        if (exp_ == 0) return num_.str();
        return num_.str() + "/" + (BigInt(1) << exp_).str();
    }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        if (exp_ == 0) return;
        unsigned tz = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
        unsigned k = tz < exp_ ? tz : exp_;
        num_ >>= k;
        exp_ -= k;
    }

    BigInt num_{0};
    unsigned exp_{0};
};

inline bool in_unit_interval(const Dyadic& t) {
    return t >= Dyadic(0) && t <= Dyadic(1);
}

// If d == 2^e for some integer e, return e.
inline std::optional<long> log2_exact(const Dyadic& d) {
    if (d.numerator() <= 0) return std::nullopt;
    const BigInt& n = d.numerator();
    if ((n & (n - 1)) != 0) return std::nullopt;
    long top = static_cast<long>(boost::multiprecision::msb(n));
    return top - static_cast<long>(d.exponent());
}

// Closed dyadic subinterval of [0,1]; used for supports and rescaling
// targets.
struct Interval {
    Dyadic lo;
    Dyadic hi;

    Interval(Dyadic low, Dyadic high) : lo(std::move(low)), hi(std::move(high)) {
        if (!(Dyadic(0) <= lo && lo <= hi && hi <= Dyadic(1)))
            throw std::invalid_argument("interval must satisfy 0 <= lo <= hi <= 1");
    }

    Dyadic width() const { return hi - lo; }
    bool is_degenerate() const { return lo == hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

}  // namespace fsigma
