#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "fsigma/dyadic.hpp"
#include "fsigma/pl_map.hpp"

namespace fsigma {

// Point a*chi0 + b*chi1 of Hom(F,R) in the basis of the two endpoint
// log-slope characters chi_i(g) = log2 g'(i).  Rational coefficients keep
// everything exact; classification only depends on the sign pattern, so
// nothing is lost.
struct Character {
    Rational a;
    Rational b;

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const Character& x, const Character& y) {
        return x.a == y.a && x.b == y.b;
    }
};

inline Character operator-(const Character& c) { return {-c.a, -c.b}; }

// the induced swap of coordinates under the flip automorphism:
// chi0 o flip = chi1 and vice versa
inline Character flip_action(const Character& c) { return {c.b, c.a}; }

inline Rational char_eval(const Character& c, long ls0, long ls1) {
    return c.a * ls0 + c.b * ls1;
}

inline Rational char_eval(const Character& c, const PLMap& g) {
    return char_eval(c, g.log_slope(0), g.log_slope(1));
}

// Rational characters always have cyclic (hence discrete) image aZ + bZ.
inline bool is_discrete(const Character& c) {
    if (c.is_zero()) throw std::invalid_argument("zero character");
    return true;
}

enum class SigmaVerdict {
    NotInSigma1,      // [chi0] and [chi1] themselves
    Sigma1NotSigma2,  // the open shorter interval a,b > 0
    SigmaInfinity,    // the open longer interval (some coefficient < 0)
};

inline std::string to_string(SigmaVerdict v) {
    switch (v) {
        case SigmaVerdict::NotInSigma1: return "NOT_IN_SIGMA1";
        case SigmaVerdict::Sigma1NotSigma2: return "SIGMA1_NOT_SIGMA2";
        case SigmaVerdict::SigmaInfinity: return "SIGMA_INFINITY";
    }
    throw std::logic_error("unreachable");
}

// Sigma^m(F) for every m at once, as a function of the sign pattern of
// (a,b): the complement of Sigma^1 is the two special points, the shorter
// interval sits in Sigma^1 \ Sigma^2, and the longer interval is
// Sigma^infinity.
inline SigmaVerdict classify_sigma_F(const Character& c) {
    if (c.is_zero()) throw std::invalid_argument("zero character");
    if (c.a > 0 && c.b > 0) return SigmaVerdict::Sigma1NotSigma2;
    if ((c.a > 0 && c.b == 0) || (c.a == 0 && c.b > 0)) return SigmaVerdict::NotInSigma1;
    return SigmaVerdict::SigmaInfinity;
}

// kernel of a discrete character: type F_max_type but not FP_{max_type+1};
// max_type == nullopt means F_infinity
struct FinitenessReport {
    bool discrete;
    std::optional<unsigned> max_type;

    friend bool operator==(const FinitenessReport& x, const FinitenessReport& y) {
        return x.discrete == y.discrete && x.max_type == y.max_type;
    }
};

inline std::string describe(const FinitenessReport& r) {
    if (!r.max_type) return "type F_infinity";
    if (*r.max_type == 0) return "not finitely generated (type F_0 only)";
    return "type F_" + std::to_string(*r.max_type) + ", not FP_" +
           std::to_string(*r.max_type + 1);
}

namespace detail {

// largest m with [chi] in Sigma^m; nullopt = all m
inline std::optional<unsigned> sigma_level(SigmaVerdict v) {
    switch (v) {
        case SigmaVerdict::NotInSigma1: return 0;
        case SigmaVerdict::Sigma1NotSigma2: return 1;
        case SigmaVerdict::SigmaInfinity: return std::nullopt;
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

// The kernel of chi has type F_m exactly when [chi] and [-chi] both lie
// in Sigma^m, so the report is the minimum of the two levels.
inline FinitenessReport kernel_finiteness_F(const Character& c) {
    is_discrete(c);  // rejects the zero character
    auto lp = detail::sigma_level(classify_sigma_F(c));
    auto lm = detail::sigma_level(classify_sigma_F(-c));
    if (!lp) return {true, lm};
    if (!lm) return {true, lp};
    return {true, std::min(*lp, *lm)};
}

}  // namespace fsigma
