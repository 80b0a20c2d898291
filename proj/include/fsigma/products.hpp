#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsigma/characters.hpp"
#include "fsigma/dyadic.hpp"
#include "fsigma/pl_map.hpp"

namespace fsigma {

// Dyadic subdivision 0 < t_1 < ... < t_{r-1} < 1 of [0,1] into r
// segments.  The subgroup of F fixing every cut point is a copy of F^r.
struct Subdivision {
    unsigned r;
    std::vector<Dyadic> cuts;

    Subdivision(unsigned parts, std::vector<Dyadic> cut_points)
        : r(parts), cuts(std::move(cut_points)) {
        if (r < 1) throw std::invalid_argument("subdivision needs r >= 1");
        if (cuts.size() != r - 1)
            throw std::invalid_argument("subdivision needs exactly r-1 cut points");
        Dyadic prev(0);
        for (const auto& c : cuts) {
            if (!(prev < c && c < Dyadic(1)))
                throw std::invalid_argument("cut points must be strictly increasing in (0,1)");
            prev = c;
        }
    }

    // t_i = i/r when r is a power of two, otherwise i/r rounded to the
    // grid of denominator 2^ceil(log2 r)
    static Subdivision uniform(unsigned parts) {
        if (parts < 1) throw std::invalid_argument("subdivision needs r >= 1");
        unsigned k = 0;
        while ((1u << k) < parts) ++k;
        unsigned m = 1u << k;
        std::vector<Dyadic> cuts;
        cuts.reserve(parts - 1);
        for (unsigned i = 1; i < parts; ++i) {
            unsigned long num = (2ul * i * m + parts) / (2ul * parts);  // round(i*m/r)
            cuts.emplace_back(BigInt(num), k);
        }
        return Subdivision(parts, std::move(cuts));
    }

    Interval segment(unsigned i) const {
        if (i >= r) throw std::invalid_argument("segment index out of range");
        Dyadic lo = i == 0 ? Dyadic(0) : cuts[i - 1];
        Dyadic hi = i == r - 1 ? Dyadic(1) : cuts[i];
        return Interval(lo, hi);
    }
};

// The embedding F^r -> F: factor i acts as an affine copy on segment i.
// Supports are disjoint, so the factor order is immaterial and the map is
// an injective homomorphism.
inline PLMap embed_product(std::span<const PLMap> gs, const Subdivision& sub) {
    if (gs.size() != sub.r)
        throw std::invalid_argument("factor count does not match subdivision");
    PLMap acc;
    for (unsigned i = 0; i < sub.r; ++i) acc = compose(acc, rescale_into(gs[i], sub.segment(i)));
    return acc;
}

// Character sum_i a_i chi0^(i) + b_i chi1^(i) on F^r, stored as the flat
// coordinate vector (a_1, b_1, ..., a_r, b_r).
struct ProductCharacter {
    std::vector<Rational> coords;

    explicit ProductCharacter(std::vector<Rational> cs) : coords(std::move(cs)) {
        if (coords.empty() || coords.size() % 2 != 0)
            throw std::invalid_argument("product character needs 2r coordinates");
    }

    unsigned r() const { return static_cast<unsigned>(coords.size() / 2); }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

inline ProductCharacter operator-(const ProductCharacter& c) {
    std::vector<Rational> out;
    out.reserve(c.coords.size());
    for (const auto& x : c.coords) out.push_back(-x);
    return ProductCharacter(std::move(out));
}

inline ProductCharacter barycenter_character(unsigned r) {
    return ProductCharacter(std::vector<Rational>(2 * r, Rational(1)));
}

inline Rational product_char_eval(const ProductCharacter& c, std::span<const PLMap> gs) {
    if (gs.size() != c.r())
        throw std::invalid_argument("factor count does not match character dimension");
    Rational acc(0);
    for (unsigned i = 0; i < c.r(); ++i)
        acc += c.coords[2 * i] * gs[i].log_slope(0) + c.coords[2 * i + 1] * gs[i].log_slope(1);
    return acc;
}

// Sigma^m(F^r)^c is the (m-1)-skeleton of the spherical (2r-1)-simplex
// spanned by the pullbacks of [chi0], [chi1] along the r projections.  A
// class lies in the simplex iff all coordinates are >= 0; its minimal
// face has dimension (#positive coordinates) - 1.
struct SkeletonVerdict {
    bool sigma_infinity;
    unsigned k;  // meaningful when !sigma_infinity: in Sigma^{k-1}, not Sigma^k
    bool boundary_case;  // k >= 2r-1: covered by the uniform skeleton reading

    friend bool operator==(const SkeletonVerdict& x, const SkeletonVerdict& y) {
        return x.sigma_infinity == y.sigma_infinity && x.k == y.k &&
               x.boundary_case == y.boundary_case;
    }
};

inline SkeletonVerdict classify_sigma_Fr(const ProductCharacter& c) {
    if (c.is_zero()) throw std::invalid_argument("zero character");
    unsigned pos = 0;
    bool neg = false;
    for (const auto& x : c.coords) {
        if (x > 0) ++pos;
        if (x < 0) neg = true;
    }
    if (neg) return {true, 0, false};
    return {false, pos, pos >= 2 * c.r() - 1};
}

// When chi has a negative coordinate both [chi] and [-chi] may land in
// Sigma^infinity; with k positive coordinates and the rest zero, [-chi]
// is in Sigma^infinity and [chi] leaves at level k, so the kernel has
// type F_{k-1} but not FP_k.
inline FinitenessReport kernel_finiteness_Fr(const ProductCharacter& c) {
    if (c.is_zero()) throw std::invalid_argument("zero character");
    unsigned pos = 0, neg = 0;
    for (const auto& x : c.coords) {
        if (x > 0) ++pos;
        if (x < 0) ++neg;
    }
    if (pos > 0 && neg > 0) return {true, std::nullopt};
    unsigned k = pos > 0 ? pos : neg;
    return {true, k - 1};
}

// Membership test for G_r: the product of the one-sided derivatives at 0,
// 1 and every cut point must be 1, i.e. the log2 exponents must sum to 0.
struct GrReport {
    bool fixes_cuts;
    long log2_slope_product;
    bool member;
};

inline GrReport gr_membership(const PLMap& f, const Subdivision& sub) {
    for (const auto& c : sub.cuts)
        if (f.eval(c) != c) return {false, 0, false};
    long sum = f.log_slope(0) + f.log_slope(1);
    for (const auto& c : sub.cuts) sum += f.log_slope_left(c) + f.log_slope_right(c);
    return {true, sum, sum == 0};
}

}  // namespace fsigma
