#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fsigma/dyadic.hpp"

namespace fsigma {

// Increasing PL homeomorphism of [0,1] with dyadic breakpoints and
// power-of-two slopes, i.e. an element of Thompson's group F in its
// analytic guise.  Stored as the normalized breakpoint list
// (u_0,v_0)=(0,0), ..., (u_k,v_k)=(1,1): both coordinates strictly
// increasing, adjacent segments have distinct slopes.  Normalization
// makes structural equality decide equality of maps.
class PLMap {
public:
    using Breakpoint = std::pair<Dyadic, Dyadic>;

    // the identity map [(0,0),(1,1)]
    PLMap() : pts_{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}} {}

    // Validates endpoints, monotonicity and slopes, then merges collinear
    // segments.  Throws std::invalid_argument on anything that is not an
    // element of F.
    static PLMap from_breakpoints(std::vector<Breakpoint> pts) {
        if (pts.size() < 2)
            throw std::invalid_argument("breakpoint list needs at least two entries");
        if (!(pts.front().first.is_zero() && pts.front().second.is_zero()))
            throw std::invalid_argument("first breakpoint must be 0:0");
        if (!(pts.back().first == Dyadic(1) && pts.back().second == Dyadic(1)))
            throw std::invalid_argument("last breakpoint must be 1:1");
        for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
            if (!(pts[j].first < pts[j + 1].first && pts[j].second < pts[j + 1].second))
                throw std::invalid_argument("breakpoints must be strictly increasing");
            segment_log_slope(pts[j], pts[j + 1]);  // throws if not a power of 2
        }
        // drop interior points where the slope does not change
        std::vector<Breakpoint> out;
        out.reserve(pts.size());
        out.push_back(pts.front());
        for (std::size_t j = 1; j + 1 < pts.size(); ++j) {
            long sl = segment_log_slope(out.back(), pts[j]);
            long sr = segment_log_slope(pts[j], pts[j + 1]);
            if (sl != sr) out.push_back(pts[j]);
        }
        out.push_back(pts.back());
        return PLMap(std::move(out), normalized_tag{});
    }

    const std::vector<Breakpoint>& breakpoints() const { return pts_; }
    std::size_t segment_count() const { return pts_.size() - 1; }
    bool is_identity() const { return pts_.size() == 2; }

    Dyadic eval(const Dyadic& t) const {
        if (!in_unit_interval(t))
            throw std::domain_error("evaluation point outside [0,1]");
        std::size_t j = segment_right_of(t);
        if (t == pts_[j].first) return pts_[j].second;
        return pts_[j].second + (t - pts_[j].first).mul_pow2(log_slope_of_segment(j));
    }

    // log2 of the one-sided derivative at an endpoint: right derivative
    // at 0, left derivative at 1.
    long log_slope(int end) const {
        if (end == 0) return log_slope_of_segment(0);
        if (end == 1) return log_slope_of_segment(pts_.size() - 2);
        throw std::invalid_argument("endpoint must be 0 or 1");
    }

    long log_slope_right(const Dyadic& t) const {
        if (!(t >= Dyadic(0) && t < Dyadic(1)))
            throw std::domain_error("right slope defined on [0,1)");
        return log_slope_of_segment(segment_right_of(t));
    }

    long log_slope_left(const Dyadic& t) const {
        if (!(t > Dyadic(0) && t <= Dyadic(1)))
            throw std::domain_error("left slope defined on (0,1]");
        // last segment whose left end is strictly below t
        std::size_t lo = 0, hi = pts_.size() - 1;
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (pts_[mid].first < t)
                lo = mid;
            else
                hi = mid;
        }
        return log_slope_of_segment(lo);
    }

    long log_slope_of_segment(std::size_t j) const {
        return segment_log_slope(pts_[j], pts_[j + 1]);
    }

    PLMap inverse() const {
        std::vector<Breakpoint> out;
        out.reserve(pts_.size());
        for (const auto& p : pts_) out.emplace_back(p.second, p.first);
        return PLMap(std::move(out), normalized_tag{});
    }

    // smallest closed dyadic interval containing {t : f(t) != t};
    // nullopt for the identity
    std::optional<Interval> support() const {
        if (is_identity()) return std::nullopt;
        std::size_t p = 0;
        while (pts_[p + 1].first == pts_[p + 1].second) ++p;
        std::size_t q = pts_.size() - 1;
        while (pts_[q - 1].first == pts_[q - 1].second) --q;
        return Interval(pts_[p].first, pts_[q].first);
    }

    friend bool operator==(const PLMap& a, const PLMap& b) { return a.pts_ == b.pts_; }
    friend bool operator!=(const PLMap& a, const PLMap& b) { return !(a == b); }

private:
    struct normalized_tag {};
    PLMap(std::vector<Breakpoint> pts, normalized_tag) : pts_(std::move(pts)) {}

    static long segment_log_slope(const Breakpoint& a, const Breakpoint& b) {
        Dyadic du = b.first - a.first;
        Dyadic dv = b.second - a.second;
        // dv/du is a power of 2 exactly when the normalized numerators agree
        if (du.numerator() != dv.numerator())
            throw std::invalid_argument("segment slope is not a power of 2");
        return static_cast<long>(du.exponent()) - static_cast<long>(dv.exponent());
    }

    // index j of the segment [u_j, u_{j+1}] with u_j <= t (t < 1 strictly
    // inside, t == 1 mapped to the last segment)
    std::size_t segment_right_of(const Dyadic& t) const {
        std::size_t lo = 0, hi = pts_.size() - 1;
        while (lo + 1 < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (pts_[mid].first <= t)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }

    std::vector<Breakpoint> pts_;
};

// (f*g)(t) = f(g(t)) — the fixed product convention for the whole library.
inline PLMap compose(const PLMap& f, const PLMap& g) {
    std::vector<Dyadic> xs;
    xs.reserve(f.breakpoints().size() + g.breakpoints().size());
    for (const auto& p : g.breakpoints()) xs.push_back(p.first);
    PLMap ginv = g.inverse();
    const auto& fb = f.breakpoints();
    for (std::size_t j = 1; j + 1 < fb.size(); ++j) xs.push_back(ginv.eval(fb[j].first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<PLMap::Breakpoint> pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.emplace_back(x, f.eval(g.eval(x)));
    return PLMap::from_breakpoints(std::move(pts));
}

// Affine copy of f inside `target`, identity outside.  For a fixed target
// this is a group monomorphism.
inline PLMap rescale_into(const PLMap& f, const Interval& target) {
    if (target.is_degenerate())
        throw std::invalid_argument("rescale target is degenerate");
    Dyadic w = target.width();
    std::vector<PLMap::Breakpoint> pts;
    pts.reserve(f.breakpoints().size() + 2);
    if (target.lo > Dyadic(0)) pts.emplace_back(Dyadic(0), Dyadic(0));
    for (const auto& p : f.breakpoints())
        pts.emplace_back(target.lo + w * p.first, target.lo + w * p.second);
    if (target.hi < Dyadic(1)) pts.emplace_back(Dyadic(1), Dyadic(1));
    return PLMap::from_breakpoints(std::move(pts));
}

// Conjugation by the flip t -> 1-t (rotate the graph through pi).  An
// involutive automorphism of F exchanging the two endpoint log-slope
// homomorphisms.
inline PLMap flip_conjugate(const PLMap& f) {
    const auto& b = f.breakpoints();
    std::vector<PLMap::Breakpoint> pts;
    pts.reserve(b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it)
        pts.emplace_back(Dyadic(1) - it->first, Dyadic(1) - it->second);
    return PLMap::from_breakpoints(std::move(pts));
}

inline bool identity_on_prefix(const PLMap& f, const Dyadic& c) {
    auto s = f.support();
    return !s || s->lo >= c;
}

// F(k) = <x_k, x_{k+1}, ...> = maps that fix [0, 1-2^{-k}] pointwise
inline bool in_F_subgroup(const PLMap& f, unsigned k) {
    if (k < 1) throw std::invalid_argument("F(k) needs k >= 1");
    return identity_on_prefix(f, Dyadic((BigInt(1) << k) - 1, k));
}

// F' = kernel of both endpoint log-slope homomorphisms
inline bool in_derived_subgroup(const PLMap& f) {
    return f.log_slope(0) == 0 && f.log_slope(1) == 0;
}

}  // namespace fsigma
