#pragma once

// Brute-force join-formula oracle for the Sigma complements of F^r,
// computed recursively from the r = 1 complements:
//
//   Sigma^m(F^r)^c = union over p of  Sigma^p(F)^c * Sigma^{m-p}(F^{r-1})^c
//
// Membership of a class in a join A*B, for characters split as
// (head, tail) along F x F^{r-1}: tail == 0 and [head] in A, or
// head == 0 and [tail] in B, or both nonzero and both memberships hold.
// Everything depends only on sign patterns, so characters are vectors
// over {-1, 0, +1}.

#include <optional>
#include <span>

namespace fsigma::testing {

// Sigma^m(F)^c from the sign pattern of (a, b):
// m = 0: empty; m = 1: the two special points; m >= 2: the closed
// shorter interval.
inline bool in_complement_F(int sa, int sb, unsigned m) {
    if (m == 0) return false;
    if (m == 1) return (sa > 0 && sb == 0) || (sa == 0 && sb > 0);
    return sa >= 0 && sb >= 0;
}

inline bool all_zero(std::span<const int> signs) {
    for (int s : signs)
        if (s != 0) return false;
    return true;
}

inline bool in_complement_Fr(std::span<const int> signs, unsigned m) {
    if (signs.size() == 2) return in_complement_F(signs[0], signs[1], m);
    auto head = signs.first(2);
    auto tail = signs.subspan(2);
    bool head_zero = all_zero(head);
    bool tail_zero = all_zero(tail);
    for (unsigned p = 0; p <= m; ++p) {
        bool in_a = !head_zero && in_complement_F(head[0], head[1], p);
        bool in_b = !tail_zero && in_complement_Fr(tail, m - p);
        if (tail_zero && in_a) return true;
        if (head_zero && in_b) return true;
        if (!head_zero && !tail_zero && in_a && in_b) return true;
    }
    return false;
}

// least m with the class in Sigma^m(F^r)^c; nullopt = in Sigma^infinity
inline std::optional<unsigned> min_complement_level(std::span<const int> signs, unsigned cap) {
    for (unsigned m = 0; m <= cap; ++m)
        if (in_complement_Fr(signs, m)) return m;
    return std::nullopt;
}

}  // namespace fsigma::testing
