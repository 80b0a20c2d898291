#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsigma/bin_tree.hpp"
#include "fsigma/dyadic.hpp"
#include "fsigma/pl_map.hpp"
#include "fsigma/tree_pair.hpp"

namespace fsigma {

// One letter x_index^sign of a word in the standard generators.
struct Letter {
    unsigned index;
    int sign;  // +1 or -1

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
};

using Word = std::vector<Letter>;

// x_0 as a PL map: slope 1/2 on [0,1/2], slope 1 on [1/2,3/4], slope 2 on
// [3/4,1].  x_n for n >= 1 is the affine copy of x_0 inside [1-2^-n, 1],
// which realizes the whole defining relation family.
inline PLMap generator_map(unsigned n) {
    static const PLMap x0 = PLMap::from_breakpoints({
        {Dyadic(0), Dyadic(0)},
        {Dyadic(1, 1), Dyadic(1, 2)},
        {Dyadic(3, 2), Dyadic(1, 1)},
        {Dyadic(1), Dyadic(1)},
    });
    if (n == 0) return x0;
    return rescale_into(x0, Interval(Dyadic((BigInt(1) << n) - 1, n), Dyadic(1)));
}

inline TreePair generator_pair(unsigned n) {
    BinTree comb3 = BinTree::caret(BinTree::leaf(),
                                   BinTree::caret(BinTree::leaf(), BinTree::leaf()));
    BinTree left3 = BinTree::caret(BinTree::caret(BinTree::leaf(), BinTree::leaf()),
                                   BinTree::leaf());
    BinTree d = comb3, r = left3;
    for (unsigned i = 0; i < n; ++i) {
        d = BinTree::caret(BinTree::leaf(), std::move(d));
        r = BinTree::caret(BinTree::leaf(), std::move(r));
    }
    return TreePair(std::move(d), std::move(r));
}

inline PLMap eval_word_map(const Word& w) {
    PLMap acc;
    for (const Letter& l : w) {
        PLMap g = generator_map(l.index);
        acc = compose(acc, l.sign > 0 ? g : g.inverse());
    }
    return acc;
}

inline TreePair eval_word_pair(const Word& w) {
    TreePair acc;
    for (const Letter& l : w) {
        TreePair g = generator_pair(l.index);
        acc = multiply(acc, l.sign > 0 ? g : inverse(g));
    }
    return acc;
}

// A group element carried in both representations at once.  eval_word
// computes the two routes independently, so they can be checked against
// each other.
struct Element {
    PLMap map;
    TreePair pair;

    Element() = default;
    Element(PLMap m, TreePair p) : map(std::move(m)), pair(std::move(p)) {}

    static Element from_map(PLMap m) {
        TreePair p = pl_to_treepair(m);
        return Element(std::move(m), std::move(p));
    }
    static Element from_pair(TreePair p) {
        PLMap m = treepair_to_pl(p);
        return Element(std::move(m), std::move(p));
    }

    std::string key() const { return pair.canonical_key(); }
    bool is_identity() const { return pair.is_identity(); }

    friend bool operator==(const Element& a, const Element& b) { return a.pair == b.pair; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

inline Element eval_word(const Word& w) {
    return Element(eval_word_map(w), eval_word_pair(w));
}

inline Element multiply(const Element& a, const Element& b) {
    return Element(compose(a.map, b.map), multiply(a.pair, b.pair));
}

inline Element inverse(const Element& a) {
    return Element(a.map.inverse(), inverse(a.pair));
}

// Unique normal form x_{i1}...x_{ik} * x_{jl}^-1 ... x_{j1}^-1 with both
// index sequences nondecreasing.
struct NormalForm {
    std::vector<unsigned> positive;
    std::vector<unsigned> negative;

    bool empty() const { return positive.empty() && negative.empty(); }

    // whenever an index occurs on both sides, index+1 occurs somewhere
    bool is_reduced() const {
        for (unsigned i : positive) {
            bool on_both = false;
            for (unsigned j : negative)
                if (j == i) on_both = true;
            if (!on_both) continue;
            bool successor = false;
            for (unsigned j : positive)
                if (j == i + 1) successor = true;
            for (unsigned j : negative)
                if (j == i + 1) successor = true;
            if (!successor) return false;
        }
        return true;
    }

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        return a.positive == b.positive && a.negative == b.negative;
    }
};

inline Word to_word(const NormalForm& nf) {
    Word w;
    w.reserve(nf.positive.size() + nf.negative.size());
    for (unsigned i : nf.positive) w.push_back({i, +1});
    for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it)
        w.push_back({*it, -1});
    return w;
}

// "x0 x2 x1^-1"; the identity is the empty string
inline std::string to_string(const Word& w) {
    std::string s;
    for (const Letter& l : w) {
        if (!s.empty()) s += ' ';
        s += "x" + std::to_string(l.index);
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

namespace detail {

// Per-leaf exponent: the number of edges one can climb from the leaf
// through consecutive left-child links before hitting the right spine.
// The tree with these exponents is the positive word
// x_0^{a_0} x_1^{a_1} ... whose pair is (right comb, tree).
inline void leaf_exponents_rec(const BinTree& t, int above, bool on_spine,
                               std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(above);
        return;
    }
    leaf_exponents_rec(t.left(), on_spine ? 0 : above + 1, false, out);
    leaf_exponents_rec(t.right(), 0, on_spine, out);
}

inline std::vector<int> leaf_exponents(const BinTree& t) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(t.leaf_count()));
    leaf_exponents_rec(t, 0, true, out);
    return out;
}

}  // namespace detail

// Positive part read off the range tree, negative part off the domain
// tree; the result is re-evaluated against the input as a guard.
inline NormalForm normal_form(const TreePair& p) {
    NormalForm nf;
    std::vector<int> rexp = detail::leaf_exponents(p.range());
    for (std::size_t i = 0; i < rexp.size(); ++i)
        for (int c = 0; c < rexp[i]; ++c) nf.positive.push_back(static_cast<unsigned>(i));
    std::vector<int> dexp = detail::leaf_exponents(p.domain());
    for (std::size_t i = 0; i < dexp.size(); ++i)
        for (int c = 0; c < dexp[i]; ++c) nf.negative.push_back(static_cast<unsigned>(i));
    if (eval_word_pair(to_word(nf)) != p)
        throw std::logic_error("normal form failed re-evaluation");
    return nf;
}

inline NormalForm normal_form(const Element& g) { return normal_form(g.pair); }

inline bool words_equal(const Word& a, const Word& b) {
    return eval_word_pair(a) == eval_word_pair(b);
}

// The shift endomorphism: g -> affine copy of g on [1/2,1].  Sends x_i to
// x_{i+1}; its image is F(1), exhibiting F as an ascending HNN extension
// with stable letter x_0.
inline PLMap shift(const PLMap& f) {
    return rescale_into(f, Interval(Dyadic(1, 1), Dyadic(1)));
}

inline TreePair shift(const TreePair& p) {
    if (p.is_identity()) return p;
    return TreePair(BinTree::caret(BinTree::leaf(), p.domain()),
                    BinTree::caret(BinTree::leaf(), p.range()));
}

inline Element shift(const Element& g) { return Element(shift(g.map), shift(g.pair)); }

struct RelationCheck {
    unsigned conjugator;  // i
    unsigned inner;       // n
    bool ok;
};

struct RelationReport {
    unsigned max_index;
    std::vector<RelationCheck> checks;
    bool all_ok;
};

// Verifies x_i^-1 x_n x_i == x_{n+1}, in both representations, for every
// 0 <= i < n with n+1 <= max_index.  Throws on the first failure.
inline RelationReport check_relations(unsigned max_index) {
    RelationReport report{max_index, {}, true};
    if (max_index < 2) return report;
    for (unsigned n = 1; n + 1 <= max_index; ++n) {
        for (unsigned i = 0; i < n; ++i) {
            PLMap lhs_map = compose(compose(generator_map(i).inverse(), generator_map(n)),
                                    generator_map(i));
            TreePair lhs_pair = multiply(
                multiply(inverse(generator_pair(i)), generator_pair(n)), generator_pair(i));
            bool ok = lhs_map == generator_map(n + 1) && lhs_pair == generator_pair(n + 1);
            report.checks.push_back({i, n, ok});
            if (!ok)
                throw std::logic_error("relation failed at (i=" + std::to_string(i) +
                                       ", n=" + std::to_string(n) + ")");
        }
    }
    return report;
}

}  // namespace fsigma
