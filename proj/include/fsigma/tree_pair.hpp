#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fsigma/bin_tree.hpp"
#include "fsigma/dyadic.hpp"
#include "fsigma/pl_map.hpp"

namespace fsigma {

// Reduced tree-pair diagram: domain and range trees with equal leaf
// counts; the induced map sends the i-th domain leaf interval affinely
// onto the i-th range leaf interval.  Every TreePair is reduced on
// construction (no index i with leaves i,i+1 siblings in both trees), so
// structural equality and canonical_key decide equality in F.
class TreePair {
public:
    TreePair() = default;  // (leaf, leaf) — the identity

    TreePair(BinTree domain, BinTree range)
        : dom_(std::move(domain)), ran_(std::move(range)) {
        if (dom_.leaf_count() != ran_.leaf_count())
            throw std::invalid_argument("tree pair leaf counts differ");
        reduce();
    }

    const BinTree& domain() const { return dom_; }
    const BinTree& range() const { return ran_; }
    bool is_identity() const { return dom_.is_leaf(); }
    int leaf_count() const { return dom_.leaf_count(); }

    // Injective byte key: preorder bits of the domain tree, then of the
    // range tree, packed MSB-first.  Tree codes are prefix-free, so the
    // concatenation identifies the reduced pair.
    std::string canonical_key() const {
        std::vector<bool> bits;
        bits.reserve(static_cast<std::size_t>(4 * leaf_count()));
        dom_.preorder_bits(bits);
        ran_.preorder_bits(bits);
        std::string key((bits.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) key[i / 8] = static_cast<char>(key[i / 8] | (0x80 >> (i % 8)));
        return key;
    }

    friend bool operator==(const TreePair& a, const TreePair& b) {
        return a.dom_ == b.dom_ && a.ran_ == b.ran_;
    }
    friend bool operator!=(const TreePair& a, const TreePair& b) { return !(a == b); }

private:
    void reduce() {
        for (;;) {
            std::vector<int> sd = dom_.sibling_leaf_starts();
            std::vector<int> sr = ran_.sibling_leaf_starts();
            int found = -1;
            for (std::size_t i = 0, j = 0; i < sd.size() && j < sr.size();) {
                if (sd[i] == sr[j]) {
                    found = sd[i];
                    break;
                }
                if (sd[i] < sr[j])
                    ++i;
                else
                    ++j;
            }
            if (found < 0) break;
            dom_ = dom_.merge_sibling_at(found);
            ran_ = ran_.merge_sibling_at(found);
        }
    }

    BinTree dom_;
    BinTree ran_;
};

inline TreePair inverse(const TreePair& p) { return TreePair(p.range(), p.domain()); }

// Product p*q = "apply q, then p", matching compose() on PL maps.
// Entirely combinatorial: take the common refinement U of q's range tree
// with p's domain tree, graft the refining subtrees onto q's domain and
// p's range (leaf order is preserved — these are elements of F, not V),
// and reduce.
inline TreePair multiply(const TreePair& p, const TreePair& q) {
    BinTree u = tree_union(q.range(), p.domain());
    std::vector<BinTree> gq = refinement_subtrees(q.range(), u);
    std::vector<BinTree> gp = refinement_subtrees(p.domain(), u);
    BinTree new_domain = q.domain().replace_leaves(gq);
    BinTree new_range = p.range().replace_leaves(gp);
    return TreePair(std::move(new_domain), std::move(new_range));
}

// Left endpoints of the leaf intervals followed by 1, so entry i and
// entry i+1 bound leaf i.
inline void leaf_boundaries(const BinTree& t, const Dyadic& lo, const Dyadic& hi,
                            std::vector<Dyadic>& out) {
    if (t.is_leaf()) {
        out.push_back(lo);
        return;
    }
    Dyadic mid = Dyadic::midpoint(lo, hi);
    leaf_boundaries(t.left(), lo, mid, out);
    leaf_boundaries(t.right(), mid, hi, out);
}

inline std::vector<Dyadic> leaf_boundaries(const BinTree& t) {
    std::vector<Dyadic> out;
    out.reserve(static_cast<std::size_t>(t.leaf_count()) + 1);
    leaf_boundaries(t, Dyadic(0), Dyadic(1), out);
    out.push_back(Dyadic(1));
    return out;
}

inline PLMap treepair_to_pl(const TreePair& p) {
    std::vector<Dyadic> d = leaf_boundaries(p.domain());
    std::vector<Dyadic> r = leaf_boundaries(p.range());
    std::vector<PLMap::Breakpoint> pts;
    pts.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) pts.emplace_back(d[i], r[i]);
    return PLMap::from_breakpoints(std::move(pts));
}

namespace detail {

// Split [lo,hi] (always a standard dyadic interval here) until f is
// linear on each piece and maps it onto a standard dyadic interval.
// Terminates because once the subdivision is finer than every breakpoint
// denominator and slope of f, images of standard intervals are standard.
inline BinTree domain_tree_rec(const PLMap& f, const std::vector<Dyadic>& breaks,
                               const Dyadic& lo, const Dyadic& hi,
                               std::vector<Dyadic>& image_cuts, int depth) {
    if (depth > 4096) throw std::logic_error("tree conversion did not terminate");
    bool linear = true;
    for (const auto& u : breaks) {
        if (lo < u && u < hi) {
            linear = false;
            break;
        }
    }
    if (linear) {
        Dyadic flo = f.eval(lo);
        Dyadic w = f.eval(hi) - flo;
        if (w.numerator() == 1 && flo.exponent() <= w.exponent()) {
            image_cuts.push_back(flo);
            return BinTree::leaf();
        }
    }
    Dyadic mid = Dyadic::midpoint(lo, hi);
    BinTree l = domain_tree_rec(f, breaks, lo, mid, image_cuts, depth + 1);
    BinTree r = domain_tree_rec(f, breaks, mid, hi, image_cuts, depth + 1);
    return BinTree::caret(std::move(l), std::move(r));
}

// tree of the standard dyadic partition of [0,1] with the given sorted
// interior cut values
inline BinTree tree_from_cuts(const std::vector<Dyadic>& cuts, std::size_t b, std::size_t e,
                              const Dyadic& lo, const Dyadic& hi) {
    if (b == e) return BinTree::leaf();
    Dyadic mid = Dyadic::midpoint(lo, hi);
    std::size_t m = b;
    while (m < e && cuts[m] < mid) ++m;
    if (m == e || cuts[m] != mid)
        throw std::logic_error("cut set is not a standard dyadic partition");
    BinTree l = tree_from_cuts(cuts, b, m, lo, mid);
    BinTree r = tree_from_cuts(cuts, m + 1, e, mid, hi);
    return BinTree::caret(std::move(l), std::move(r));
}

}  // namespace detail

inline TreePair pl_to_treepair(const PLMap& f) {
    std::vector<Dyadic> breaks;
    breaks.reserve(f.breakpoints().size());
    for (const auto& p : f.breakpoints()) breaks.push_back(p.first);
    std::vector<Dyadic> image_lefts;
    BinTree domain =
        detail::domain_tree_rec(f, breaks, Dyadic(0), Dyadic(1), image_lefts, 0);
    // interior range cuts = image left endpoints except the leading 0
    std::vector<Dyadic> cuts(image_lefts.begin() + 1, image_lefts.end());
    BinTree range = detail::tree_from_cuts(cuts, 0, cuts.size(), Dyadic(0), Dyadic(1));
    return TreePair(std::move(domain), std::move(range));
}

// (log2 f'(0+), log2 f'(1-)) read directly off the trees: the extreme
// leaf intervals have width 2^-depth.
inline std::pair<long, long> endpoint_log_slopes(const TreePair& p) {
    long ls0 = static_cast<long>(p.domain().left_depth()) - p.range().left_depth();
    long ls1 = static_cast<long>(p.domain().right_depth()) - p.range().right_depth();
    return {ls0, ls1};
}

}  // namespace fsigma
