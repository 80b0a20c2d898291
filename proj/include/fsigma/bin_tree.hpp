#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsigma {

// Finite binary tree with immutable, structurally shared nodes.  Leaf i
// corresponds to the i-th interval of the standard dyadic subdivision of
// [0,1] the tree induces.
class BinTree {
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;  // nullptr = leaf

    struct Node {
        NodePtr left;
        NodePtr right;
        int leaves;
    };

public:
    BinTree() = default;  // a single leaf

    static BinTree leaf() { return BinTree(); }

    static BinTree caret(const BinTree& left, const BinTree& right) {
        BinTree t;
        t.node_ = std::make_shared<const Node>(
            Node{left.node_, right.node_, left.leaf_count() + right.leaf_count()});
        return t;
    }

    static BinTree right_comb(int leaves) {
        if (leaves < 1) throw std::invalid_argument("tree needs at least one leaf");
        BinTree t = leaf();
        for (int i = 1; i < leaves; ++i) t = caret(leaf(), t);
        return t;
    }

    bool is_leaf() const { return !node_; }
    int leaf_count() const { return node_ ? node_->leaves : 1; }

    BinTree left() const {
        if (is_leaf()) throw std::logic_error("leaf has no children");
        return BinTree(node_->left);
    }
    BinTree right() const {
        if (is_leaf()) throw std::logic_error("leaf has no children");
        return BinTree(node_->right);
    }

    int left_depth() const {
        int d = 0;
        for (const Node* n = node_.get(); n; n = n->left.get()) ++d;
        return d;
    }
    int right_depth() const {
        int d = 0;
        for (const Node* n = node_.get(); n; n = n->right.get()) ++d;
        return d;
    }

    // preorder encoding, 1 = caret, 0 = leaf; prefix-free and injective
    void preorder_bits(std::vector<bool>& out) const { bits_rec(node_.get(), out); }

    // leaf indices i such that leaves i and i+1 are the two children of
    // one caret; ascending
    std::vector<int> sibling_leaf_starts() const {
        std::vector<int> out;
        siblings_rec(node_.get(), 0, out);
        return out;
    }

    // collapse the caret whose children are leaves i and i+1
    BinTree merge_sibling_at(int i) const {
        if (is_leaf()) throw std::logic_error("no caret to merge in a leaf");
        if (left().is_leaf() && right().is_leaf()) {
            if (i != 0) throw std::logic_error("leaf index out of range");
            return leaf();
        }
        int lc = left().leaf_count();
        if (i + 1 <= lc - 1) return caret(left().merge_sibling_at(i), right());
        if (i >= lc) return caret(left(), right().merge_sibling_at(i - lc));
        throw std::logic_error("leaves are not siblings");
    }

    // rebuild with leaf i replaced by subtrees[i]
    BinTree replace_leaves(std::span<const BinTree> subtrees) const {
        if (static_cast<int>(subtrees.size()) != leaf_count())
            throw std::invalid_argument("subtree count must match leaf count");
        std::size_t idx = 0;
        return replace_rec(subtrees, idx);
    }

    // "((*,*),*)" with * for leaves
    std::string str() const {
        if (is_leaf()) return "*";
        return "(" + left().str() + "," + right().str() + ")";
    }

    friend bool operator==(const BinTree& a, const BinTree& b) {
        return equal_rec(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const BinTree& a, const BinTree& b) { return !(a == b); }

private:
    explicit BinTree(NodePtr n) : node_(std::move(n)) {}

    static void bits_rec(const Node* n, std::vector<bool>& out) {
        if (!n) {
            out.push_back(false);
            return;
        }
        out.push_back(true);
        bits_rec(n->left.get(), out);
        bits_rec(n->right.get(), out);
    }

    static void siblings_rec(const Node* n, int offset, std::vector<int>& out) {
        if (!n) return;
        if (!n->left && !n->right) {
            out.push_back(offset);
            return;
        }
        siblings_rec(n->left.get(), offset, out);
        int lc = n->left ? n->left->leaves : 1;
        siblings_rec(n->right.get(), offset + lc, out);
    }

    static bool equal_rec(const Node* a, const Node* b) {
        if (a == b) return true;
        if (!a || !b) return false;
        if (a->leaves != b->leaves) return false;
        return equal_rec(a->left.get(), b->left.get()) &&
               equal_rec(a->right.get(), b->right.get());
    }

    BinTree replace_rec(std::span<const BinTree> subtrees, std::size_t& idx) const {
        if (is_leaf()) return subtrees[idx++];
        BinTree l = left().replace_rec(subtrees, idx);
        BinTree r = right().replace_rec(subtrees, idx);
        return caret(l, r);
    }

    NodePtr node_;
};

// Coarsest common refinement of the subdivisions induced by a and b.
inline BinTree tree_union(const BinTree& a, const BinTree& b) {
    if (a.is_leaf()) return b;
    if (b.is_leaf()) return a;
    return BinTree::caret(tree_union(a.left(), b.left()), tree_union(a.right(), b.right()));
}

// For `refined` a refinement of `base`: the subtree grafted at each leaf
// of base, in leaf order.
inline void refinement_subtrees(const BinTree& base, const BinTree& refined,
                                std::vector<BinTree>& out) {
    if (base.is_leaf()) {
        out.push_back(refined);
        return;
    }
    if (refined.is_leaf())
        throw std::logic_error("tree is not a refinement of the base");
    refinement_subtrees(base.left(), refined.left(), out);
    refinement_subtrees(base.right(), refined.right(), out);
}

inline std::vector<BinTree> refinement_subtrees(const BinTree& base, const BinTree& refined) {
    std::vector<BinTree> out;
    out.reserve(static_cast<std::size_t>(base.leaf_count()));
    refinement_subtrees(base, refined, out);
    return out;
}

}  // namespace fsigma
