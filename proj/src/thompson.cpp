#include "tangles/thompson.hpp"

#include <algorithm>
#include <functional>

namespace tangles {

BinaryTree tree_from_code(const std::string& code) {
    BinaryTree t;
    t.kids.clear();
    std::size_t pos = 0;
    // Recursive-descent over the preorder bitstring.
    std::function<int()> go = [&]() -> int {
        if (pos >= code.size())
            throw ParseError("truncated tree code at index " + std::to_string(pos));
        char c = code[pos++];
        int me = static_cast<int>(t.kids.size());
        t.kids.emplace_back(-1, -1);
        if (c == '0') return me;
        if (c != '1')
            throw ParseError("bad character in tree code at index " + std::to_string(pos - 1));
        int l = go();
        int r = go();
        t.kids[me] = {l, r};
        return me;
    };
    go();
    if (pos != code.size())
        throw ParseError("trailing characters in tree code at index " + std::to_string(pos));
    return t;
}

std::string tree_to_code(const BinaryTree& t) {
    std::string out;
    std::function<void(int)> go = [&](int v) {
        if (t.is_leaf(v)) { out += '0'; return; }
        out += '1';
        go(t.kids[v].first);
        go(t.kids[v].second);
    };
    go(0);
    return out;
}

namespace {

// Leaf indices (left-to-right, 0-based) of carets whose children are both
// leaves: entry i means leaves i, i+1 are siblings.
std::vector<int> sibling_leaf_pairs(const BinaryTree& t) {
    std::vector<int> out;
    int next_leaf = 0;
    std::function<void(int)> go = [&](int v) {
        if (t.is_leaf(v)) { ++next_leaf; return; }
        auto [l, r] = t.kids[v];
        if (t.is_leaf(l) && t.is_leaf(r)) out.push_back(next_leaf);
        go(l);
        go(r);
    };
    go(0);
    return out;
}

// Remove the caret over leaves i, i+1 (they must be siblings).
BinaryTree remove_caret(const BinaryTree& t, int leaf_i) {
    BinaryTree out;
    out.kids.clear();
    int next_leaf = 0;
    std::function<int(int)> go = [&](int v) -> int {
        int me = static_cast<int>(out.kids.size());
        if (t.is_leaf(v)) { out.kids.emplace_back(-1, -1); ++next_leaf; return me; }
        auto [l, r] = t.kids[v];
        if (t.is_leaf(l) && t.is_leaf(r) && next_leaf == leaf_i) {
            out.kids.emplace_back(-1, -1);  // collapse caret to a leaf
            next_leaf += 2;
            return me;
        }
        out.kids.emplace_back(-1, -1);
        int nl = go(l);
        int nr = go(r);
        out.kids[me] = {nl, nr};
        return me;
    };
    go(0);
    return out;
}

// Graft `sub` in place of leaf `leaf_i` of `t`.
BinaryTree graft_at_leaf(const BinaryTree& t, int leaf_i, const BinaryTree& sub) {
    BinaryTree out;
    out.kids.clear();
    int next_leaf = 0;
    std::function<int(const BinaryTree&, int)> copy = [&](const BinaryTree& s, int v) -> int {
        int me = static_cast<int>(out.kids.size());
        out.kids.emplace_back(-1, -1);
        if (!s.is_leaf(v)) {
            int nl = copy(s, s.kids[v].first);
            int nr = copy(s, s.kids[v].second);
            out.kids[me] = {nl, nr};
        }
        return me;
    };
    std::function<int(int)> go = [&](int v) -> int {
        if (t.is_leaf(v)) {
            int idx = next_leaf++;
            if (idx == leaf_i) return copy(sub, 0);
            int me = static_cast<int>(out.kids.size());
            out.kids.emplace_back(-1, -1);
            return me;
        }
        int me = static_cast<int>(out.kids.size());
        out.kids.emplace_back(-1, -1);
        int nl = go(t.kids[v].first);
        int nr = go(t.kids[v].second);
        out.kids[me] = {nl, nr};
        return me;
    };
    go(0);
    return out;
}

// Subtree of t rooted at node v, as its own tree.
BinaryTree subtree(const BinaryTree& t, int v) {
    BinaryTree out;
    out.kids.clear();
    std::function<int(int)> go = [&](int u) -> int {
        int me = static_cast<int>(out.kids.size());
        out.kids.emplace_back(-1, -1);
        if (!t.is_leaf(u)) {
            int nl = go(t.kids[u].first);
            int nr = go(t.kids[u].second);
            out.kids[me] = {nl, nr};
        }
        return me;
    };
    go(v);
    return out;
}

// Smallest tree containing both a and b as "prefixes" (superimposition).
BinaryTree tree_union(const BinaryTree& a, const BinaryTree& b) {
    BinaryTree out;
    out.kids.clear();
    std::function<int(int, int)> go = [&](int va, int vb) -> int {
        // va < 0 means "a has a leaf here" (copy rest of b), symmetrically vb.
        int me = static_cast<int>(out.kids.size());
        out.kids.emplace_back(-1, -1);
        bool la = va < 0 || a.is_leaf(va);
        bool lb = vb < 0 || b.is_leaf(vb);
        if (la && lb) return me;
        int al = la ? -1 : a.kids[va].first;
        int ar = la ? -1 : a.kids[va].second;
        int bl = lb ? -1 : b.kids[vb].first;
        int br = lb ? -1 : b.kids[vb].second;
        int nl = go(al, bl);
        int nr = go(ar, br);
        out.kids[me] = {nl, nr};
        return me;
    };
    go(0, 0);
    return out;
}

// For each leaf of `prefix` (a prefix of `full`), the subtree of `full`
// hanging below it.
std::vector<BinaryTree> leaf_completions(const BinaryTree& prefix, const BinaryTree& full) {
    std::vector<BinaryTree> out;
    std::function<void(int, int)> go = [&](int vp, int vf) {
        if (prefix.is_leaf(vp)) { out.push_back(subtree(full, vf)); return; }
        go(prefix.kids[vp].first, full.kids[vf].first);
        go(prefix.kids[vp].second, full.kids[vf].second);
    };
    go(0, 0);
    return out;
}

}  // namespace

ThompsonElement make_element_raw(const BinaryTree& top, const BinaryTree& bottom) {
    if (top.leaf_count() != bottom.leaf_count())
        throw ValidationError("leaf-count mismatch: top has " +
                              std::to_string(top.leaf_count()) + ", bottom has " +
                              std::to_string(bottom.leaf_count()));
    return ThompsonElement{top, bottom};
}

ThompsonElement reduce(const ThompsonElement& e) {
    ThompsonElement cur = e;
    for (;;) {
        auto pt = sibling_leaf_pairs(cur.top);
        auto pb = sibling_leaf_pairs(cur.bottom);
        std::vector<int> common;
        std::set_intersection(pt.begin(), pt.end(), pb.begin(), pb.end(),
                              std::back_inserter(common));
        if (common.empty()) return cur;
        cur.top = remove_caret(cur.top, common[0]);
        cur.bottom = remove_caret(cur.bottom, common[0]);
    }
}

ThompsonElement make_element(const BinaryTree& top, const BinaryTree& bottom) {
    return reduce(make_element_raw(top, bottom));
}

ThompsonElement inverse(const ThompsonElement& a) {
    return ThompsonElement{a.bottom, a.top};
}

ThompsonElement compose(const ThompsonElement& a, const ThompsonElement& b) {
    // a∘b: apply b (bottom_b -> top_b), then a (bottom_a -> top_a).
    // Expand both along the common refinement of b.top and a.bottom.
    BinaryTree u = tree_union(b.top, a.bottom);
    auto under_b = leaf_completions(b.top, u);     // graft onto b.bottom
    auto under_a = leaf_completions(a.bottom, u);  // graft onto a.top
    BinaryTree new_bottom = b.bottom;
    BinaryTree new_top = a.top;
    // Graft right-to-left so earlier leaf indices stay valid.
    for (int i = static_cast<int>(under_b.size()) - 1; i >= 0; --i)
        new_bottom = graft_at_leaf(new_bottom, i, under_b[i]);
    for (int i = static_cast<int>(under_a.size()) - 1; i >= 0; --i)
        new_top = graft_at_leaf(new_top, i, under_a[i]);
    return make_element(new_top, new_bottom);
}

DyadicPartition tree_partition(const BinaryTree& t) {
    DyadicPartition out;
    out.push_back(Dyadic(0, 0));
    // Leaf at depth d spans an interval of width 1/2^d.
    std::function<void(int, Dyadic, int)> go = [&](int v, Dyadic lo, int depth) {
        if (t.is_leaf(v)) {
            out.push_back(lo + Dyadic(1, depth));
            return;
        }
        go(t.kids[v].first, lo, depth + 1);
        go(t.kids[v].second, lo + Dyadic(1, depth + 1), depth + 1);
    };
    go(0, Dyadic(0, 0), 0);
    return out;
}

std::pair<DyadicPartition, DyadicPartition> element_to_partitions(const ThompsonElement& e) {
    return {tree_partition(e.bottom), tree_partition(e.top)};
}

}  // namespace tangles
