#pragma once

/**
 * @file thompson.hpp
 * @brief Elements of Thompson's group F as reduced pairs of rooted binary trees.
 *
 * Trees serialize as preorder bitstrings ("1" = internal node, "0" = leaf).
 * An element is a (top, bottom) pair with equal leaf counts; the induced
 * piecewise-linear map sends the bottom tree's dyadic partition (domain) to
 * the top tree's (range).
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tangles/dyadic.hpp"

namespace tangles {

// Rooted plane binary tree stored as a preorder node array.
// kids[i] = {left, right} child indices, or {-1, -1} for a leaf.
struct BinaryTree {
    std::vector<std::pair<int, int>> kids;

    BinaryTree() : kids{{-1, -1}} {}  // single leaf

    int size() const { return static_cast<int>(kids.size()); }
    bool is_leaf(int v) const { return kids[v].first < 0; }
    int leaf_count() const { return (size() + 1) / 2; }
    int internal_count() const { return size() / 2; }
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BinaryTree tree_from_code(const std::string& code);
std::string tree_to_code(const BinaryTree& t);

// Pair of trees with equal leaf counts.  make_element() reduces eagerly, so
// equality of elements is equality of codes.
struct ThompsonElement {
    BinaryTree top;     // range tree
    BinaryTree bottom;  // domain tree

    int leaves() const { return top.leaf_count(); }
    friend bool operator==(const ThompsonElement& a, const ThompsonElement& b) {
        return tree_to_code(a.top) == tree_to_code(b.top) &&
               tree_to_code(a.bottom) == tree_to_code(b.bottom);
    }
};

// Breakpoints 0 = p_0 < ... < p_k = 1, all dyadic.
using DyadicPartition = std::vector<Dyadic>;

ThompsonElement make_element(const BinaryTree& top, const BinaryTree& bottom);

// Unreduced constructor for callers that need the raw pair (e.g. psi).
ThompsonElement make_element_raw(const BinaryTree& top, const BinaryTree& bottom);

ThompsonElement reduce(const ThompsonElement& e);
ThompsonElement compose(const ThompsonElement& a, const ThompsonElement& b);
ThompsonElement inverse(const ThompsonElement& a);

// (domain, range) partitions induced by (bottom, top).
std::pair<DyadicPartition, DyadicPartition> element_to_partitions(const ThompsonElement& e);

// Partition of [0,1] whose intervals are the tree's leaves, left to right.
DyadicPartition tree_partition(const BinaryTree& t);

}  // namespace tangles
