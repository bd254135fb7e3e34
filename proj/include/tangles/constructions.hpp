#pragma once

/**
 * @file constructions.hpp
 * @brief Chair-pattern diagram families T (product) and U (concatenation)
 *        and their expansion into tree-pair elements.
 */

#include <string>
#include <vector>

#include "tangles/thompson.hpp"

namespace tangles {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Abstract chair diagram: a row of glyph blocks on a 45-degree grid.
struct ChairDiagram {
    enum class Kind { Product, Concat };
    Kind kind = Kind::Product;
    std::vector<int> spec;  // the tuple (x_1, ..., x_k)
};

// T(x_1,...,x_k); requires every x_i >= 1.
ChairDiagram build_product(const std::vector<int>& xs);

// U(x_1,...,x_k); requires every x_i >= 2.
ChairDiagram build_concat(const std::vector<int>& xs);

// Glyph counts per block, left to right.  Product: (x_1-1, ..., x_{k-1}-1,
// x_k).  Concat: (x_i - 1) per story (x_i - 2 chairs plus one pillar).
std::vector<int> blocks(const ChairDiagram& c);

// The tree-pair element the chair diagram abbreviates.
ThompsonElement expand(const ChairDiagram& c);

}  // namespace tangles
