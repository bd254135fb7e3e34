#pragma once

/**
 * @file jones_map.hpp
 * @brief The knot-closure maps: psi builds a link diagram directly from a
 *        tree-pair element; psi_prime closes the Conway tangle a chair
 *        diagram denotes.
 */

#include "tangles/constructions.hpp"
#include "tangles/planar.hpp"
#include "tangles/thompson.hpp"

namespace tangles {

// Link diagram of a tree-pair element: both trees share their leaf row, each
// caret becomes a crossing threaded by the strand weaving through the leaf
// gaps.  2(n-1) crossings for n >= 2 leaves; the identity closes to a
// two-crossing unknot.  `mirror` switches every crossing (mirror image).
PlanarDiagram psi(const ThompsonElement& e, bool mirror = false);

// psi plus the bookkeeping the reverse pipeline needs: final ids of the
// edges threading the n-1 leaf gaps (left to right) and of the exterior
// edge.  For the identity element `gaps` is empty and `exterior` is a
// main-circle edge of its two-curl unknot.
struct PsiImage {
    PlanarDiagram pd;
    std::vector<int> gaps;
    int exterior = 0;
};
PsiImage psi_image(const ThompsonElement& e);

// Tangle-algebra image of a chair diagram: fold the spec through tangle
// multiplication (product) or concatenation (concat), then close.
PlanarDiagram psi_prime(const ChairDiagram& c);

}  // namespace tangles
