#pragma once

/**
 * @file invariants.hpp
 * @brief Exact knot invariants: Kauffman bracket, writhe, Jones polynomial
 *        set over orientation classes, and the Goeritz determinant.
 */

#include <set>
#include <vector>

#include "tangles/laurent.hpp"
#include "tangles/planar.hpp"

namespace tangles {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxCrossings = 28;

// Kauffman bracket with the crossing-free circle normalized to 1.  The state
// sum is evaluated by Temperley-Lieb frontier contraction, which agrees with
// the 2^c smoothing enumeration term by term; `max_crossings` guards runtime.
LaurentPoly kauffman_bracket(const PlanarDiagram& d,
                             int max_crossings = kDefaultMaxCrossings);

// Reference 2^c smoothing enumeration; used to cross-check the contraction
// on small diagrams.
LaurentPoly kauffman_bracket_naive(const PlanarDiagram& d);

// Sum of crossing signs; flips[i] reverses the traversal direction of strand
// component i (components ordered as discovered, crossing-free loops last and
// sign-irrelevant).
int writhe(const PlanarDiagram& d, const std::vector<bool>& flips);

// Number of strand components passing through crossings (excludes loops).
int strand_components(const PlanarDiagram& d);

// { (-A)^(-3w) * bracket : w over all 2^(k-1) orientation classes }.
std::set<LaurentPoly> jones_set(const PlanarDiagram& d,
                                int max_crossings = kDefaultMaxCrossings);

// |det| of the Goeritz matrix with the exterior row/column deleted; the link
// determinant.  Diagrams with crossing-free circles are split links (det 0).
long long goeritz_determinant(const PlanarDiagram& d);

// |V(t = -1)| from a Jones representative, evaluated exactly at A = a
// primitive eighth root of unity (Gaussian-integer arithmetic).
long long determinant_via_jones(const LaurentPoly& jones);

}  // namespace tangles
