#pragma once

/**
 * @file reverse.hpp
 * @brief From a link diagram back to a tree-pair element: checkerboard-shade,
 *        extract the signed graph of unshaded regions, isotope it onto a
 *        midline, normalize with Reidemeister graph moves, and read off the
 *        element.
 */

#include <vector>

#include "tangles/planar.hpp"
#include "tangles/thompson.hpp"

namespace tangles {

struct ReverseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Signed graph of the unshaded regions of a checkerboard-shaded diagram:
// one vertex per unshaded face (vertex 0 is the exterior), one signed edge
// per crossing.
struct SignedPlanarGraph {
    struct Edge {
        int u = 0, v = 0;
        int sign = +1;  // +1 or -1
    };
    int vertices = 0;
    std::vector<Edge> edges;  // one per crossing, in crossing order
    // Edge indices in counterclockwise order around each vertex (the rotation
    // system inherited from the diagram's face structure).
    std::vector<std::vector<int>> rotation;
};

// The same graph isotoped onto a horizontal midline: vertices v0..vm in a
// fixed left-to-right order (v0 exterior), arcs drawn above or below, with
// same-side arcs pairwise non-crossing.
struct MidlineArc {
    int i = 0, j = 0;  // i < j
    int sign = +1;
    bool above = true;
    friend bool operator==(const MidlineArc&, const MidlineArc&) = default;
};
struct SignedMidlineGraph {
    int vertices = 0;
    std::vector<MidlineArc> arcs;
    friend bool operator==(const SignedMidlineGraph&, const SignedMidlineGraph&) = default;
};

// Checkerboard-shades `d` with the exterior face unshaded and returns the
// signed graph of unshaded regions.  Requires a connected diagram with at
// least one crossing and no free loops.
SignedPlanarGraph extract_signed_graph(const PlanarDiagram& d);

// Finds a vertex order (exterior first) and a side assignment making all
// same-side arcs non-crossing, by exhaustive backtracking (first solution in
// lexicographic order).  Throws ReverseError if no 2-page layout exists or
// the graph exceeds the search bound.
SignedMidlineGraph linearize(const SignedPlanarGraph& g, int max_vertices = 16);

// True if every arc above is positive, every arc below negative, and every
// vertex except v0 has exactly one positive and one negative arc arriving
// from its left.
bool thompson_form(const SignedMidlineGraph& g);

// Drives the graph to thompson form with link-preserving Reidemeister I/II
// graph moves: (1) relocate wrong-side arcs, (2) split vertices with several
// same-sign incoming arcs, (3) supply missing incoming arcs via new vertices
// with double bonds.  Self-loop arcs are deleted first (RI).
SignedMidlineGraph normalize(const SignedMidlineGraph& g);

// RI deletions, exposed for shrink-testing: drop a self-loop arc, or a
// degree-one vertex together with its arc.
SignedMidlineGraph delete_self_loops(const SignedMidlineGraph& g);
SignedMidlineGraph delete_degree_one(const SignedMidlineGraph& g, int vertex);

// Reads the tree pair off a thompson-form graph (positive arcs encode the
// top tree, negative arcs the bottom tree).  Throws ReverseError naming the
// offending vertex if the form predicate fails.
ThompsonElement graph_to_element(const SignedMidlineGraph& g);

// Midline graph of psi(e): unshaded regions ordered by where they meet the
// leaf line, exterior first.  Always in thompson form.
SignedMidlineGraph element_to_graph(const ThompsonElement& e);

// Convenience composition: extract, linearize, normalize, read off.
ThompsonElement reverse_diagram(const PlanarDiagram& d);

}  // namespace tangles
