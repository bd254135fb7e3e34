#pragma once

/**
 * @file planar.hpp
 * @brief Combinatorial link and tangle diagrams as PD codes, plus the tangle
 *        algebra (reflect, multiply, add, concatenate, close).
 *
 * A crossing is a counterclockwise 4-tuple of edge ids with the under-strand
 * occupying tuple positions 1 and 3 (indices 0 and 2 here); positions 2 and 4
 * are the over-strand.  Every edge id occurs exactly twice in a closed
 * diagram.  Crossing-free circles are tracked by count in `loops`.
 */

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tangles {

struct PlanarDiagram {
    std::vector<std::array<int, 4>> crossings;  // CCW, under at indices 0 and 2
    int loops = 0;                              // crossing-free circles

    int crossing_count() const { return static_cast<int>(crossings.size()); }
    int edge_count() const;
};

// A 4-boundary tangle: a PD payload plus four open edge-ends.  A crossing-free
// strand between two boundary points is encoded by those two boundary labels
// sharing one edge id (which then occurs in no crossing tuple).
struct TangleDiagram {
    PlanarDiagram pd;
    int N = 0, E = 0, S = 0, W = 0;
};

struct DiagramError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// n-crossing twist tangle; strings originate from N and W.  For n > 0 the
// horizontal strand passes over the vertical strand at every crossing, for
// n < 0 under.  n == 0 yields the crossing-free tangle joining N-S and E-W.
TangleDiagram tangle_from_integer(int n);

// Mirror reflection of the tangle.  The mirror axis is the diagonal fixed
// by the closure pairing (N-E and S-W), so closure(reflect(t)) is the
// mirror image of closure(t): every rotation tuple reverses, N swaps with
// E and S with W.  An involution; brackets transform by A <-> A^-1.
TangleDiagram tangle_reflect(const TangleDiagram& t);

// F * G: F is reflected, then its N/W ends join G's E/S ends.
TangleDiagram tangle_multiply(const TangleDiagram& f, const TangleDiagram& g);

// F + G: G's N/W ends join F's E/S ends.
TangleDiagram tangle_add(const TangleDiagram& f, const TangleDiagram& g);

// F , G: both tangles reflected, then wired as in multiplication.
TangleDiagram tangle_concat(const TangleDiagram& f, const TangleDiagram& g);

// Join N-E and S-W outside the disk.
PlanarDiagram closure(const TangleDiagram& t);

// Rotation-system face walk.  Faces are returned as cycles of (crossing,
// slot) darts.  Requires a connected diagram with at least one crossing.
using Dart = std::pair<int, int>;  // (crossing index, tuple slot)
std::vector<std::vector<Dart>> faces(const PlanarDiagram& d);

// Number of link components (strand classes through crossings, plus loops).
int components(const PlanarDiagram& d);

// True if all crossings are reachable from crossing 0 through shared edges.
bool is_connected(const PlanarDiagram& d);

// --- assembly helper used by the operations above and by psi -------------

// Incremental builder: collect crossings and boundary ports with arbitrary
// ids, declare splices between ids, then canonicalize to dense 1..E ids.
class DiagramBuilder {
  public:
    int fresh() { return next_id_++; }
    void add_crossing(int e0, int e1, int e2, int e3);
    void splice(int a, int b);  // ids a and b are the same edge

    // Resolve splices; relabel ids; spliced classes left with no crossing or
    // boundary occurrence become crossing-free circles.  Ids pointed to by
    // `track` are rewritten to their final labels (they must occur in
    // crossings, unlike boundary ports).
    PlanarDiagram finish(const std::vector<int*>& track = {});
    TangleDiagram finish_tangle(int n, int e, int s, int w);

  private:
    int find(int x);
    PlanarDiagram assemble(std::vector<int*> boundary, const std::vector<int*>& track = {});

    int next_id_ = 1;
    std::vector<std::array<int, 4>> crossings_;
    std::vector<std::pair<int, int>> splices_;
    std::vector<int> parent_;
};

// Canonical tuple form: rotate so the smaller under-strand id is entry 1.
void canonicalize_tuples(PlanarDiagram& d);

}  // namespace tangles
