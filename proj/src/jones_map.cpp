#include "tangles/jones_map.hpp"

#include <functional>

namespace tangles {

namespace {

// Per-node leaf spans (1-based global leaf indices, left to right).
struct Spans {
    std::vector<int> lo, hi;
};

Spans leaf_spans(const BinaryTree& t, int& next_leaf) {
    Spans s;
    s.lo.assign(t.size(), 0);
    s.hi.assign(t.size(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (t.is_leaf(v)) {
            s.lo[v] = s.hi[v] = next_leaf++;
            return;
        }
        rec(t.kids[v].first);
        rec(t.kids[v].second);
        s.lo[v] = s.lo[t.kids[v].first];
        s.hi[v] = s.hi[t.kids[v].second];
    };
    rec(0);
    return s;
}

}  // namespace

PsiImage psi_image(const ThompsonElement& e) {
    DiagramBuilder b;
    PsiImage out;
    int n = e.leaves();
    if (n == 1) {
        // Identity: the strand doubles back over itself along the trunk,
        // giving a two-crossing (two-curl) unknot.  Main circle a-c with a
        // curl loop at each crossing.
        int a = b.fresh(), c = b.fresh(), curl1 = b.fresh(), curl2 = b.fresh();
        b.add_crossing(a, c, curl1, curl1);
        b.add_crossing(c, a, curl2, curl2);
        out.exterior = a;
        out.pd = b.finish({&out.exterior});
    } else {
        std::vector<int> leaf_edge(n + 1), gap_edge(n);
        for (int j = 1; j <= n; ++j) leaf_edge[j] = b.fresh();
        for (int i = 1; i < n; ++i) gap_edge[i] = b.fresh();
        int exterior = b.fresh();  // shared trunk above both roots

        auto emit_tree = [&](const BinaryTree& t, bool top) {
            int next_leaf = 1;
            Spans s = leaf_spans(t, next_leaf);
            std::vector<int> trunk(t.size(), 0);
            for (int v = 0; v < t.size(); ++v)
                if (!t.is_leaf(v)) trunk[v] = v == 0 ? exterior : b.fresh();
            for (int v = 0; v < t.size(); ++v) {
                if (t.is_leaf(v)) continue;
                auto branch = [&](int child) {
                    return t.is_leaf(child) ? leaf_edge[s.lo[child]] : trunk[child];
                };
                int left = branch(t.kids[v].first);
                int right = branch(t.kids[v].second);
                int gap = gap_edge[s.hi[t.kids[v].first]];
                // CCW tuples, under-strand at slots 0 and 2: the weaving
                // strand passes under each caret's trunk line.
                if (top)
                    b.add_crossing(gap, right, trunk[v], left);
                else
                    b.add_crossing(trunk[v], right, gap, left);
            }
        };
        emit_tree(e.top, true);
        emit_tree(e.bottom, false);
        out.gaps.assign(gap_edge.begin() + 1, gap_edge.end());
        out.exterior = exterior;
        std::vector<int*> track{&out.exterior};
        for (int& g : out.gaps) track.push_back(&g);
        out.pd = b.finish(track);
    }
    return out;
}

PlanarDiagram psi(const ThompsonElement& e, bool mirror) {
    PlanarDiagram out = psi_image(e).pd;
    if (mirror) {
        // Switch every crossing: same shadow, opposite chirality.
        for (auto& c : out.crossings) c = {c[1], c[2], c[3], c[0]};
        canonicalize_tuples(out);
    }
    return out;
}

PlanarDiagram psi_prime(const ChairDiagram& c) {
    TangleDiagram t;
    bool first = true;
    for (int x : c.spec) {
        TangleDiagram piece = tangle_from_integer(x);
        if (first) { t = piece; first = false; continue; }
        t = c.kind == ChairDiagram::Kind::Product ? tangle_multiply(t, piece)
                                                  : tangle_concat(t, piece);
    }
    return closure(t);
}

}  // namespace tangles
