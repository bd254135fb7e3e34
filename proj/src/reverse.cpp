#include "tangles/reverse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tangles/jones_map.hpp"

namespace tangles {

namespace {

// Face index containing each dart.
std::vector<std::vector<int>> face_of_darts(const PlanarDiagram& d,
                                            const std::vector<std::vector<Dart>>& fs) {
    std::vector<std::vector<int>> face_of(d.crossing_count(), std::vector<int>(4, -1));
    for (int f = 0; f < static_cast<int>(fs.size()); ++f)
        for (auto [c, s] : fs[f]) face_of[c][s] = f;
    return face_of;
}

// Largest face, ties broken by discovery order: the exterior region.
int exterior_face(const std::vector<std::vector<Dart>>& fs) {
    int best = 0;
    for (int f = 1; f < static_cast<int>(fs.size()); ++f)
        if (fs[f].size() > fs[best].size()) best = f;
    return best;
}

// Checkerboard coloring: true = shaded.  Faces across an edge get opposite
// colors; the exterior face is unshaded.
std::vector<bool> shade(const PlanarDiagram& d,
                        const std::vector<std::vector<Dart>>& fs,
                        const std::vector<std::vector<int>>& face_of, int ext) {
    std::map<int, std::vector<int>> edge_faces;
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) edge_faces[d.crossings[c][s]].push_back(face_of[c][s]);
    std::vector<int> color(fs.size(), -1);
    color[ext] = 0;
    std::vector<int> stack{ext};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto& [e, pair] : edge_faces) {
            if (pair[0] != f && pair[1] != f) continue;
            int g = pair[0] == f ? pair[1] : pair[0];
            if (color[g] < 0) {
                color[g] = 1 - color[f];
                stack.push_back(g);
            } else if (color[g] == color[f]) {
                throw ReverseError("diagram has no checkerboard shading");
            }
        }
    }
    std::vector<bool> shaded(fs.size());
    for (std::size_t f = 0; f < fs.size(); ++f) {
        if (color[f] < 0) throw ReverseError("disconnected face structure");
        shaded[f] = color[f] == 1;
    }
    return shaded;
}

bool arcs_cross(int a, int b, int c, int d) {
    // Same-side arcs (a,b), (c,d) with a<b, c<d; shared endpoints never cross.
    if (a == c || a == d || b == c || b == d) return false;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

SignedPlanarGraph extract_signed_graph(const PlanarDiagram& d) {
    if (d.loops > 0) throw ReverseError("diagram has free loops (disconnected)");
    if (d.crossings.empty()) throw ReverseError("need at least one crossing");
    if (!is_connected(d)) throw ReverseError("diagram not connected");
    auto fs = faces(d);
    auto face_of = face_of_darts(d, fs);
    int ext = exterior_face(fs);
    auto shaded = shade(d, fs, face_of, ext);

    // Number unshaded faces: exterior first, then face-discovery order.
    std::vector<int> vertex_of(fs.size(), -1);
    vertex_of[ext] = 0;
    int next = 1;
    for (std::size_t f = 0; f < fs.size(); ++f)
        if (!shaded[f] && vertex_of[f] < 0) vertex_of[f] = next++;

    SignedPlanarGraph g;
    g.vertices = next;
    for (int c = 0; c < d.crossing_count(); ++c) {
        // Corner k sits between darts k and k+1 and belongs to the face of
        // dart k+1.  Opposite corners share a color; the crossing joins its
        // two unshaded corners.  An unshaded corner pair {0,2} (the corners
        // swept under-to-over counterclockwise) marks a positive crossing,
        // {1,3} a negative one.
        std::array<int, 4> corner;
        for (int k = 0; k < 4; ++k) corner[k] = face_of[c][(k + 1) % 4];
        SignedPlanarGraph::Edge e;
        if (!shaded[corner[0]]) {
            e = {vertex_of[corner[0]], vertex_of[corner[2]], +1};
        } else {
            e = {vertex_of[corner[1]], vertex_of[corner[3]], -1};
        }
        g.edges.push_back(e);
    }
    g.rotation.assign(g.vertices, {});
    for (std::size_t f = 0; f < fs.size(); ++f) {
        if (shaded[f]) continue;
        for (auto [c, s] : fs[f]) g.rotation[vertex_of[f]].push_back(c);
    }
    return g;
}

SignedMidlineGraph linearize(const SignedPlanarGraph& g, int max_vertices) {
    if (g.vertices > max_vertices)
        throw ReverseError("linearize: graph exceeds the search bound");
    int n = g.vertices;
    int m = static_cast<int>(g.edges.size());
    std::vector<int> pos(n, -1);      // vertex -> midline position
    std::vector<int> arc_side(m, 0);  // 0 unplaced, +1 above, -1 below
    std::vector<std::array<int, 2>> span(m);  // placed arcs: (i, j)
    std::vector<MidlineArc> placed;           // for crossing checks

    std::vector<int> order;  // positions -> vertex
    bool found = false;
    SignedMidlineGraph out;

    // Arcs from the vertex being placed to already-placed vertices, assigned
    // sides one at a time with backtracking.
    std::function<bool(const std::vector<int>&, std::size_t)> assign =
        [&](const std::vector<int>& newly, std::size_t k) -> bool {
        if (k == newly.size()) return true;
        int e = newly[k];
        int natural = g.edges[e].sign > 0 ? +1 : -1;
        for (int side : {natural, -natural}) {
            bool ok = true;
            for (const auto& a : placed) {
                if ((a.above ? +1 : -1) != side) continue;
                if (arcs_cross(a.i, a.j, span[e][0], span[e][1])) { ok = false; break; }
            }
            if (!ok) continue;
            arc_side[e] = side;
            placed.push_back({span[e][0], span[e][1], g.edges[e].sign, side > 0});
            if (assign(newly, k + 1)) return true;
            placed.pop_back();
            arc_side[e] = 0;
        }
        return false;
    };

    std::function<bool()> place = [&]() -> bool {
        int p = static_cast<int>(order.size());
        if (p == n) return true;
        for (int v = p == 0 ? 0 : 1; v < n; ++v) {
            if (pos[v] >= 0 || (p == 0 && v != 0)) continue;
            pos[v] = p;
            order.push_back(v);
            std::vector<int> newly;
            bool viable = true;
            for (int e = 0; e < m; ++e) {
                auto [a, b] = std::pair(g.edges[e].u, g.edges[e].v);
                if ((a == v && pos[b] >= 0 && b != v) || (b == v && pos[a] >= 0 && a != v) ||
                    (a == v && b == v)) {
                    int i = std::min(pos[a], pos[b]), j = std::max(pos[a], pos[b]);
                    span[e] = {i, j};
                    newly.push_back(e);
                }
            }
            std::size_t base = placed.size();
            if (viable && assign(newly, 0) && place()) return true;
            while (placed.size() > base) {
                arc_side[newly[placed.size() - base - 1]] = 0;
                placed.pop_back();
            }
            for (int e : newly) arc_side[e] = 0;
            order.pop_back();
            pos[v] = -1;
        }
        return false;
    };

    found = place();
    if (!found) throw ReverseError("linearize: no two-page layout found");
    out.vertices = n;
    for (int e = 0; e < m; ++e)
        out.arcs.push_back({span[e][0], span[e][1], g.edges[e].sign, arc_side[e] > 0});
    return out;
}

bool thompson_form(const SignedMidlineGraph& g) {
    std::vector<int> pos_in(g.vertices, 0), neg_in(g.vertices, 0);
    for (const auto& a : g.arcs) {
        if (a.i == a.j) return false;
        if (a.above != (a.sign > 0)) return false;
        ++(a.sign > 0 ? pos_in : neg_in)[a.j];
    }
    for (int v = 1; v < g.vertices; ++v)
        if (pos_in[v] != 1 || neg_in[v] != 1) return false;
    return pos_in[0] == 0 && neg_in[0] == 0;
}

SignedMidlineGraph delete_self_loops(const SignedMidlineGraph& g) {
    SignedMidlineGraph out = g;
    std::erase_if(out.arcs, [](const MidlineArc& a) { return a.i == a.j; });
    return out;
}

SignedMidlineGraph delete_degree_one(const SignedMidlineGraph& g, int vertex) {
    int deg = 0;
    for (const auto& a : g.arcs) deg += (a.i == vertex) + (a.j == vertex);
    if (deg != 1) throw ReverseError("vertex is not degree one");
    SignedMidlineGraph out;
    out.vertices = g.vertices - 1;
    for (const auto& a : g.arcs) {
        if (a.i == vertex || a.j == vertex) continue;
        MidlineArc b = a;
        if (b.i > vertex) --b.i;
        if (b.j > vertex) --b.j;
        out.arcs.push_back(b);
    }
    return out;
}

namespace {

// Shift all arc endpoints >= p up by k (vertex insertion).
void shift_from(std::vector<MidlineArc>& arcs, int p, int k) {
    for (auto& a : arcs) {
        if (a.i >= p) a.i += k;
        if (a.j >= p) a.j += k;
    }
}

bool crosses_any(const std::vector<MidlineArc>& arcs, const MidlineArc& cand) {
    for (const auto& a : arcs)
        if (a.above == cand.above && arcs_cross(a.i, a.j, cand.i, cand.j)) return true;
    return false;
}

bool side_of(int sign) { return sign > 0; }

}  // namespace

SignedMidlineGraph normalize(const SignedMidlineGraph& g) {
    SignedMidlineGraph w = delete_self_loops(g);

    // Reidemeister II cancellations first: a +/- pair of parallel arcs on the
    // same side bounds an empty lens (draw them innermost over their span),
    // and a +/- pair spanning adjacent vertices does so on any sides.  Both
    // disappear without changing the link.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t x = 0; x < w.arcs.size() && !changed; ++x)
            for (std::size_t y = x + 1; y < w.arcs.size() && !changed; ++y) {
                const auto &a = w.arcs[x], &b = w.arcs[y];
                if (a.i != b.i || a.j != b.j || a.sign != -b.sign) continue;
                if (a.above != b.above && a.j != a.i + 1) continue;
                w.arcs.erase(w.arcs.begin() + y);
                w.arcs.erase(w.arcs.begin() + x);
                changed = true;
            }
    }

    // Phase 1: force positive arcs above and negative arcs below.  A
    // wrong-side arc (i,j,s) is replaced by a path through two new inserted
    // vertices w1,w2, carrying an extra cancelling +/- pair: (i,w1,+,above),
    // (w1,w2,s,side of s), (w2,j,-,below) — or the mirror order with the
    // negative arc first.  The pair position scans left to right until the
    // layout stays planar.
    for (;;) {
        int pick = -1;
        for (std::size_t k = 0; k < w.arcs.size(); ++k) {
            const auto& a = w.arcs[k];
            if (a.above != side_of(a.sign) &&
                (pick < 0 || std::tie(a.i, a.j) < std::tie(w.arcs[pick].i, w.arcs[pick].j)))
                pick = static_cast<int>(k);
        }
        if (pick < 0) break;
        MidlineArc a = w.arcs[pick];
        w.arcs.erase(w.arcs.begin() + pick);
        bool done = false;
        for (int neg_first = 0; neg_first < 2 && !done; ++neg_first) {
            for (int p = a.i + 1; p <= a.j && !done; ++p) {  // position of w1
                std::vector<MidlineArc> trial = w.arcs;
                shift_from(trial, p, 2);
                int i = a.i, j = a.j + 2, w1 = p, w2 = p + 1;
                int s1 = neg_first ? -1 : +1, s2 = -s1;
                std::vector<MidlineArc> add{{i, w1, s1, side_of(s1)},
                                            {w1, w2, a.sign, side_of(a.sign)},
                                            {w2, j, s2, side_of(s2)}};
                bool ok = true;
                for (const auto& c : add)
                    if (crosses_any(trial, c)) { ok = false; break; }
                if (!ok) continue;
                for (const auto& c : add) trial.push_back(c);
                w.arcs = std::move(trial);
                w.vertices += 2;
                done = true;
            }
        }
        if (!done)
            throw ReverseError("normalize: cannot relocate arc (" + std::to_string(a.i) +
                               "," + std::to_string(a.j) + ") planarly");
    }

    // Phase 2: split vertices with several same-sign incoming arcs.  The
    // innermost arc stays; each further arc (inner to outer) moves to a new
    // clone to the right, reached from the previous clone through a spacer
    // by a cancelling pair (prev,w,s), (w,clone,-s).  Outgoing arcs follow
    // the last clone.
    for (;;) {
        int v = -1, s = 0;
        for (int cand = 1; cand < w.vertices && v < 0; ++cand)
            for (int sign : {+1, -1}) {
                int cnt = 0;
                for (const auto& a : w.arcs) cnt += (a.j == cand && a.sign == sign);
                if (cnt > 1) { v = cand; s = sign; break; }
            }
        if (v < 0) break;
        // Incoming arcs of sign s into v, innermost (largest i) first.
        std::vector<int> in;
        for (std::size_t k = 0; k < w.arcs.size(); ++k)
            if (w.arcs[k].j == v && w.arcs[k].sign == s) in.push_back(static_cast<int>(k));
        std::sort(in.begin(), in.end(),
                  [&](int x, int y) { return w.arcs[x].i > w.arcs[y].i; });
        int prev = v;
        for (std::size_t t = 1; t < in.size(); ++t) {
            int p = prev + 1;  // spacer position; clone at p+1
            shift_from(w.arcs, p, 2);
            if (w.arcs[in[t]].i >= p - 0) {}  // endpoints already shifted above
            int spacer = p, clone = p + 1;
            w.arcs[in[t]].j = clone;
            w.arcs.push_back({prev, spacer, s, side_of(s)});
            w.arcs.push_back({spacer, clone, -s, side_of(-s)});
            w.vertices += 2;
            prev = clone;
        }
        // Outgoing arcs of v move to the last clone.
        for (auto& a : w.arcs)
            if (a.i == v && a.j > prev) a.i = prev;
    }

    // Phase 3: supply missing incoming arcs.  A new vertex just left of the
    // needy one gets a +/- double bond with its own left neighbour and hands
    // the needed sign over.
    for (;;) {
        int v = -1, s = 0;
        for (int cand = 1; cand < w.vertices && v < 0; ++cand)
            for (int sign : {+1, -1}) {
                int cnt = 0;
                for (const auto& a : w.arcs) cnt += (a.j == cand && a.sign == sign);
                if (cnt == 0) { v = cand; s = sign; break; }
            }
        if (v < 0) break;
        shift_from(w.arcs, v, 1);
        int f = v;  // new vertex, old v now at v+1
        w.arcs.push_back({f - 1, f, +1, true});
        w.arcs.push_back({f - 1, f, -1, false});
        w.arcs.push_back({f, v + 1, s, side_of(s)});
        w.vertices += 1;
    }

    if (!thompson_form(w)) throw ReverseError("normalize: failed to reach thompson form");
    return w;
}

SignedMidlineGraph element_to_graph(const ThompsonElement& e) {
    if (e.leaves() == 1) {
        // Identity: no leaf gaps, so the graph is the bare exterior vertex
        // (the psi image's two curls are RI artifacts with no arcs to keep).
        SignedMidlineGraph g;
        g.vertices = 1;
        return g;
    }
    PsiImage img = psi_image(e);
    auto fs = faces(img.pd);
    auto face_of = face_of_darts(img.pd, fs);

    std::map<int, std::vector<int>> edge_faces;
    for (int c = 0; c < img.pd.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s)
            edge_faces[img.pd.crossings[c][s]].push_back(face_of[c][s]);

    // The outer region borders the shared trunk edge; of the two candidate
    // faces, take the later one in traversal order (empirically the one
    // giving thompson-form output, see normalize tests).
    int ext = std::max(edge_faces.at(img.exterior)[0], edge_faces.at(img.exterior)[1]);
    auto shaded = shade(img.pd, fs, face_of, ext);

    // Midline positions: exterior region first, then the region threading
    // each leaf gap, left to right.  The unshaded faces are exactly these.
    std::vector<int> vertex_of(fs.size(), -1);
    vertex_of[ext] = 0;
    int posn = 1;
    for (int gap : img.gaps) {
        auto& pair = edge_faces.at(gap);
        int f = !shaded[pair[0]] ? pair[0] : pair[1];
        if (shaded[f] || vertex_of[f] >= 0)
            throw ReverseError("gap region mapping failed");
        vertex_of[f] = posn++;
    }
    for (std::size_t f = 0; f < fs.size(); ++f)
        if (!shaded[f] && vertex_of[f] < 0)
            throw ReverseError("unshaded region is neither exterior nor a gap");

    SignedMidlineGraph out;
    out.vertices = posn;
    for (int c = 0; c < img.pd.crossing_count(); ++c) {
        std::array<int, 4> corner;
        for (int k = 0; k < 4; ++k) corner[k] = face_of[c][(k + 1) % 4];
        int a, b, sign;
        if (!shaded[corner[0]]) {
            a = vertex_of[corner[0]], b = vertex_of[corner[2]], sign = +1;
        } else {
            a = vertex_of[corner[1]], b = vertex_of[corner[3]], sign = -1;
        }
        out.arcs.push_back({std::min(a, b), std::max(a, b), sign, sign > 0});
    }
    return out;
}

namespace {

// Rebuild the binary tree whose caret gaps carry the given parent relation:
// gap j (between leaves j and j+1) hangs below parent[j] < j, 0 = exterior.
// The caret of gap j* roots the leaf interval whose outside lies left of it,
// so recursively the split point is the largest gap with an outside parent.
BinaryTree tree_from_gap_parents(const std::vector<int>& parent, int n) {
    std::string code;
    std::function<void(int, int)> rec = [&](int lo, int hi) {
        if (lo == hi) {
            code += '0';
            return;
        }
        int split = -1;
        for (int j = lo; j < hi; ++j)
            if (parent[j] < lo) split = j;
        if (split < 0) throw ReverseError("graph_to_element: arcs are not a gap forest");
        code += '1';
        rec(lo, split);
        rec(split + 1, hi);
    };
    rec(1, n);
    return tree_from_code(code);
}

}  // namespace

ThompsonElement graph_to_element(const SignedMidlineGraph& g) {
    if (!thompson_form(g)) throw ReverseError("graph_to_element: not in thompson form");
    int n = g.vertices;
    std::vector<int> top_parent(n, -1), bottom_parent(n, -1);
    for (const auto& a : g.arcs) (a.sign > 0 ? top_parent : bottom_parent)[a.j] = a.i;
    return make_element_raw(tree_from_gap_parents(top_parent, n),
                            tree_from_gap_parents(bottom_parent, n));
}

ThompsonElement reverse_diagram(const PlanarDiagram& d) {
    return graph_to_element(normalize(linearize(extract_signed_graph(d))));
}

}  // namespace tangles
