#include "tangles/planar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace tangles {

int PlanarDiagram::edge_count() const {
    std::set<int> ids;
    for (const auto& c : crossings) ids.insert(c.begin(), c.end());
    return static_cast<int>(ids.size());
}

void DiagramBuilder::add_crossing(int e0, int e1, int e2, int e3) {
    crossings_.push_back({e0, e1, e2, e3});
}

void DiagramBuilder::splice(int a, int b) { splices_.emplace_back(a, b); }

int DiagramBuilder::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

PlanarDiagram DiagramBuilder::assemble(std::vector<int*> boundary,
                                       const std::vector<int*>& track) {
    parent_.resize(next_id_);
    for (int i = 0; i < next_id_; ++i) parent_[i] = i;
    for (auto [a, b] : splices_) parent_[find(a)] = find(b);

    // Count occurrences per id class over crossing slots and boundary ports.
    std::map<int, int> occ;
    for (auto& c : crossings_)
        for (int s = 0; s < 4; ++s) ++occ[find(c[s])];
    for (int* p : boundary) ++occ[find(*p)];

    for (auto [cls, n] : occ) {
        if (n != 2)
            throw DiagramError("edge class with " + std::to_string(n) +
                               " occurrences (expected 2)");
    }

    // Splice classes that vanished entirely are closed crossing-free circles.
    int extra_loops = 0;
    std::set<int> seen;
    for (auto [a, b] : splices_) {
        for (int x : {a, b}) {
            int r = find(x);
            if (!occ.count(r) && seen.insert(r).second) ++extra_loops;
        }
    }

    // Dense relabeling in order of first appearance.
    std::map<int, int> dense;
    auto label = [&](int x) {
        int r = find(x);
        auto it = dense.find(r);
        if (it != dense.end()) return it->second;
        int v = static_cast<int>(dense.size()) + 1;
        dense[r] = v;
        return v;
    };
    PlanarDiagram out;
    for (auto& c : crossings_)
        out.crossings.push_back({label(c[0]), label(c[1]), label(c[2]), label(c[3])});
    for (int* p : boundary) *p = label(*p);
    for (int* p : track) *p = label(*p);
    out.loops = extra_loops;
    canonicalize_tuples(out);
    return out;
}

PlanarDiagram DiagramBuilder::finish(const std::vector<int*>& track) {
    return assemble({}, track);
}

TangleDiagram DiagramBuilder::finish_tangle(int n, int e, int s, int w) {
    TangleDiagram t;
    t.N = n; t.E = e; t.S = s; t.W = w;
    t.pd = assemble({&t.N, &t.E, &t.S, &t.W});
    return t;
}

void canonicalize_tuples(PlanarDiagram& d) {
    for (auto& c : d.crossings) {
        if (c[2] < c[0]) c = {c[2], c[3], c[0], c[1]};
    }
}

TangleDiagram tangle_from_integer(int n) {
    DiagramBuilder b;
    if (n == 0) {
        int ns = b.fresh(), ew = b.fresh();
        // 0-tangle convention: N-S and E-W strands (the identity for
        // multiplication's reflection bookkeeping), pinned by the
        // concatenation identity property test.
        TangleDiagram t = b.finish_tangle(ns, ew, ns, ew);
        return t;
    }
    int k = n > 0 ? n : -n;
    // Crossing i has corners a=NW, b=NE, c=SE, d=SW; consecutive crossings
    // chain NE->NW and SE->SW; boundary N=a_1, W=d_1, E=b_k, S=c_k.
    std::vector<int> a(k), bb(k), c(k), dd(k);
    for (int i = 0; i < k; ++i) {
        a[i] = b.fresh(); bb[i] = b.fresh(); c[i] = b.fresh(); dd[i] = b.fresh();
    }
    for (int i = 0; i < k; ++i) {
        if (n > 0)
            b.add_crossing(c[i], bb[i], a[i], dd[i]);  // under NW-SE, over SW-NE
        else
            b.add_crossing(bb[i], a[i], dd[i], c[i]);  // under SW-NE, over NW-SE
    }
    for (int i = 0; i + 1 < k; ++i) {
        b.splice(bb[i], a[i + 1]);
        b.splice(c[i], dd[i + 1]);
    }
    return b.finish_tangle(a[0], bb[k - 1], c[k - 1], dd[0]);
}

namespace {

// Copy a tangle into a builder with fresh ids; returns the new boundary.
struct Ported { int N, E, S, W; };

Ported import_tangle(DiagramBuilder& b, const TangleDiagram& t) {
    // Map the tangle's dense ids to fresh builder ids.
    std::map<int, int> m;
    auto get = [&](int x) {
        auto it = m.find(x);
        if (it != m.end()) return it->second;
        int v = b.fresh();
        m[x] = v;
        return v;
    };
    for (const auto& c : t.pd.crossings)
        b.add_crossing(get(c[0]), get(c[1]), get(c[2]), get(c[3]));
    Ported p{get(t.N), get(t.E), get(t.S), get(t.W)};
    // A crossing-free strand shares one id between two ports; the shared id
    // maps to one fresh id used twice, which the builder resolves correctly
    // only if we splice a synthetic pair -- avoided by just reusing the id.
    // Free loops copy over verbatim.
    for (int i = 0; i < t.pd.loops; ++i) {
        int u = b.fresh();
        b.splice(u, u);  // a class with no occurrences: one circle
    }
    return p;
}

}  // namespace

namespace {

// Top-bottom flip used inside the wiring of multiplication and
// concatenation: reverse every rotation tuple, swap N and S.
TangleDiagram flip_tangle(const TangleDiagram& t) {
    TangleDiagram out = t;
    for (auto& c : out.pd.crossings) c = {c[0], c[3], c[2], c[1]};
    std::swap(out.N, out.S);
    canonicalize_tuples(out.pd);
    return out;
}

}  // namespace

TangleDiagram tangle_reflect(const TangleDiagram& t) {
    // Mirror through the diagonal axis that fixes the closure pairing
    // (N joins E, S joins W), so the closure of a reflected tangle is the
    // mirror image of the closure: reverse every tuple, swap N with E and
    // S with W.
    TangleDiagram out = t;
    for (auto& c : out.pd.crossings) c = {c[0], c[3], c[2], c[1]};
    std::swap(out.N, out.E);
    std::swap(out.S, out.W);
    canonicalize_tuples(out.pd);
    return out;
}

TangleDiagram tangle_multiply(const TangleDiagram& f, const TangleDiagram& g) {
    TangleDiagram rf = flip_tangle(f);
    DiagramBuilder b;
    Ported pf = import_tangle(b, rf);
    Ported pg = import_tangle(b, g);
    b.splice(pf.N, pg.E);
    b.splice(pf.W, pg.S);
    return b.finish_tangle(pg.N, pf.E, pf.S, pg.W);
}

TangleDiagram tangle_add(const TangleDiagram& f, const TangleDiagram& g) {
    DiagramBuilder b;
    Ported pf = import_tangle(b, f);
    Ported pg = import_tangle(b, g);
    b.splice(pg.N, pf.E);
    b.splice(pg.W, pf.S);
    return b.finish_tangle(pf.N, pg.E, pg.S, pf.W);
}

TangleDiagram tangle_concat(const TangleDiagram& f, const TangleDiagram& g) {
    TangleDiagram rf = flip_tangle(f);
    TangleDiagram rg = flip_tangle(g);
    DiagramBuilder b;
    Ported pf = import_tangle(b, rf);
    Ported pg = import_tangle(b, rg);
    b.splice(pf.N, pg.E);
    b.splice(pf.W, pg.S);
    return b.finish_tangle(pg.N, pf.E, pf.S, pg.W);
}

PlanarDiagram closure(const TangleDiagram& t) {
    DiagramBuilder b;
    Ported p = import_tangle(b, t);
    b.splice(p.N, p.E);
    b.splice(p.S, p.W);
    return b.finish();
}

namespace {

// Occurrence darts per edge id: each id appears exactly twice.
std::map<int, std::vector<Dart>> edge_darts(const PlanarDiagram& d) {
    std::map<int, std::vector<Dart>> occ;
    for (int ci = 0; ci < d.crossing_count(); ++ci)
        for (int s = 0; s < 4; ++s) occ[d.crossings[ci][s]].push_back({ci, s});
    for (auto& [id, v] : occ)
        if (v.size() != 2)
            throw DiagramError("edge id " + std::to_string(id) + " occurs " +
                               std::to_string(v.size()) + " times");
    return occ;
}

Dart partner(const std::map<int, std::vector<Dart>>& occ, const PlanarDiagram& d, Dart x) {
    const auto& v = occ.at(d.crossings[x.first][x.second]);
    return v[0] == x ? v[1] : v[0];
}

}  // namespace

std::vector<std::vector<Dart>> faces(const PlanarDiagram& d) {
    if (d.crossings.empty()) throw DiagramError("faces: need at least one crossing");
    if (!is_connected(d)) throw DiagramError("faces: diagram not connected");
    auto occ = edge_darts(d);
    std::set<Dart> todo;
    for (int ci = 0; ci < d.crossing_count(); ++ci)
        for (int s = 0; s < 4; ++s) todo.insert({ci, s});
    std::vector<std::vector<Dart>> out;
    while (!todo.empty()) {
        Dart start = *todo.begin();
        std::vector<Dart> face;
        Dart cur = start;
        do {
            face.push_back(cur);
            todo.erase(cur);
            Dart p = partner(occ, d, cur);
            cur = {p.first, (p.second + 1) % 4};
        } while (cur != start);
        out.push_back(std::move(face));
    }
    return out;
}

bool is_connected(const PlanarDiagram& d) {
    if (d.crossings.empty()) return true;
    std::map<int, std::vector<int>> by_edge;
    for (int ci = 0; ci < d.crossing_count(); ++ci)
        for (int s = 0; s < 4; ++s) by_edge[d.crossings[ci][s]].push_back(ci);
    std::vector<int> stack{0};
    std::set<int> seen{0};
    while (!stack.empty()) {
        int ci = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s)
            for (int cj : by_edge[d.crossings[ci][s]])
                if (seen.insert(cj).second) stack.push_back(cj);
    }
    return static_cast<int>(seen.size()) == d.crossing_count();
}

int components(const PlanarDiagram& d) {
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& c : d.crossings) {
        unite(c[0], c[2]);
        unite(c[1], c[3]);
    }
    std::set<int> roots;
    for (auto& [x, _] : parent) roots.insert(find(x));
    return static_cast<int>(roots.size()) + d.loops;
}

}  // namespace tangles
