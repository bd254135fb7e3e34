#include "tangles/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace tangles {

namespace {

constexpr std::size_t kStateCap = 2'000'000;

// Exact division by delta = -A^2 - A^-2; the bracket state sum of a closed
// diagram always carries at least one loop factor.
LaurentPoly divide_by_delta(LaurentPoly p) {
    LaurentPoly q;
    while (!p.is_zero()) {
        auto top = *p.c.rbegin();             // highest exponent term c*A^e
        std::int64_t coeff = -top.second;     // quotient term -c*A^(e-2)
        q.add_term(top.first - 2, coeff);
        p.add_term(top.first, coeff);         // p -= quotient term * delta
        p.add_term(top.first - 4, coeff);
    }
    return q;
}

// Verify every edge id occurs exactly twice (closed diagram).
void check_closed(const PlanarDiagram& d) {
    std::map<int, int> occ;
    for (const auto& c : d.crossings)
        for (int s = 0; s < 4; ++s) ++occ[c[s]];
    for (auto [id, n] : occ)
        if (n != 2)
            throw DiagramError("bracket: edge id " + std::to_string(id) +
                               " occurs " + std::to_string(n) + " times");
}

// Greedy crossing order: repeatedly pick the crossing sharing the most edges
// with the current frontier, keeping the pairing-state frontier small.
std::vector<int> contraction_order(const PlanarDiagram& d) {
    int n = d.crossing_count();
    std::vector<int> order;
    std::vector<bool> done(n, false);
    std::map<int, int> pending;  // edge id -> one occurrence processed
    for (int step = 0; step < n; ++step) {
        int best = -1, best_matched = -1;
        for (int ci = 0; ci < n; ++ci) {
            if (done[ci]) continue;
            int matched = 0;
            for (int s = 0; s < 4; ++s)
                if (pending.count(d.crossings[ci][s])) ++matched;
            if (matched > best_matched) { best_matched = matched; best = ci; }
        }
        done[best] = true;
        order.push_back(best);
        for (int s = 0; s < 4; ++s) {
            int e = d.crossings[best][s];
            auto it = pending.find(e);
            if (it == pending.end()) pending[e] = 1;
            else pending.erase(it);
        }
    }
    return order;
}

using Pairing = std::map<int, int>;  // involution: open end -> open end

// Connect ends a and b in the pairing; a closed loop increments `loops`.
void connect(Pairing& p, int a, int b, int& loops) {
    auto chase = [&p](int v) {
        auto it = p.find(v);
        if (it == p.end()) return v;  // fresh: far end is the unseen occurrence
        int far = it->second;
        p.erase(far);
        p.erase(v);
        return far;
    };
    int x = chase(a);
    int y = chase(b);
    if (x == y) { ++loops; return; }
    p[x] = y;
    p[y] = x;
}

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
    if (d.crossing_count() > max_crossings)
        throw ResourceError("bracket: " + std::to_string(d.crossing_count()) +
                            " crossings exceed limit " + std::to_string(max_crossings));
    check_closed(d);
    if (d.crossings.empty()) {
        if (d.loops == 0) throw DiagramError("bracket: empty diagram");
        LaurentPoly out = LaurentPoly::one();
        for (int i = 1; i < d.loops; ++i) out = out * bracket_delta();
        return out;
    }

    LaurentPoly delta = bracket_delta();
    std::map<Pairing, LaurentPoly> states{{Pairing{}, LaurentPoly::one()}};
    for (int ci : contraction_order(d)) {
        const auto& c = d.crossings[ci];
        std::map<Pairing, LaurentPoly> next;
        for (const auto& [pairing, coeff] : states) {
            // A-smoothing joins (e0,e1) and (e2,e3); B joins (e1,e2), (e3,e0).
            for (int branch = 0; branch < 2; ++branch) {
                Pairing p = pairing;
                int loops = 0;
                if (branch == 0) {
                    connect(p, c[0], c[1], loops);
                    connect(p, c[2], c[3], loops);
                } else {
                    connect(p, c[1], c[2], loops);
                    connect(p, c[3], c[0], loops);
                }
                LaurentPoly w = coeff * LaurentPoly::monomial(1, branch == 0 ? 1 : -1);
                for (int i = 0; i < loops; ++i) w = w * delta;
                auto it = next.find(p);
                if (it == next.end()) next.emplace(std::move(p), std::move(w));
                else it->second = it->second + w;
            }
        }
        states = std::move(next);
        if (states.size() > kStateCap)
            throw ResourceError("bracket: state count exceeded");
    }

    LaurentPoly total;
    for (const auto& [pairing, coeff] : states) {
        if (!pairing.empty()) throw DiagramError("bracket: open ends remain");
        total = total + coeff;
    }
    for (int i = 0; i < d.loops; ++i) total = total * delta;
    // Normalize the crossing-free circle to 1.
    return divide_by_delta(std::move(total));
}

LaurentPoly kauffman_bracket_naive(const PlanarDiagram& d) {
    check_closed(d);
    if (d.crossings.empty()) {
        if (d.loops == 0) throw DiagramError("bracket: empty diagram");
        LaurentPoly out = LaurentPoly::one();
        for (int i = 1; i < d.loops; ++i) out = out * bracket_delta();
        return out;
    }
    int n = d.crossing_count();
    if (n > 20) throw ResourceError("naive bracket: too many crossings");
    LaurentPoly delta = bracket_delta();
    LaurentPoly total;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // Union-find over edge ids joined by the chosen smoothings; each
        // smoothing state is a disjoint union of circles and every edge id
        // has degree 2, so circles = components of the edge graph.
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int x) {
            if (!parent.count(x)) parent[x] = x;
            while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int ci = 0; ci < n; ++ci) {
            const auto& c = d.crossings[ci];
            if (mask & (1u << ci)) { unite(c[1], c[2]); unite(c[3], c[0]); }
            else { unite(c[0], c[1]); unite(c[2], c[3]); }
        }
        int circles = 0;
        for (auto& [x, _] : parent)
            if (find(x) == x) ++circles;
        int a_count = n - static_cast<int>(std::popcount(mask));
        LaurentPoly term = LaurentPoly::monomial(1, 2 * a_count - n);
        for (int i = 1; i < circles + d.loops; ++i) term = term * delta;
        total = total + term;
    }
    return total;
}

namespace {

// Canonical strand orientation data: for every crossing, the slot (0 or 2)
// where the under-strand enters and the slot (1 or 3) where the over-strand
// enters, plus the strand-component index of each.
struct Orientation {
    std::vector<int> under_entry, over_entry;  // per crossing
    std::vector<int> under_comp, over_comp;
    int n_components = 0;
};

Orientation orient(const PlanarDiagram& d) {
    int n = d.crossing_count();
    Orientation o;
    o.under_entry.assign(n, -1);
    o.over_entry.assign(n, -1);
    o.under_comp.assign(n, -1);
    o.over_comp.assign(n, -1);

    std::map<int, std::vector<Dart>> occ;
    for (int ci = 0; ci < n; ++ci)
        for (int s = 0; s < 4; ++s) occ[d.crossings[ci][s]].push_back({ci, s});
    for (auto& [id, v] : occ)
        if (v.size() != 2) throw DiagramError("writhe: edge id occurs != 2 times");

    std::vector<std::vector<bool>> visited(n, std::vector<bool>(4, false));
    for (int ci = 0; ci < n; ++ci) {
        for (int s0 = 0; s0 < 4; ++s0) {
            if (visited[ci][s0]) continue;
            int comp = o.n_components++;
            // Declare (ci, s0) an entry dart and walk the strand cycle.
            Dart cur{ci, s0};
            do {
                auto [c, s] = cur;
                visited[c][s] = true;
                if (s == 0 || s == 2) { o.under_entry[c] = s; o.under_comp[c] = comp; }
                else { o.over_entry[c] = s; o.over_comp[c] = comp; }
                int exit_slot = (s + 2) % 4;
                visited[c][exit_slot] = true;
                const auto& v = occ.at(d.crossings[c][exit_slot]);
                Dart exit{c, exit_slot};
                cur = (v[0] == exit) ? v[1] : v[0];
            } while (cur != Dart{ci, s0});
        }
    }
    return o;
}

}  // namespace

int strand_components(const PlanarDiagram& d) {
    if (d.crossings.empty()) return 0;
    return orient(d).n_components;
}

int writhe(const PlanarDiagram& d, const std::vector<bool>& flips) {
    if (d.crossings.empty()) return 0;
    Orientation o = orient(d);
    auto flipped = [&](int comp) {
        return comp < static_cast<int>(flips.size()) && flips[comp];
    };
    int w = 0;
    for (int c = 0; c < d.crossing_count(); ++c) {
        int u = o.under_entry[c];
        int v = o.over_entry[c];
        if (flipped(o.under_comp[c])) u = (u + 2) % 4;
        if (flipped(o.over_comp[c])) v = (v + 2) % 4;
        // Sign +1 when the under-strand runs e0->e2 while the over-strand
        // runs e3->e1 (or both reversed).
        bool positive = (u == 0 && v == 3) || (u == 2 && v == 1);
        w += positive ? 1 : -1;
    }
    return w;
}

std::set<LaurentPoly> jones_set(const PlanarDiagram& d, int max_crossings) {
    LaurentPoly br = kauffman_bracket(d, max_crossings);
    int k = d.crossings.empty() ? 0 : strand_components(d);
    std::set<LaurentPoly> out;
    unsigned classes = k >= 2 ? (1u << (k - 1)) : 1u;
    for (unsigned mask = 0; mask < classes; ++mask) {
        std::vector<bool> flips(k, false);
        for (int i = 1; i < k; ++i) flips[i] = (mask >> (i - 1)) & 1u;
        int w = writhe(d, flips);
        // (-A)^(-3w) = (-1)^w * A^(-3w).
        LaurentPoly factor = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w);
        out.insert(factor * br);
    }
    return out;
}

namespace {

// |det| of an integer matrix by fraction-free Bareiss elimination.
long long abs_det(std::vector<std::vector<long long>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    using i128 = __int128;
    std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    i128 det = a[n - 1][n - 1];
    if (det < 0) det = -det;
    (void)sign;
    return static_cast<long long>(det);
}

}  // namespace

long long goeritz_determinant(const PlanarDiagram& d) {
    if (d.crossings.empty()) return d.loops == 1 ? 1 : 0;
    if (d.loops > 0) return 0;           // split link
    if (!is_connected(d)) return 0;      // split link

    auto fs = faces(d);
    int nf = static_cast<int>(fs.size());
    std::vector<std::vector<int>> face_of(d.crossing_count(), std::vector<int>(4, -1));
    for (int fi = 0; fi < nf; ++fi)
        for (auto [c, s] : fs[fi]) face_of[c][s] = fi;

    // Exterior: largest face, earliest in discovery order on ties.
    int exterior = 0;
    for (int fi = 1; fi < nf; ++fi)
        if (fs[fi].size() > fs[exterior].size()) exterior = fi;

    // Checkerboard coloring: faces across an edge take opposite colors; the
    // two darts of an edge lie in the two faces bordering it.
    std::map<int, std::vector<int>> edge_faces;
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int s = 0; s < 4; ++s) edge_faces[d.crossings[c][s]].push_back(face_of[c][s]);
    std::vector<int> color(nf, -1);
    color[exterior] = 0;  // exterior unshaded
    std::vector<int> stack{exterior};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (auto& [id, pair] : edge_faces) {
            if (pair[0] != f && pair[1] != f) continue;
            int g = pair[0] == f ? pair[1] : pair[0];
            if (color[g] < 0) { color[g] = 1 - color[f]; stack.push_back(g); }
            else if (color[g] == color[f])
                throw DiagramError("goeritz: diagram not checkerboard colorable");
        }
    }

    // White (unshaded) region indexing, exterior first.
    std::map<int, int> white_index;
    white_index[exterior] = 0;
    for (int fi = 0; fi < nf; ++fi)
        if (color[fi] == 0 && fi != exterior)
            white_index[fi] = static_cast<int>(white_index.size());
    int m = static_cast<int>(white_index.size());

    std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
    for (int c = 0; c < d.crossing_count(); ++c) {
        // Corner k (between slots k and k+1) lies in the face of dart k+1.
        std::vector<int> corner_face(4);
        for (int k = 0; k < 4; ++k) corner_face[k] = face_of[c][(k + 1) % 4];
        bool w02 = color[corner_face[0]] == 0 && color[corner_face[2]] == 0;
        bool w13 = color[corner_face[1]] == 0 && color[corner_face[3]] == 0;
        if (w02 == w13)
            throw DiagramError("goeritz: corner shading not alternating");
        int eta = w02 ? 1 : -1;
        int u = white_index.at(corner_face[w02 ? 0 : 1]);
        int v = white_index.at(corner_face[w02 ? 2 : 3]);
        if (u == v) continue;  // nugatory: no contribution
        g[u][v] -= eta;
        g[v][u] -= eta;
        g[u][u] += eta;
        g[v][v] += eta;
    }

    // Delete the exterior row and column (index 0).
    std::vector<std::vector<long long>> gm(m - 1, std::vector<long long>(m - 1));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) gm[i - 1][j - 1] = g[i][j];
    return abs_det(std::move(gm));
}

long long determinant_via_jones(const LaurentPoly& jones) {
    // Evaluate at A = exp(i*pi/4): A^2 = i, so t = A^-4 = -1.  All Jones
    // exponents here are even, keeping the value in the Gaussian integers.
    long long re = 0, im = 0;
    for (auto [e, k] : jones.c) {
        if (e % 2 != 0) throw DiagramError("jones value has odd exponent");
        int q = ((e / 2) % 4 + 4) % 4;
        switch (q) {
            case 0: re += k; break;
            case 1: im += k; break;
            case 2: re -= k; break;
            case 3: im -= k; break;
        }
    }
    if (re != 0 && im != 0)
        throw DiagramError("jones at t=-1 is not real or purely imaginary");
    long long v = re != 0 ? re : im;
    return v < 0 ? -v : v;
}

}  // namespace tangles
