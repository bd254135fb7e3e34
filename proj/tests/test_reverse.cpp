#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>

#include "tangles/constructions.hpp"
#include "tangles/conway.hpp"
#include "tangles/invariants.hpp"
#include "tangles/jones_map.hpp"
#include "tangles/reverse.hpp"

using namespace tangles;

namespace {

BinaryTree random_tree(int leaves, std::mt19937& rng) {
    std::string code;
    std::function<void(int)> rec = [&](int n) {
        if (n == 1) { code += "0"; return; }
        code += "1";
        int l = 1 + static_cast<int>(rng() % (n - 1));
        rec(l);
        rec(n - l);
    };
    rec(leaves);
    return tree_from_code(code);
}

}  // namespace

TEST_CASE("extract_signed_graph has one edge per crossing") {
    for (const char* expr : {"[3]", "[2 2]", "[2 1 2]"}) {
        PlanarDiagram d = build_conway(parse_conway(expr)).pd;
        SignedPlanarGraph g = extract_signed_graph(d);
        CHECK(static_cast<int>(g.edges.size()) == d.crossing_count());
        CHECK(g.vertices >= 2);
        CHECK(static_cast<int>(g.rotation.size()) == g.vertices);
        // An alternating rational diagram extracts with uniform sign.
        for (const auto& e : g.edges) CHECK(e.sign == g.edges[0].sign);
    }
}

TEST_CASE("element_to_graph is always in thompson form") {
    std::mt19937 rng(4);
    for (int i = 0; i < 30; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        ThompsonElement e = make_element(random_tree(n, rng), random_tree(n, rng));
        if (e.leaves() < 2) continue;  // pair reduced to the identity
        SignedMidlineGraph g = element_to_graph(e);
        CHECK(thompson_form(g));
        CHECK(g.vertices == e.leaves());
        CHECK(static_cast<int>(g.arcs.size()) == 2 * (e.leaves() - 1));
    }
}

TEST_CASE("graph/element round trip") {
    std::mt19937 rng(8);
    for (int i = 0; i < 30; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        ThompsonElement e = make_element(random_tree(n, rng), random_tree(n, rng));
        CHECK(graph_to_element(element_to_graph(e)) == e);
    }
}

TEST_CASE("thompson_form predicate") {
    // v0 --+-- v1 above, v0 ---- v1 below: the one-caret pair.
    SignedMidlineGraph good;
    good.vertices = 2;
    good.arcs = {{0, 1, +1, true}, {0, 1, -1, false}};
    CHECK(thompson_form(good));

    SignedMidlineGraph wrong_side = good;
    wrong_side.arcs[0].above = false;  // positive arc below
    CHECK_FALSE(thompson_form(wrong_side));

    SignedMidlineGraph missing;
    missing.vertices = 2;
    missing.arcs = {{0, 1, +1, true}};  // v1 lacks a negative arc
    CHECK_FALSE(thompson_form(missing));
}

TEST_CASE("RI deletions") {
    SignedMidlineGraph g;
    g.vertices = 3;
    g.arcs = {{1, 1, +1, true}, {0, 1, +1, true}, {0, 1, -1, false}, {1, 2, -1, false}};
    SignedMidlineGraph no_loops = delete_self_loops(g);
    CHECK(no_loops.arcs.size() == 3);
    // Vertex 2 has degree one; deleting it drops its arc and the vertex.
    SignedMidlineGraph smaller = delete_degree_one(no_loops, 2);
    CHECK(smaller.vertices == 2);
    CHECK(smaller.arcs.size() == 2);
    CHECK(thompson_form(smaller));
}

TEST_CASE("full pipeline preserves the link") {
    for (const char* expr : {"[3]", "[2 2]", "[2 1 2]"}) {
        PlanarDiagram d = build_conway(parse_conway(expr)).pd;
        ThompsonElement e = reverse_diagram(d);
        CHECK(thompson_form(element_to_graph(e)));
        CHECK(jones_set(psi(e), 100) == jones_set(d, 100));
    }
}

TEST_CASE("pipeline round trip through psi") {
    std::mt19937 rng(6);
    for (int i = 0; i < 5; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        ThompsonElement e = make_element(random_tree(n, rng), random_tree(n, rng));
        PlanarDiagram d = psi(e);
        ThompsonElement back = reverse_diagram(d);
        CHECK(jones_set(psi(back), 100) == jones_set(d, 100));
    }
}
