#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>

#include "tangles/conway.hpp"
#include "tangles/invariants.hpp"
#include "tangles/jones_map.hpp"

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

TEST_CASE("psi crossing counts") {
    ThompsonElement id = make_element(BinaryTree{}, BinaryTree{});
    CHECK(psi(id).crossing_count() == 2);  // doubled-back unknot
    CHECK(jones_set(psi(id)) == std::set<LaurentPoly>{LaurentPoly::one()});

    std::mt19937 rng(5);
    for (int n : {2, 3, 4, 6, 8}) {
        ThompsonElement e = make_element_raw(random_tree(n, rng), random_tree(n, rng));
        PlanarDiagram d = psi(e);
        CHECK(d.crossing_count() == 2 * (n - 1));
        CHECK(is_connected(d));
    }
}

TEST_CASE("psi of x0 closes to an unknot") {
    ThompsonElement x0 = make_element(tree_from_code("11000"), tree_from_code("10100"));
    CHECK(jones_set(psi(x0)) == std::set<LaurentPoly>{LaurentPoly::one()});
}

TEST_CASE("mirror flag mirrors the bracket") {
    std::mt19937 rng(9);
    for (int i = 0; i < 5; ++i) {
        int n = 3 + static_cast<int>(rng() % 4);
        ThompsonElement e = make_element_raw(random_tree(n, rng), random_tree(n, rng));
        CHECK(kauffman_bracket(psi(e, true)) == kauffman_bracket(psi(e)).mirror());
    }
}

TEST_CASE("psi_prime closes the Conway tangle") {
    // Product chairs reproduce the rational-tangle closures.
    CHECK(jones_set(psi_prime(build_product({2}))) ==
          jones_set(build_conway(parse_conway("[2]")).pd));
    CHECK(jones_set(psi_prime(build_product({3}))) ==
          jones_set(build_conway(parse_conway("[3]")).pd));
    CHECK(jones_set(psi_prime(build_concat({2, 2}))) ==
          jones_set(closure(build_conway(parse_conway("2,2")).tangle)));
    CHECK(psi_prime(build_product({3, 4, 2, 5})).crossing_count() == 14);
}

TEST_CASE("psi_image tracks gaps and the exterior edge") {
    std::mt19937 rng(2);
    for (int n : {2, 4, 5}) {
        ThompsonElement e = make_element_raw(random_tree(n, rng), random_tree(n, rng));
        PsiImage img = psi_image(e);
        CHECK(static_cast<int>(img.gaps.size()) == n - 1);
        std::set<int> ids(img.gaps.begin(), img.gaps.end());
        ids.insert(img.exterior);
        CHECK(static_cast<int>(ids.size()) == n);  // all distinct
        for (int id : ids) {
            CHECK(id >= 1);
            CHECK(id <= img.pd.edge_count());
        }
    }
}
