#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "tangles/constructions.hpp"
#include "tangles/invariants.hpp"
#include "tangles/jones_map.hpp"

using namespace tangles;

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(build_product({}), ConstructionError);
    CHECK_THROWS_AS(build_product({2, 0}), ConstructionError);
    CHECK_THROWS_AS(build_concat({2, 1}), ConstructionError);
    CHECK_NOTHROW(build_product({1}));
    CHECK_NOTHROW(build_concat({2}));
}

TEST_CASE("block counts") {
    CHECK(blocks(build_product({3, 4, 2, 5})) == std::vector<int>{2, 3, 1, 5});
    CHECK(blocks(build_product({3})) == std::vector<int>{3});
    CHECK(blocks(build_product({2, 2})) == std::vector<int>{1, 2});
    // Concat stories: x_i - 2 chairs plus one pillar each.
    CHECK(blocks(build_concat({2, 3, 7})) == std::vector<int>{1, 2, 6});
}

TEST_CASE("product expansion leaf counts") {
    // One block of x chairs expands to 3x + 2 leaves.
    for (int x : {1, 2, 3, 5}) {
        ThompsonElement e = expand(build_product({x}));
        CHECK(e.leaves() == 3 * x + 2);
        CHECK(e.top.leaf_count() == e.bottom.leaf_count());
    }
    // T(x_1,...,x_k) expands to 3 * sum(x_i) leaves for k >= 2.
    CHECK(expand(build_product({2, 2})).leaves() == 12);
    CHECK(expand(build_product({3, 2})).leaves() == 15);
}

TEST_CASE("expansion commutes with the closure maps (small cases)") {
    for (const ChairDiagram& c : {build_product({2}), build_product({3}),
                                  build_product({2, 2}), build_concat({2, 2})}) {
        int sum = std::accumulate(c.spec.begin(), c.spec.end(), 0);
        PlanarDiagram via_tangles = psi_prime(c);
        CHECK(via_tangles.crossing_count() == sum);
        CHECK(jones_set(psi(expand(c)), 100) == jones_set(via_tangles, 100));
    }
}
