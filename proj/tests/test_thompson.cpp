#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "tangles/thompson.hpp"

using namespace tangles;

namespace {

std::string random_code(int leaves, std::mt19937& rng) {
    if (leaves == 1) return "0";
    std::uniform_int_distribution<int> split(1, leaves - 1);
    int l = split(rng);
    return "1" + random_code(l, rng) + random_code(leaves - l, rng);
}

}  // namespace

TEST_CASE("tree codes round-trip") {
    CHECK(tree_to_code(BinaryTree{}) == "0");
    CHECK(tree_to_code(tree_from_code("10100")) == "10100");
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        std::string code = random_code(1 + i % 9, rng);
        BinaryTree t = tree_from_code(code);
        CHECK(tree_to_code(t) == code);
        CHECK(t.leaf_count() == static_cast<int>(code.size() + 1) / 2);
    }
}

TEST_CASE("malformed codes are rejected") {
    CHECK_THROWS_AS(tree_from_code(""), ParseError);
    CHECK_THROWS_AS(tree_from_code("10"), ParseError);     // truncated
    CHECK_THROWS_AS(tree_from_code("100 "), ParseError);   // stray character
    CHECK_THROWS_AS(tree_from_code("1000"), ParseError);   // trailing garbage
    CHECK_THROWS_AS(tree_from_code("abc"), ParseError);
}

TEST_CASE("make_element validates and reduces") {
    BinaryTree three = tree_from_code("10100");
    CHECK_THROWS_AS(make_element(three, BinaryTree{}), ValidationError);
    // Equal trees reduce to the identity.
    ThompsonElement id = make_element(three, three);
    CHECK(tree_to_code(id.top) == "0");
    CHECK(tree_to_code(id.bottom) == "0");
    // make_element_raw keeps the unreduced pair.
    ThompsonElement raw = make_element_raw(three, three);
    CHECK(raw.leaves() == 3);
    CHECK(reduce(raw) == id);
}

TEST_CASE("partitions of the first generator") {
    // Left comb over right comb: [0,1/2]->[0,1/4], [1/2,3/4]->[1/4,1/2],
    // [3/4,1]->[1/2,1].
    ThompsonElement x0 = make_element(tree_from_code("11000"), tree_from_code("10100"));
    auto [domain, range] = element_to_partitions(x0);
    REQUIRE(domain.size() == 4);
    REQUIRE(range.size() == 4);
    CHECK(domain[1] == Dyadic(1, 1));
    CHECK(domain[2] == Dyadic(3, 2));
    CHECK(range[1] == Dyadic(1, 2));
    CHECK(range[2] == Dyadic(1, 1));
    CHECK(domain[0] == Dyadic(0, 0));
    CHECK(domain[3] == Dyadic(1, 0));
}

TEST_CASE("group laws on random elements") {
    std::mt19937 rng(11);
    auto random_element = [&] {
        int n = 2 + static_cast<int>(rng() % 5);
        return make_element(tree_from_code(random_code(n, rng)),
                            tree_from_code(random_code(n, rng)));
    };
    ThompsonElement id = make_element(BinaryTree{}, BinaryTree{});
    for (int i = 0; i < 50; ++i) {
        ThompsonElement a = random_element(), b = random_element(), c = random_element();
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
        CHECK(compose(a, inverse(a)) == id);
        CHECK(compose(id, a) == a);
        CHECK(compose(a, id) == a);
        CHECK(reduce(a) == a);  // make_element output is already reduced
    }
}
