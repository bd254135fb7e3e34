#pragma once

/**
 * @file conway.hpp
 * @brief Conway-notation AST, parser/printer, continued-fraction invariant,
 *        and recursive diagram construction.
 *
 * Grammar (whitespace between atoms is the product operator):
 *   expr   := concat
 *   concat := sum ("," sum)*
 *   sum    := prod ("+" prod)*
 *   prod   := atom (WS atom)*
 *   atom   := INT | "(" expr ")"
 *   top    := "[" expr "]" | expr
 * Products associate to the left and the shape is semantic (tangle
 * multiplication is not associative).  "[ ]" marks closure, only outermost.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tangles/planar.hpp"

namespace tangles {

struct ConwayExpr;
using ConwayPtr = std::shared_ptr<const ConwayExpr>;

struct ConwayExpr {
    enum class Kind { Int, Product, Sum, Concat, Closure };
    Kind kind = Kind::Int;
    int value = 0;             // Int only
    ConwayPtr left, right;     // binary nodes; Closure uses left only

    static ConwayPtr integer(int n);
    static ConwayPtr product(ConwayPtr l, ConwayPtr r);
    static ConwayPtr sum(ConwayPtr l, ConwayPtr r);
    static ConwayPtr concat(ConwayPtr l, ConwayPtr r);
    static ConwayPtr closure_of(ConwayPtr inner);
};

bool conway_equal(const ConwayPtr& a, const ConwayPtr& b);

struct ConwayParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ConwayShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ConwayPtr parse_conway(const std::string& input);

// Canonical text; parse_conway(print_conway(e)) reproduces e.  Products that
// are right-nested get explicit parentheses ("3 (4 2)").
std::string print_conway(const ConwayPtr& e);

// Reduced fraction; denominator > 0.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Continued fraction of a pure left-associated product of positive integers:
// cf(x1) = x1, cf(x1..xk) = xk + 1/cf(x1..x(k-1)).
Fraction rational_fraction(const ConwayPtr& e);

// Recursive diagram build.  `closed` is set iff the root is a closure.
struct BuiltDiagram {
    bool closed = false;
    TangleDiagram tangle;  // valid when !closed
    PlanarDiagram pd;      // valid when closed
};

BuiltDiagram build_conway(const ConwayPtr& e);

}  // namespace tangles
