#include "tangles/conway.hpp"

#include <cctype>
#include <numeric>

namespace tangles {

ConwayPtr ConwayExpr::integer(int n) {
    auto e = std::make_shared<ConwayExpr>();
    e->kind = Kind::Int;
    e->value = n;
    return e;
}

namespace {

ConwayPtr binary(ConwayExpr::Kind k, ConwayPtr l, ConwayPtr r) {
    auto e = std::make_shared<ConwayExpr>();
    e->kind = k;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

}  // namespace

ConwayPtr ConwayExpr::product(ConwayPtr l, ConwayPtr r) {
    return binary(Kind::Product, std::move(l), std::move(r));
}
ConwayPtr ConwayExpr::sum(ConwayPtr l, ConwayPtr r) {
    return binary(Kind::Sum, std::move(l), std::move(r));
}
ConwayPtr ConwayExpr::concat(ConwayPtr l, ConwayPtr r) {
    return binary(Kind::Concat, std::move(l), std::move(r));
}
ConwayPtr ConwayExpr::closure_of(ConwayPtr inner) {
    return binary(Kind::Closure, std::move(inner), nullptr);
}

bool conway_equal(const ConwayPtr& a, const ConwayPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    if (a->kind == ConwayExpr::Kind::Int) return a->value == b->value;
    return conway_equal(a->left, b->left) && conway_equal(a->right, b->right);
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& in) : s(in) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConwayParseError(what + " at position " + std::to_string(pos));
    }

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }
    bool at_end() const { return pos >= s.size(); }
    void skip_ws() {
        while (pos < s.size() && s[pos] == ' ') ++pos;
    }
    bool ws_then_atom() const {
        // Lookahead: a run of spaces followed by the start of an atom means
        // the whitespace is the product operator.
        std::size_t p = pos;
        if (p >= s.size() || s[p] != ' ') return false;
        while (p < s.size() && s[p] == ' ') ++p;
        if (p >= s.size()) return false;
        char c = s[p];
        return c == '(' || c == '-' || (std::isdigit(static_cast<unsigned char>(c)) != 0);
    }

    ConwayPtr parse_atom() {
        if (peek() == '(') {
            ++pos;
            ConwayPtr inner = parse_expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected integer or '('");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        return ConwayExpr::integer(std::stoi(s.substr(start, pos - start)));
    }

    ConwayPtr parse_prod() {
        ConwayPtr e = parse_atom();
        while (ws_then_atom()) {
            skip_ws();
            e = ConwayExpr::product(e, parse_atom());
        }
        return e;
    }

    ConwayPtr parse_sum() {
        skip_ws();
        ConwayPtr e = parse_prod();
        skip_ws();
        while (peek() == '+') {
            ++pos;
            skip_ws();
            e = ConwayExpr::sum(e, parse_prod());
            skip_ws();
        }
        return e;
    }

    ConwayPtr parse_expr() {
        ConwayPtr e = parse_sum();
        while (peek() == ',') {
            ++pos;
            e = ConwayExpr::concat(e, parse_sum());
        }
        return e;
    }

    ConwayPtr parse_top() {
        skip_ws();
        if (peek() == '[') {
            ++pos;
            ConwayPtr inner = parse_expr();
            skip_ws();
            if (peek() != ']') fail("expected ']'");
            ++pos;
            skip_ws();
            if (!at_end()) fail("trailing input after ']'");
            return ConwayExpr::closure_of(inner);
        }
        ConwayPtr e = parse_expr();
        skip_ws();
        if (!at_end()) fail("unexpected character");
        return e;
    }
};

enum class Prec { Concat = 0, Sum = 1, Prod = 2, Atom = 3 };

Prec prec_of(const ConwayExpr& e) {
    switch (e.kind) {
        case ConwayExpr::Kind::Int: return Prec::Atom;
        case ConwayExpr::Kind::Product: return Prec::Prod;
        case ConwayExpr::Kind::Sum: return Prec::Sum;
        default: return Prec::Concat;
    }
}

void print_rec(const ConwayPtr& e, Prec context, bool right_operand, std::string& out) {
    Prec mine = prec_of(*e);
    // Parenthesize when binding looser than the context demands, or when a
    // left-associative operator has a same-precedence right operand.
    bool need_parens =
        static_cast<int>(mine) < static_cast<int>(context) ||
        (right_operand && mine == context && e->kind != ConwayExpr::Kind::Int);
    if (need_parens) out += '(';
    switch (e->kind) {
        case ConwayExpr::Kind::Int:
            out += std::to_string(e->value);
            break;
        case ConwayExpr::Kind::Product:
            print_rec(e->left, Prec::Prod, false, out);
            out += ' ';
            print_rec(e->right, Prec::Prod, true, out);
            break;
        case ConwayExpr::Kind::Sum:
            print_rec(e->left, Prec::Sum, false, out);
            out += '+';
            print_rec(e->right, Prec::Sum, true, out);
            break;
        case ConwayExpr::Kind::Concat:
            print_rec(e->left, Prec::Concat, false, out);
            out += ',';
            print_rec(e->right, Prec::Concat, true, out);
            break;
        case ConwayExpr::Kind::Closure:
            throw ConwayShapeError("closure may only appear at the root");
    }
    if (need_parens) out += ')';
}

}  // namespace

ConwayPtr parse_conway(const std::string& input) {
    Parser p(input);
    return p.parse_top();
}

std::string print_conway(const ConwayPtr& e) {
    std::string out;
    if (e->kind == ConwayExpr::Kind::Closure) {
        out += '[';
        print_rec(e->left, Prec::Concat, false, out);
        out += ']';
        return out;
    }
    print_rec(e, Prec::Concat, false, out);
    return out;
}

namespace {

// Collect the factors of a left-associated product chain, leftmost first.
void product_factors(const ConwayPtr& e, std::vector<int>& out) {
    if (e->kind == ConwayExpr::Kind::Int) {
        if (e->value <= 0)
            throw ConwayShapeError("rational_fraction needs positive integer factors");
        out.push_back(e->value);
        return;
    }
    if (e->kind != ConwayExpr::Kind::Product)
        throw ConwayShapeError("rational_fraction needs a pure product expression");
    product_factors(e->left, out);
    if (e->right->kind != ConwayExpr::Kind::Int || e->right->value <= 0)
        throw ConwayShapeError("rational_fraction needs a left-associated product");
    out.push_back(e->right->value);
}

}  // namespace

Fraction rational_fraction(const ConwayPtr& e) {
    std::vector<int> xs;
    product_factors(e, xs);
    // cf(x1..xk) = xk + 1/cf(x1..x(k-1)), accumulated left to right.
    std::int64_t num = xs[0], den = 1;
    for (std::size_t k = 1; k < xs.size(); ++k) {
        std::int64_t n2 = xs[k] * num + den;
        den = num;
        num = n2;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return Fraction{num / g, den / g};
}

namespace {

TangleDiagram build_tangle(const ConwayPtr& e) {
    switch (e->kind) {
        case ConwayExpr::Kind::Int:
            return tangle_from_integer(e->value);
        case ConwayExpr::Kind::Product:
            return tangle_multiply(build_tangle(e->left), build_tangle(e->right));
        case ConwayExpr::Kind::Sum:
            return tangle_add(build_tangle(e->left), build_tangle(e->right));
        case ConwayExpr::Kind::Concat:
            return tangle_concat(build_tangle(e->left), build_tangle(e->right));
        case ConwayExpr::Kind::Closure:
            throw ConwayShapeError("closure may only appear at the root");
    }
    throw ConwayShapeError("unreachable");
}

}  // namespace

BuiltDiagram build_conway(const ConwayPtr& e) {
    BuiltDiagram out;
    if (e->kind == ConwayExpr::Kind::Closure) {
        out.closed = true;
        out.pd = closure(build_tangle(e->left));
    } else {
        out.tangle = build_tangle(e);
    }
    return out;
}

}  // namespace tangles
