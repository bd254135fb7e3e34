#include "tangles/constructions.hpp"

#include "tangles/jones_map.hpp"
#include "tangles/reverse.hpp"

namespace tangles {

ChairDiagram build_product(const std::vector<int>& xs) {
    if (xs.empty()) throw ConstructionError("product needs at least one entry");
    for (int x : xs)
        if (x < 1) throw ConstructionError("product entries must be >= 1");
    return ChairDiagram{ChairDiagram::Kind::Product, xs};
}

ChairDiagram build_concat(const std::vector<int>& xs) {
    if (xs.empty()) throw ConstructionError("concat needs at least one entry");
    for (int x : xs)
        if (x < 2) throw ConstructionError("concat entries must be >= 2");
    return ChairDiagram{ChairDiagram::Kind::Concat, xs};
}

std::vector<int> blocks(const ChairDiagram& c) {
    std::vector<int> out;
    if (c.kind == ChairDiagram::Kind::Product) {
        for (std::size_t i = 0; i < c.spec.size(); ++i)
            out.push_back(i + 1 < c.spec.size() ? c.spec[i] - 1 : c.spec[i]);
    } else {
        for (int x : c.spec) out.push_back(x - 1);
    }
    return out;
}

namespace {

// Codes use the preorder convention: "1" internal node, "0" leaf.
std::string repeat(const std::string& s, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) out += s;
    return out;
}

// --- product family T ----------------------------------------------------

// One block of x chairs hanging off the rails.
std::string top_block(int x) { return "10" + repeat("110100", x) + "0"; }
std::string bottom_block(int x) { return repeat("1", 3 * x) + "100" + repeat("0", 3 * x); }

struct CodePair { std::string top, bottom; };

// T(x_1,...,x_k) by peeling the last entry: glue the new block's rails onto
// the previous diagram at the shared corner leaves.
CodePair expand_product(const std::vector<int>& xs) {
    if (xs.size() == 1) {
        int x = xs[0];
        if (x == 0) return {"100", "100"};
        return {top_block(x), bottom_block(x)};
    }
    std::vector<int> prefix(xs.begin(), xs.end() - 1);
    prefix.back() -= 1;
    CodePair old = expand_product(prefix);
    std::string t_new = top_block(xs.back());
    std::string b_new = bottom_block(xs.back());
    CodePair out;
    // New top with its rightmost leaf carrying the old bottom tree; old top
    // with its leftmost leaf carrying the new bottom tree.
    out.top = t_new.substr(0, t_new.size() - 1) + old.bottom;
    std::size_t first_leaf = old.top.find('0');
    out.bottom = old.top.substr(0, first_leaf) + b_new + old.top.substr(first_leaf + 1);
    return out;
}

}  // namespace

ThompsonElement expand(const ChairDiagram& c) {
    if (c.kind == ChairDiagram::Kind::Product) {
        CodePair p = expand_product(c.spec);
        return make_element_raw(tree_from_code(p.top), tree_from_code(p.bottom));
    }
    // Concatenation family: build the knot-diagram side of the story tower
    // and pull it back through the reconstruction pipeline.  The resulting
    // element realizes the same link as the story picture, which is all the
    // commuting-diagram property asks of the expansion.
    return reverse_diagram(psi_prime(c));
}

}  // namespace tangles
