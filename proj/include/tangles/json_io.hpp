#pragma once

/**
 * @file json_io.hpp
 * @brief JSON (de)serialization for every domain type, Gauss-code text for
 *        closed diagrams, and SVG rendering of tree pairs and chair diagrams.
 *
 * All emitters are deterministic: object keys are sorted, arrays follow the
 * natural order of the underlying data, and no timestamps appear anywhere.
 */

#include <string>

#include "json.hpp"
#include "tangles/constructions.hpp"
#include "tangles/conway.hpp"
#include "tangles/laurent.hpp"
#include "tangles/planar.hpp"
#include "tangles/reverse.hpp"
#include "tangles/thompson.hpp"

namespace tangles {

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// PD: {"crossings": [[a,b,c,d],...], "loops": k}; tangles add
// {"boundary": {"N": e1, "E": e2, "S": e3, "W": e4}}.
nlohmann::json pd_to_json(const PlanarDiagram& d);
PlanarDiagram pd_from_json(const nlohmann::json& j);
nlohmann::json tangle_to_json(const TangleDiagram& t);
TangleDiagram tangle_from_json(const nlohmann::json& j);

// {"A": {"<exp>": coeff, ...}}.
nlohmann::json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);

// {"kind": "product"|"concat", "spec": [x1,...,xk]}.
nlohmann::json chair_to_json(const ChairDiagram& c);
ChairDiagram chair_from_json(const nlohmann::json& j);

// {"top": "<bitstring>", "bottom": "<bitstring>"}.
nlohmann::json element_to_json(const ThompsonElement& e);
ThompsonElement element_from_json(const nlohmann::json& j);

// {"vertices": m+1, "arcs": [[i, j, "+"|"-", "above"|"below"], ...]}.
nlohmann::json midline_to_json(const SignedMidlineGraph& g);
SignedMidlineGraph midline_from_json(const nlohmann::json& j);

// {"vertices": n, "edges": [[u, v, "+"|"-"], ...], "rotation": [[...], ...]}.
nlohmann::json signed_graph_to_json(const SignedPlanarGraph& g);
SignedPlanarGraph signed_graph_from_json(const nlohmann::json& j);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

// Extended Gauss code of a closed diagram: one line per strand component,
// comma-separated passages "O<label><sign>" / "U<label><sign>".  Crossings
// are labeled 1..n in order of first visit; signs use the same orientation
// convention as writhe with no component flipped.
std::string gauss_code(const PlanarDiagram& d);

// Tree pair on the 45-degree grid: top tree above the shared leaf line,
// bottom tree reflected below.
std::string render_tree_pair_svg(const ThompsonElement& e);

// Chair diagram: one row (product) or stack (concat) of glyph blocks, each
// glyph a chair profile drawn with 45-degree segments.
std::string render_chairs_svg(const ChairDiagram& c);

}  // namespace tangles
