#include "tangles/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <vector>

namespace tangles {

namespace {

using nlohmann::json;

void require(bool ok, const char* msg) {
    if (!ok) throw JsonError(msg);
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

int sign_from(const json& j) {
    require(j.is_string(), "sign must be the string \"+\" or \"-\"");
    std::string s = j.get<std::string>();
    if (s == "+") return +1;
    if (s == "-") return -1;
    throw JsonError("sign must be the string \"+\" or \"-\"");
}

}  // namespace

json pd_to_json(const PlanarDiagram& d) {
    json crossings = json::array();
    for (const auto& c : d.crossings) crossings.push_back({c[0], c[1], c[2], c[3]});
    return json{{"crossings", crossings}, {"loops", d.loops}};
}

PlanarDiagram pd_from_json(const json& j) {
    require(j.is_object() && j.contains("crossings"), "PD JSON needs a \"crossings\" array");
    require(j["crossings"].is_array(), "\"crossings\" must be an array");
    PlanarDiagram d;
    for (const auto& t : j["crossings"]) {
        require(t.is_array() && t.size() == 4, "each crossing must be a 4-tuple");
        std::array<int, 4> c{};
        for (int s = 0; s < 4; ++s) {
            require(t[s].is_number_integer() && t[s].get<int>() > 0,
                    "edge ids must be positive integers");
            c[s] = t[s].get<int>();
        }
        d.crossings.push_back(c);
    }
    if (j.contains("loops")) {
        require(j["loops"].is_number_integer() && j["loops"].get<int>() >= 0,
                "\"loops\" must be a nonnegative integer");
        d.loops = j["loops"].get<int>();
    }
    return d;
}

json tangle_to_json(const TangleDiagram& t) {
    json j = pd_to_json(t.pd);
    j["boundary"] = json{{"N", t.N}, {"E", t.E}, {"S", t.S}, {"W", t.W}};
    return j;
}

TangleDiagram tangle_from_json(const json& j) {
    TangleDiagram t;
    t.pd = pd_from_json(j);
    require(j.contains("boundary") && j["boundary"].is_object(),
            "tangle JSON needs a \"boundary\" object");
    const json& b = j["boundary"];
    for (const char* k : {"N", "E", "S", "W"})
        require(b.contains(k) && b[k].is_number_integer(), "boundary needs integer N/E/S/W");
    t.N = b["N"].get<int>();
    t.E = b["E"].get<int>();
    t.S = b["S"].get<int>();
    t.W = b["W"].get<int>();
    return t;
}

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::object();
    for (auto [e, k] : p.c) terms[std::to_string(e)] = k;
    return json{{"A", terms}};
}

LaurentPoly laurent_from_json(const json& j) {
    require(j.is_object() && j.contains("A") && j["A"].is_object(),
            "Laurent JSON needs an \"A\" object of exponent -> coefficient");
    LaurentPoly p;
    for (auto it = j["A"].begin(); it != j["A"].end(); ++it) {
        int exp = 0;
        try {
            exp = std::stoi(it.key());
        } catch (const std::exception&) {
            throw JsonError("Laurent exponents must be integer strings");
        }
        require(it.value().is_number_integer(), "Laurent coefficients must be integers");
        p.add_term(exp, it.value().get<std::int64_t>());
    }
    return p;
}

json chair_to_json(const ChairDiagram& c) {
    return json{{"kind", c.kind == ChairDiagram::Kind::Product ? "product" : "concat"},
                {"spec", c.spec}};
}

ChairDiagram chair_from_json(const json& j) {
    require(j.is_object() && j.contains("kind") && j.contains("spec"),
            "chair JSON needs \"kind\" and \"spec\"");
    require(j["kind"].is_string(), "\"kind\" must be \"product\" or \"concat\"");
    std::string kind = j["kind"].get<std::string>();
    require(j["spec"].is_array() && !j["spec"].empty(), "\"spec\" must be a nonempty array");
    std::vector<int> spec;
    for (const auto& x : j["spec"]) {
        require(x.is_number_integer(), "spec entries must be integers");
        spec.push_back(x.get<int>());
    }
    if (kind == "product") return build_product(spec);
    if (kind == "concat") return build_concat(spec);
    throw JsonError("\"kind\" must be \"product\" or \"concat\"");
}

json element_to_json(const ThompsonElement& e) {
    return json{{"top", tree_to_code(e.top)}, {"bottom", tree_to_code(e.bottom)}};
}

ThompsonElement element_from_json(const json& j) {
    require(j.is_object() && j.contains("top") && j.contains("bottom"),
            "element JSON needs \"top\" and \"bottom\" bitstrings");
    require(j["top"].is_string() && j["bottom"].is_string(),
            "\"top\" and \"bottom\" must be bitstrings");
    return make_element_raw(tree_from_code(j["top"].get<std::string>()),
                            tree_from_code(j["bottom"].get<std::string>()));
}

json midline_to_json(const SignedMidlineGraph& g) {
    json arcs = json::array();
    for (const auto& a : g.arcs)
        arcs.push_back({a.i, a.j, sign_str(a.sign), a.above ? "above" : "below"});
    return json{{"vertices", g.vertices}, {"arcs", arcs}};
}

SignedMidlineGraph midline_from_json(const json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("arcs"),
            "midline JSON needs \"vertices\" and \"arcs\"");
    require(j["vertices"].is_number_integer() && j["vertices"].get<int>() >= 1,
            "\"vertices\" must be a positive integer");
    SignedMidlineGraph g;
    g.vertices = j["vertices"].get<int>();
    for (const auto& t : j["arcs"]) {
        require(t.is_array() && t.size() == 4, "each arc must be [i, j, sign, side]");
        MidlineArc a;
        require(t[0].is_number_integer() && t[1].is_number_integer(),
                "arc endpoints must be integers");
        a.i = t[0].get<int>();
        a.j = t[1].get<int>();
        require(0 <= a.i && a.i < a.j && a.j < g.vertices,
                "arc endpoints must satisfy 0 <= i < j < vertices");
        a.sign = sign_from(t[2]);
        require(t[3].is_string(), "arc side must be \"above\" or \"below\"");
        std::string side = t[3].get<std::string>();
        if (side == "above") a.above = true;
        else if (side == "below") a.above = false;
        else throw JsonError("arc side must be \"above\" or \"below\"");
        g.arcs.push_back(a);
    }
    return g;
}

json signed_graph_to_json(const SignedPlanarGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.u, e.v, sign_str(e.sign)});
    json rotation = json::array();
    for (const auto& r : g.rotation) rotation.push_back(r);
    return json{{"vertices", g.vertices}, {"edges", edges}, {"rotation", rotation}};
}

SignedPlanarGraph signed_graph_from_json(const json& j) {
    require(j.is_object() && j.contains("vertices") && j.contains("edges"),
            "signed-graph JSON needs \"vertices\" and \"edges\"");
    require(j["vertices"].is_number_integer() && j["vertices"].get<int>() >= 1,
            "\"vertices\" must be a positive integer");
    SignedPlanarGraph g;
    g.vertices = j["vertices"].get<int>();
    for (const auto& t : j["edges"]) {
        require(t.is_array() && t.size() == 3, "each edge must be [u, v, sign]");
        SignedPlanarGraph::Edge e;
        require(t[0].is_number_integer() && t[1].is_number_integer(),
                "edge endpoints must be integers");
        e.u = t[0].get<int>();
        e.v = t[1].get<int>();
        require(0 <= e.u && e.u < g.vertices && 0 <= e.v && e.v < g.vertices,
                "edge endpoints must be vertex indices");
        e.sign = sign_from(t[2]);
        g.edges.push_back(e);
    }
    if (j.contains("rotation")) {
        require(j["rotation"].is_array() &&
                    static_cast<int>(j["rotation"].size()) == g.vertices,
                "\"rotation\" must list one cycle per vertex");
        for (const auto& r : j["rotation"]) {
            require(r.is_array(), "rotation cycles must be arrays");
            std::vector<int> cyc;
            for (const auto& x : r) {
                require(x.is_number_integer(), "rotation entries must be edge indices");
                int e = x.get<int>();
                require(0 <= e && e < static_cast<int>(g.edges.size()),
                        "rotation entries must be edge indices");
                cyc.push_back(e);
            }
            g.rotation.push_back(cyc);
        }
    } else {
        // Degenerate rotation: edges in index order around each vertex.
        g.rotation.assign(g.vertices, {});
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            g.rotation[g.edges[e].u].push_back(e);
            if (g.edges[e].v != g.edges[e].u) g.rotation[g.edges[e].v].push_back(e);
        }
    }
    return g;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string gauss_code(const PlanarDiagram& d) {
    if (d.crossings.empty()) {
        // No crossings: nothing to report per component beyond its existence.
        std::string out;
        for (int i = 0; i < d.loops; ++i) out += "\n";
        return out;
    }
    int n = d.crossing_count();
    std::map<int, std::vector<Dart>> occ;
    for (int ci = 0; ci < n; ++ci)
        for (int s = 0; s < 4; ++s) occ[d.crossings[ci][s]].push_back({ci, s});
    for (auto& [id, v] : occ)
        if (v.size() != 2) throw DiagramError("gauss_code: edge id occurs != 2 times");

    // Walk strand components exactly as writhe's orientation pass does, so
    // the emitted signs agree with the unflipped writhe convention.
    std::vector<std::vector<bool>> visited(n, std::vector<bool>(4, false));
    std::vector<int> under_entry(n, -1), over_entry(n, -1), label(n, 0);
    std::vector<std::vector<std::pair<int, bool>>> lines;  // (crossing, is_over)
    int next_label = 1;
    for (int ci = 0; ci < n; ++ci) {
        for (int s0 = 0; s0 < 4; ++s0) {
            if (visited[ci][s0]) continue;
            lines.emplace_back();
            Dart cur{ci, s0};
            do {
                auto [c, s] = cur;
                visited[c][s] = true;
                if (s == 0 || s == 2) under_entry[c] = s;
                else over_entry[c] = s;
                if (label[c] == 0) label[c] = next_label++;
                lines.back().push_back({c, s == 1 || s == 3});
                int exit_slot = (s + 2) % 4;
                visited[c][exit_slot] = true;
                const auto& v = occ.at(d.crossings[c][exit_slot]);
                Dart exit{c, exit_slot};
                cur = (v[0] == exit) ? v[1] : v[0];
            } while (cur != Dart{ci, s0});
        }
    }
    std::string out;
    for (const auto& line : lines) {
        std::string row;
        for (auto [c, over] : line) {
            bool positive = (under_entry[c] == 0 && over_entry[c] == 3) ||
                            (under_entry[c] == 2 && over_entry[c] == 1);
            if (!row.empty()) row += ",";
            row += (over ? "O" : "U") + std::to_string(label[c]) + (positive ? "+" : "-");
        }
        out += row + "\n";
    }
    for (int i = 0; i < d.loops; ++i) out += "\n";
    return out;
}

// --- SVG -----------------------------------------------------------------

namespace {

constexpr int kUnit = 40;  // pixels per grid step; node coordinates are
                           // half-integral, so pixel positions stay integral

struct Pt {
    double x = 0, y = 0;  // grid units; y grows away from the leaf line
};

// Positions with every edge at exactly 45 degrees: leaves sit on the leaf
// line, each parent at the intersection of the diagonals through its kids.
std::vector<Pt> tree_layout(const BinaryTree& t) {
    std::vector<Pt> pos(t.size());
    int next_leaf = 0;
    std::function<void(int)> rec = [&](int v) {
        if (t.is_leaf(v)) {
            pos[v] = {static_cast<double>(next_leaf++), 0.0};
            return;
        }
        rec(t.kids[v].first);
        rec(t.kids[v].second);
        Pt a = pos[t.kids[v].first], b = pos[t.kids[v].second];
        double rise = (b.x - a.x + b.y - a.y) / 2;
        pos[v] = {a.x + rise, a.y + rise};
    };
    rec(0);
    return pos;
}

int px(double grid_units) { return static_cast<int>(grid_units * kUnit + 0.5); }

std::string svg_line(int x1, int y1, int x2, int y2) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\"/>\n", x1, y1, x2, y2);
    return buf;
}

std::string svg_open(int w, int h) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n<g stroke=\"black\" stroke-width=\"2\" "
                  "fill=\"none\" stroke-linecap=\"round\">\n",
                  w, h, w, h);
    return buf;
}

constexpr const char* kSvgClose = "</g>\n</svg>\n";

// One chair glyph with its base-line left corner at grid (x, y): a 45-degree
// zigzag profile (leg up, seat down, back up).
std::string chair_glyph(int x, int y, int oy) {
    std::string out;
    out += svg_line(px(x), oy - px(y), px(x + 1), oy - px(y + 1));
    out += svg_line(px(x + 1), oy - px(y + 1), px(x + 2), oy - px(y));
    out += svg_line(px(x + 2), oy - px(y), px(x + 3), oy - px(y + 1));
    return out;
}

// Pillar glyph: a plain 45-degree strut of the same footprint.
std::string pillar_glyph(int x, int y, int oy) {
    std::string out;
    out += svg_line(px(x), oy - px(y), px(x + 3), oy - px(y + 3));
    return out;
}

}  // namespace

std::string render_tree_pair_svg(const ThompsonElement& e) {
    std::vector<Pt> top = tree_layout(e.top), bottom = tree_layout(e.bottom);
    int n = e.leaves();
    double h_top = 0, h_bot = 0;
    for (const Pt& p : top) h_top = std::max(h_top, p.y);
    for (const Pt& p : bottom) h_bot = std::max(h_bot, p.y);
    int margin = kUnit / 2;
    int width = px(n - 1) + 2 * margin;
    int mid_y = margin + px(h_top);  // leaf line
    int height = mid_y + px(h_bot) + margin;

    std::string out = svg_open(width, height);
    auto emit = [&](const BinaryTree& t, const std::vector<Pt>& pos, int dir) {
        for (int v = 0; v < t.size(); ++v) {
            if (t.is_leaf(v)) continue;
            for (int child : {t.kids[v].first, t.kids[v].second})
                out += svg_line(margin + px(pos[v].x), mid_y - dir * px(pos[v].y),
                                margin + px(pos[child].x), mid_y - dir * px(pos[child].y));
        }
    };
    emit(e.top, top, +1);
    emit(e.bottom, bottom, -1);
    // The shared leaf line, dashed so the trees read as glued along it.
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%d\" y1=\"%d\" x2=\"%d\" y2=\"%d\" "
                  "stroke-dasharray=\"4 4\" stroke-width=\"1\"/>\n",
                  margin, mid_y, margin + px(n - 1), mid_y);
    out += buf;
    out += kSvgClose;
    return out;
}

std::string render_chairs_svg(const ChairDiagram& c) {
    std::vector<int> bs = blocks(c);
    bool product = c.kind == ChairDiagram::Kind::Product;
    int margin = kUnit / 2;

    std::string body;
    int width_units = 0, height_units = 0;
    if (product) {
        // All blocks on one base line, blocks separated by one empty step.
        int x = 0;
        height_units = 2;
        int oy = margin + px(height_units);
        for (std::size_t b = 0; b < bs.size(); ++b) {
            for (int g = 0; g < bs[b]; ++g, x += 3) body += chair_glyph(x, 0, oy);
            x += 1;
        }
        width_units = std::max(1, x - 1);
    } else {
        // One story per spec entry, stacked bottom-up; each story ends in a
        // pillar after its chairs.
        int stories = static_cast<int>(bs.size());
        height_units = 4 * stories;
        int oy = margin + px(height_units);
        for (int s = 0; s < stories; ++s) {
            int y = 4 * s, x = 0;
            for (int g = 0; g + 1 < bs[s]; ++g, x += 3) body += chair_glyph(x, y, oy);
            body += pillar_glyph(x, y, oy);
            width_units = std::max(width_units, x + 3);
        }
    }
    int width = px(width_units) + 2 * margin;
    int height = px(height_units) + 2 * margin;
    std::string out = svg_open(width, height);

    // Margin offset: glyphs were emitted in page coordinates already shifted
    // vertically; shift horizontally by wrapping in a translate group.
    char buf[64];
    std::snprintf(buf, sizeof buf, "<g transform=\"translate(%d,0)\">\n", margin);
    out += buf;
    out += body;
    out += "</g>\n";
    out += kSvgClose;
    return out;
}

}  // namespace tangles
