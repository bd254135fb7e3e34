// tangles: command-line surface over the tangle/Thompson pipeline.
//
// Exit codes: 0 success, 1 verify mismatch, 2 usage error, 3 domain error.

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tangles/constructions.hpp"
#include "tangles/conway.hpp"
#include "tangles/invariants.hpp"
#include "tangles/jones_map.hpp"
#include "tangles/json_io.hpp"
#include "tangles/reverse.hpp"
#include "tangles/thompson.hpp"

namespace {

using nlohmann::json;
using namespace tangles;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw JsonError(path + ": " + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + out_path);
    out << text;
}

// The closed diagram named by a Conway expression; open tangles are closed.
PlanarDiagram conway_pd(const std::string& expr) {
    BuiltDiagram b = build_conway(parse_conway(expr));
    return b.closed ? b.pd : closure(b.tangle);
}

std::string tuple_str(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

// Uniform-ish random tree by recursive splitting; used by verify --seed.
BinaryTree random_tree(int leaves, std::mt19937& rng) {
    std::string code;
    std::function<void(int)> rec = [&](int n) {
        if (n == 1) {
            code += "0";
            return;
        }
        code += "1";
        std::uniform_int_distribution<int> split(1, n - 1);
        int l = split(rng);
        rec(l);
        rec(n - l);
    };
    rec(leaves);
    return tree_from_code(code);
}

std::string class_name(long long det) {
    if (det == 1) return "unknot class";
    if (det == 3) return "trefoil class";
    return "det " + std::to_string(det) + " class";
}

int run(int argc, char** argv) {
    CLI::App app{"Conway tangles, Thompson's group F, and the maps between them"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--out", out_path, "output file (default: stdout)")->configurable(false);

    // --- parse -----------------------------------------------------------
    std::string parse_expr;
    auto* cmd_parse = app.add_subcommand("parse", "parse Conway notation, print canonical form");
    cmd_parse->add_option("expr", parse_expr, "Conway expression, e.g. \"[2 1 2]\"")->required();

    // --- build -----------------------------------------------------------
    std::string build_kind;
    std::vector<int> build_spec;
    bool build_chair = false;
    auto* cmd_build = app.add_subcommand("build", "build a chair diagram and expand it");
    cmd_build->add_option("kind", build_kind, "product|concat")
        ->required()
        ->check(CLI::IsMember({"product", "concat"}));
    cmd_build->add_option("spec", build_spec, "tuple entries x1 x2 ...")->required();
    cmd_build->add_flag("--chair", build_chair, "emit the chair diagram itself, not its element");

    // --- expand ----------------------------------------------------------
    std::string expand_in;
    auto* cmd_expand = app.add_subcommand("expand", "expand a chair-diagram JSON to an element");
    cmd_expand->add_option("input", expand_in, "chair JSON file")->required();

    // --- psi -------------------------------------------------------------
    std::string psi_in, psi_variant = "psi";
    bool psi_gauss = false;
    auto* cmd_psi = app.add_subcommand("psi", "knot-closure map: element or chair -> diagram");
    cmd_psi->add_option("input", psi_in, "element JSON (psi) or chair JSON (psi-prime)")
        ->required();
    cmd_psi->add_option("--variant", psi_variant, "psi|psi-prime (default psi)")
        ->check(CLI::IsMember({"psi", "psi-prime"}));
    cmd_psi->add_flag("--gauss", psi_gauss, "emit Gauss-code text instead of PD JSON");

    // --- invariant -------------------------------------------------------
    std::string inv_in;
    bool inv_bracket = false, inv_jones = false, inv_det = false;
    int max_crossings = kDefaultMaxCrossings;
    auto* cmd_inv = app.add_subcommand("invariant", "invariants of a PD JSON diagram");
    cmd_inv->add_option("input", inv_in, "PD JSON file")->required();
    cmd_inv->add_flag("--bracket", inv_bracket, "Kauffman bracket");
    cmd_inv->add_flag("--jones", inv_jones, "Jones set over orientation classes");
    cmd_inv->add_flag("--det", inv_det, "Goeritz determinant");
    cmd_inv->add_option("--max-crossings", max_crossings, "bracket size guard (default 28)");

    // --- closure ---------------------------------------------------------
    std::string closure_expr;
    bool closure_gauss = false;
    auto* cmd_closure = app.add_subcommand("closure", "closed diagram of a Conway expression");
    cmd_closure->add_option("expr", closure_expr, "Conway expression")->required();
    cmd_closure->add_flag("--gauss", closure_gauss, "emit Gauss-code text instead of PD JSON");

    // --- reverse ---------------------------------------------------------
    std::string reverse_in;
    auto* cmd_reverse = app.add_subcommand("reverse", "diagram -> element via the reverse pipeline");
    cmd_reverse->add_option("input", reverse_in, "PD JSON file")->required();

    // --- graph -----------------------------------------------------------
    std::string graph_stage, graph_in;
    auto* cmd_graph = app.add_subcommand("graph", "individual reverse-pipeline stages");
    cmd_graph->add_option("stage", graph_stage, "extract|linearize|normalize")
        ->required()
        ->check(CLI::IsMember({"extract", "linearize", "normalize"}));
    cmd_graph->add_option("input", graph_in,
                          "PD JSON (extract), signed-graph JSON (linearize), "
                          "or midline JSON (normalize)")
        ->required();

    // --- render ----------------------------------------------------------
    std::string render_in, render_what;
    auto* cmd_render = app.add_subcommand("render", "SVG on the 45-degree grid");
    cmd_render->add_option("--svg", render_what, "tree-pair|chairs")
        ->required()
        ->check(CLI::IsMember({"tree-pair", "chairs"}));
    cmd_render->add_option("input", render_in, "element JSON (tree-pair) or chair JSON (chairs)")
        ->required();

    // --- verify ----------------------------------------------------------
    std::string verify_mode, verify_kind = "product";
    std::vector<int> verify_spec;
    long long seed = -1;
    auto* cmd_verify = app.add_subcommand("verify", "check the theorems on one tuple");
    cmd_verify->add_option("mode", verify_mode, "product|concat|commute")
        ->required()
        ->check(CLI::IsMember({"product", "concat", "commute"}));
    cmd_verify->add_option("spec", verify_spec, "tuple entries x1 x2 ...")->required();
    cmd_verify->add_option("--kind", verify_kind, "chair kind for commute (default product)")
        ->check(CLI::IsMember({"product", "concat"}));
    cmd_verify->add_option("--seed", seed, "also run a seeded random psi/reverse self-test");
    cmd_verify->add_option("--max-crossings", max_crossings, "bracket size guard (default 28)");

    // Let "-o" (declared on the root) be given after a subcommand's args.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // app.exit prints help for -h and the error message otherwise.
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (cmd_parse->parsed()) {
        ConwayPtr e = parse_conway(parse_expr);
        json out{{"expr", print_conway(e)},
                 {"closed", e->kind == ConwayExpr::Kind::Closure}};
        try {
            Fraction f = rational_fraction(
                e->kind == ConwayExpr::Kind::Closure ? e->left : e);
            out["fraction"] = json{{"num", f.num}, {"den", f.den}};
        } catch (const ConwayShapeError&) {
            // Not a pure product; no continued fraction to report.
        }
        write_output(out_path, dump_json(out));
    } else if (cmd_build->parsed()) {
        ChairDiagram c = build_kind == "product" ? build_product(build_spec)
                                                 : build_concat(build_spec);
        json out = build_chair ? chair_to_json(c) : element_to_json(expand(c));
        write_output(out_path, dump_json(out));
    } else if (cmd_expand->parsed()) {
        ChairDiagram c = chair_from_json(read_json(expand_in));
        write_output(out_path, dump_json(element_to_json(expand(c))));
    } else if (cmd_psi->parsed()) {
        PlanarDiagram d = psi_variant == "psi"
                              ? psi(element_from_json(read_json(psi_in)))
                              : psi_prime(chair_from_json(read_json(psi_in)));
        write_output(out_path, psi_gauss ? gauss_code(d) : dump_json(pd_to_json(d)));
    } else if (cmd_inv->parsed()) {
        if (!inv_bracket && !inv_jones && !inv_det)
            throw UsageError("invariant: pick at least one of --bracket/--jones/--det");
        PlanarDiagram d = pd_from_json(read_json(inv_in));
        json out = json::object();
        if (inv_bracket) out["bracket"] = laurent_to_json(kauffman_bracket(d, max_crossings));
        if (inv_jones) {
            json arr = json::array();
            for (const LaurentPoly& p : jones_set(d, max_crossings))
                arr.push_back(laurent_to_json(p));
            out["jones"] = arr;
        }
        if (inv_det) out["det"] = goeritz_determinant(d);
        write_output(out_path, dump_json(out));
    } else if (cmd_closure->parsed()) {
        PlanarDiagram d = conway_pd(closure_expr);
        write_output(out_path, closure_gauss ? gauss_code(d) : dump_json(pd_to_json(d)));
    } else if (cmd_reverse->parsed()) {
        ThompsonElement e = reverse_diagram(pd_from_json(read_json(reverse_in)));
        write_output(out_path, dump_json(element_to_json(e)));
    } else if (cmd_graph->parsed()) {
        json out;
        if (graph_stage == "extract")
            out = signed_graph_to_json(extract_signed_graph(pd_from_json(read_json(graph_in))));
        else if (graph_stage == "linearize")
            out = midline_to_json(linearize(signed_graph_from_json(read_json(graph_in))));
        else
            out = midline_to_json(normalize(midline_from_json(read_json(graph_in))));
        write_output(out_path, dump_json(out));
    } else if (cmd_render->parsed()) {
        std::string svg =
            render_what == "tree-pair"
                ? render_tree_pair_svg(element_from_json(read_json(render_in)))
                : render_chairs_svg(chair_from_json(read_json(render_in)));
        write_output(out_path, svg);
    } else if (cmd_verify->parsed()) {
        std::ostringstream report;
        bool ok = true;
        if (verify_mode == "commute") {
            ChairDiagram c = verify_kind == "product" ? build_product(verify_spec)
                                                      : build_concat(verify_spec);
            report << "verify commute " << verify_kind << " " << tuple_str(verify_spec, " ")
                   << "\n";
            ok = jones_set(psi(expand(c)), max_crossings) ==
                 jones_set(psi_prime(c), max_crossings);
            report << (ok ? "jones equal: psi(expand) matches psi-prime\n"
                          : "jones mismatch\n");
        } else {
            bool product = verify_mode == "product";
            ChairDiagram c =
                product ? build_product(verify_spec) : build_concat(verify_spec);
            std::string expr =
                "[" + tuple_str(verify_spec, product ? " " : ",") + "]";
            report << "verify " << verify_mode << " " << tuple_str(verify_spec, " ") << "\n";
            PlanarDiagram lhs = psi_prime(c);
            PlanarDiagram rhs = conway_pd(expr);
            ok = jones_set(lhs, max_crossings) == jones_set(rhs, max_crossings);
            if (ok)
                report << "jones equal: " << class_name(goeritz_determinant(rhs)) << "\n";
            else
                report << "jones mismatch\n";
        }
        if (ok && seed >= 0) {
            std::mt19937 rng(static_cast<std::uint32_t>(seed));
            std::uniform_int_distribution<int> leaves(2, 6);
            int samples = 5;
            for (int i = 0; i < samples; ++i) {
                int n = leaves(rng);
                ThompsonElement e = make_element(random_tree(n, rng), random_tree(n, rng));
                PlanarDiagram d = psi(e);
                if (jones_set(psi(reverse_diagram(d)), max_crossings) !=
                    jones_set(d, max_crossings)) {
                    ok = false;
                    report << "self-test mismatch at sample " << i << "\n";
                    break;
                }
            }
            if (ok) report << "self-test ok (" << samples << " samples)\n";
        }
        write_output(out_path, report.str());
        return ok ? 0 : 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
