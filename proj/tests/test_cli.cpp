// End-to-end checks of the tangles binary.  ctest passes the binary path as
// the final command-line argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

std::string cli;  // path to the tangles binary

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

}  // namespace

TEST_CASE("parse reports the canonical form and fraction") {
    RunResult r = run("parse \"[2 1 2]\"");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["expr"] == "[2 1 2]");
    CHECK(j["closed"] == true);
    CHECK(j["fraction"]["num"] == 8);
    CHECK(j["fraction"]["den"] == 3);
}

TEST_CASE("build / psi / invariant pipeline") {
    REQUIRE(run("build product 3 -o cli_elem.json").status == 0);
    auto elem = nlohmann::json::parse(std::ifstream("cli_elem.json"));
    CHECK(elem.contains("top"));
    CHECK(elem.contains("bottom"));

    REQUIRE(run("psi cli_elem.json -o cli_pd.json").status == 0);
    auto pd = nlohmann::json::parse(std::ifstream("cli_pd.json"));
    CHECK(pd["crossings"].size() == 20);  // 2(n-1) for the 11-leaf expansion

    // Its Jones class is the trefoil's: determinant 3.
    RunResult inv = run("invariant cli_pd.json --det");
    REQUIRE(inv.status == 0);
    CHECK(nlohmann::json::parse(inv.out)["det"] == 3);
}

TEST_CASE("closure, gauss text, and reverse") {
    REQUIRE(run("closure \"[2 2]\" -o cli_fig8.json").status == 0);
    RunResult gauss = run("closure \"[2 2]\" --gauss");
    REQUIRE(gauss.status == 0);
    CHECK(gauss.out.find('O') != std::string::npos);
    CHECK(gauss.out.find('U') != std::string::npos);

    RunResult rev = run("reverse cli_fig8.json");
    REQUIRE(rev.status == 0);
    auto elem = nlohmann::json::parse(rev.out);
    CHECK(elem.contains("top"));
    std::ofstream("cli_rev.json") << rev.out;
    RunResult back = run("psi cli_rev.json -o cli_back.json");
    REQUIRE(back.status == 0);
    RunResult det = run("invariant cli_back.json --det --max-crossings 100");
    REQUIRE(det.status == 0);
    CHECK(nlohmann::json::parse(det.out)["det"] == 5);
}

TEST_CASE("graph stages compose") {
    REQUIRE(run("closure \"[3]\" -o cli_tref.json").status == 0);
    REQUIRE(run("graph extract cli_tref.json -o cli_g.json").status == 0);
    REQUIRE(run("graph linearize cli_g.json -o cli_m.json").status == 0);
    RunResult norm = run("graph normalize cli_m.json");
    REQUIRE(norm.status == 0);
    auto m = nlohmann::json::parse(norm.out);
    CHECK(m["vertices"].get<int>() >= 2);
    for (const auto& arc : m["arcs"]) {
        // Normalized output is in thompson form: sign matches side.
        bool positive = arc[2] == "+";
        CHECK(arc[3] == (positive ? "above" : "below"));
    }
}

TEST_CASE("render emits SVG") {
    RunResult svg = run("render --svg tree-pair cli_elem.json");
    REQUIRE(svg.status == 0);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    REQUIRE(run("build concat 2 3 --chair -o cli_chair.json").status == 0);
    RunResult chairs = run("render --svg chairs cli_chair.json");
    REQUIRE(chairs.status == 0);
    CHECK(chairs.out.rfind("<svg", 0) == 0);
}

TEST_CASE("verify reports and exit codes") {
    RunResult v = run("verify product 3");
    CHECK(v.status == 0);
    CHECK(v.out.find("jones equal: trefoil class") != std::string::npos);
    CHECK(run("verify concat 2 2").status == 0);
    CHECK(run("verify commute 2 2 --kind product --max-crossings 100").status == 0);
}

TEST_CASE("deterministic output and error codes") {
    RunResult a = run("build product 2 2");
    RunResult b = run("build product 2 2");
    CHECK(a.out == b.out);

    CHECK(run("frobnicate").status == 2);           // unknown subcommand
    CHECK(run("invariant missing.json --det").status == 2);  // unreadable input
    CHECK(run("parse \"[\"").status == 3);          // domain error
    CHECK(run("build product 0").status == 3);      // invalid spec
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli [doctest args] <path-to-tangles-binary>\n");
        return 1;
    }
    cli = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
