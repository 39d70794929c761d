#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cli.hpp"
#include "doctest.h"
#include "graph.hpp"
#include "hierarchy.hpp"
#include "representation.hpp"
#include "svg.hpp"

using namespace patternforge;

namespace {

struct TempFile {
    std::string path;

    TempFile(const std::string& name, const std::string& content) {
        path = std::string("/tmp/pforge_test_") + name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string witness8_json() { return emit_graph_json(separating_fixtures()[0].graph); }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("check reports memberships with the documented exit codes") {
    TempFile graph("w8.json", witness8_json());

    RunConfig member;
    member.command = "check";
    member.class_selector = "ab";
    member.graph_path = graph.path;
    RunResult r = dispatch(member);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"verdict\": \"member\"") != std::string::npos);
    CHECK(r.output.find("witness_ordering") != std::string::npos);

    RunConfig non = member;
    non.class_selector = "a";
    non.brute = true;
    CHECK(dispatch(non).exit_code == 1);

    RunConfig unknown = member;
    unknown.class_selector = "a";
    unknown.budget = 3;
    CHECK(dispatch(unknown).exit_code == 2);

    RunConfig bad = member;
    bad.class_selector = "zz";
    CHECK_THROWS_AS(dispatch(bad), std::invalid_argument);
}

TEST_CASE("check accepts graph6 input and named classes") {
    TempFile graph("k4.g6", "C~\n");
    RunConfig cfg;
    cfg.command = "check";
    cfg.class_selector = "K4-free";
    cfg.graph_path = graph.path;
    CHECK(dispatch(cfg).exit_code == 1);
    cfg.class_selector = "a";
    cfg.brute = true;
    CHECK(dispatch(cfg).exit_code == 0);
}

TEST_CASE("build, verify and render round-trip through files") {
    TempFile graph("p3.json", R"({"n":3,"edges":[[0,1],[1,2]]})");
    std::string rep_path = "/tmp/pforge_test_p3_rep.json";
    std::string svg_path = "/tmp/pforge_test_p3.svg";

    RunConfig build;
    build.command = "build";
    build.rep_kind = "stairs";
    build.graph_path = graph.path;
    build.solve = true;
    build.out_path = rep_path;
    build.svg_path = svg_path;
    CHECK(dispatch(build).exit_code == 0);

    RunConfig verify;
    verify.command = "verify";
    verify.rep_path = rep_path;
    verify.graph_path = graph.path;
    RunResult vr = dispatch(verify);
    CHECK(vr.exit_code == 0);
    CHECK(vr.output.find("\"valid\": true") != std::string::npos);
    CHECK(vr.output.find("\"order_theorems_hold\": true") != std::string::npos);

    RunConfig render;
    render.command = "render";
    render.rep_path = rep_path;
    render.svg_path = svg_path;
    CHECK(dispatch(render).exit_code == 0);
    std::ifstream svg(svg_path);
    std::string line;
    std::getline(svg, line);
    CHECK(line.find("<svg") != std::string::npos);

    std::remove(rep_path.c_str());
    std::remove(svg_path.c_str());
}

TEST_CASE("build refuses graphs outside the input class") {
    TempFile graph("k3.json", R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})");
    RunConfig build;
    build.command = "build";
    build.rep_kind = "lshapes";
    build.graph_path = graph.path;
    CHECK(dispatch(build).exit_code == 1);
}

TEST_CASE("verify flags a representation of the wrong graph") {
    TempFile graph("p3b.json", R"({"n":3,"edges":[[0,1],[1,2]]})");
    TempFile other("k1_3.json", R"({"n":3,"edges":[[0,1],[0,2]]})");
    std::string rep_path = "/tmp/pforge_test_p3b_rep.json";

    RunConfig build;
    build.command = "build";
    build.rep_kind = "filaments";
    build.graph_path = graph.path;
    build.solve = true;
    build.out_path = rep_path;
    REQUIRE(dispatch(build).exit_code == 0);

    RunConfig verify;
    verify.command = "verify";
    verify.rep_path = rep_path;
    verify.graph_path = other.path;
    CHECK(dispatch(verify).exit_code == 1);
    std::remove(rep_path.c_str());
}

TEST_CASE("hunt reports its catch with certificates") {
    RunConfig hunt;
    hunt.command = "hunt";
    hunt.in_class = "empty";
    hunt.notin_class = "forest";
    hunt.max_n = 4;
    RunResult r = dispatch(hunt);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"found\": true") != std::string::npos);
    CHECK(r.output.find("\"in_member\": true") != std::string::npos);
    CHECK(r.output.find("\"notin_member\": false") != std::string::npos);

    RunConfig dry = hunt;
    dry.in_class = "ab";
    dry.notin_class = "a";
    dry.max_n = 5;
    CHECK(dispatch(dry).exit_code == 1);  // nothing that small
}

TEST_CASE("the edges command emits a deterministic diagram report") {
    std::string dot_path = "/tmp/pforge_test_diagram.dot";
    RunConfig edges;
    edges.command = "edges";
    edges.diagram = true;
    edges.max_n = 3;
    edges.dot_path = dot_path;
    RunResult one = dispatch(edges);
    RunResult two = dispatch(edges);
    CHECK(one.exit_code == 0);
    CHECK(one.output == two.output);
    std::ifstream dot(dot_path);
    std::string text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
    CHECK(text.find("digraph") != std::string::npos);
    std::remove(dot_path.c_str());
}

TEST_CASE("byte-identical reruns") {
    TempFile graph("det.json", witness8_json());
    RunConfig cfg;
    cfg.command = "check";
    cfg.class_selector = "ab";
    cfg.graph_path = graph.path;
    RunResult a = dispatch(cfg);
    RunResult b = dispatch(cfg);
    CHECK(a.output == b.output);
}

TEST_CASE("the catalog streams newline-delimited graph6") {
    RunConfig cfg;
    cfg.command = "catalog";
    cfg.max_n = 4;
    RunResult r = dispatch(cfg);
    CHECK(r.exit_code == 0);
    // 1 + 2 + 4 + 11 graphs, one word per line.
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines == 18);
    CHECK(r.output.find("C~") != std::string::npos);  // the complete graph on four vertices
}

TEST_CASE("rendering handles empty and minimal representations") {
    Representation empty;
    empty.kind = RepKind::TouchingLShapes;
    std::string svg = render_svg(empty);
    CHECK(svg.find("<line") != std::string::npos);      // the grounding line
    CHECK(svg.find("<polyline") == std::string::npos);  // nothing else

    Representation single;
    single.kind = RepKind::TouchingLShapes;
    single.lshapes = {{Rational(1), Rational(2), Rational(1)}};
    std::string one = render_svg(single);
    CHECK(one.find("<polyline") != std::string::npos);
}

TEST_CASE("the environment variable caps the search budget") {
    TempFile graph("env.json", witness8_json());
    RunConfig cfg;
    cfg.command = "check";
    cfg.class_selector = "a";
    cfg.graph_path = graph.path;
    setenv("PATTERNFORGE_BUDGET", "3", 1);
    RunResult r = dispatch(cfg);
    unsetenv("PATTERNFORGE_BUDGET");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("\"verdict\": \"unknown\"") != std::string::npos);
    // An explicit budget takes precedence over the environment.
    setenv("PATTERNFORGE_BUDGET", "3", 1);
    cfg.budget = 100000000;
    RunResult full = dispatch(cfg);
    unsetenv("PATTERNFORGE_BUDGET");
    CHECK(full.exit_code == 1);
}

TEST_CASE("usage errors surface as invalid arguments") {
    RunConfig cfg;
    cfg.command = "check";
    cfg.class_selector = "ab";
    cfg.graph_path = "/nonexistent/file.json";
    CHECK_THROWS_AS(dispatch(cfg), std::invalid_argument);

    RunConfig nocmd;
    nocmd.command = "frobnicate";
    CHECK_THROWS_AS(dispatch(nocmd), std::invalid_argument);
}

TEST_SUITE_END();
