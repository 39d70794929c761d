#include <iostream>

#include "CLI11.hpp"

#include "cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"forbidden-pattern orderings and grounded intersection representations"};
    app.require_subcommand(1);

    patternforge::RunConfig cfg;
    std::string scale = "60";

    CLI::App* check = app.add_subcommand("check", "decide class membership of a graph");
    check->add_option("--class", cfg.class_selector, "class name or pair-subset string")->required();
    check->add_option("--graph", cfg.graph_path, "graph file (graph6 or JSON)")->required();
    check->add_option("--budget", cfg.budget, "node budget for the pruned search");
    check->add_flag("--brute", cfg.brute, "full factorial scan instead of pruned search");

    CLI::App* build = app.add_subcommand("build", "build a grounded representation");
    build->add_option("--rep", cfg.rep_kind, "lshapes | rectangles | filaments | stairs")->required();
    build->add_option("--graph", cfg.graph_path, "graph file")->required();
    build->add_option("--ordering", cfg.ordering_path, "ordering file (JSON rank list)");
    build->add_flag("--solve", cfg.solve, "search for an admissible ordering first");
    build->add_option("--budget", cfg.budget, "node budget when solving");
    build->add_option("--out", cfg.out_path, "write the representation JSON here");
    build->add_option("--svg", cfg.svg_path, "also render to SVG");

    CLI::App* verify = app.add_subcommand("verify", "verify a representation against a graph");
    verify->add_option("--rep", cfg.rep_path, "representation JSON file")->required();
    verify->add_option("--graph", cfg.graph_path, "graph file")->required();
    verify->add_option("--out", cfg.out_path, "write the report here");

    CLI::App* hunt = app.add_subcommand("hunt", "hunt for a separating graph");
    hunt->add_option("--in", cfg.in_class, "class the graph must belong to")->required();
    hunt->add_option("--notin", cfg.notin_class, "class the graph must avoid")->required();
    hunt->add_option("--max-n", cfg.max_n, "largest order to sweep");
    hunt->add_option("--out", cfg.out_path, "write the report here");

    CLI::App* edges = app.add_subcommand("edges", "check the inclusion diagram on the catalog");
    edges->add_flag("--diagram", cfg.diagram, "run the numbered inclusion-diagram report");
    edges->add_option("--max-n", cfg.max_n, "largest order to sweep");
    edges->add_option("--out", cfg.out_path, "write the JSON report here");
    edges->add_option("--dot", cfg.dot_path, "write a DOT rendering here");

    CLI::App* catalog = app.add_subcommand("catalog", "stream the non-isomorphic graph catalog as graph6");
    catalog->add_option("--max-n", cfg.max_n, "largest order to enumerate");
    catalog->add_option("--out", cfg.out_path, "write the stream here");

    CLI::App* render = app.add_subcommand("render", "render a representation to SVG");
    render->add_option("--rep", cfg.rep_path, "representation JSON file")->required();
    render->add_option("--svg", cfg.svg_path, "output SVG path")->required();
    render->add_option("--scale", scale, "units per coordinate step");
    render->add_option("--out", cfg.out_path, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    try {
        cfg.svg_scale = patternforge::Rational::from_string(scale);
        patternforge::RunResult res = patternforge::dispatch(cfg);
        if (cfg.out_path.empty()) std::cout << res.output;
        return res.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
