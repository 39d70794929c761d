#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "builders.hpp"
#include "hierarchy.hpp"
#include "named_classes.hpp"
#include "representation.hpp"
#include "solver.hpp"
#include "svg.hpp"

namespace patternforge {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
    out << text;
}

Ordering ordering_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const nlohmann::json& arr = j.is_object() ? j.at("ranks") : j;
    Ordering o;
    for (const auto& v : arr) o.ranks.push_back(v.get<int>());
    return o;
}

std::uint64_t effective_budget(std::uint64_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PATTERNFORGE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSearchBudget;
}

nlohmann::json ordering_json(const Ordering& o) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : o.ranks) arr.push_back(v);
    return arr;
}

RunResult finish(const RunConfig& cfg, int exit_code, const nlohmann::json& doc) {
    RunResult res;
    res.exit_code = exit_code;
    res.output = doc.dump(2) + "\n";
    if (!cfg.out_path.empty()) write_file(cfg.out_path, res.output);
    return res;
}

RunResult run_check(const RunConfig& cfg) {
    if (cfg.class_selector.empty() || cfg.graph_path.empty())
        throw std::invalid_argument("check requires --class and --graph");
    Graph g = parse_graph_auto(read_file(cfg.graph_path));
    PatternSet ps = resolve_class_selector(cfg.class_selector);
    MembershipResult r;
    if (cfg.brute)
        r = brute_force_membership(g, ps);
    else
        r = find_avoiding_ordering(g, ps, effective_budget(cfg.budget));

    nlohmann::json doc;
    doc["command"] = "check";
    doc["class"] = cfg.class_selector;
    doc["graph"] = {{"n", g.n()}, {"edges", g.edge_count()}, {"graph6", emit_graph6(g)},
                    {"connected", g.is_connected()}};
    doc["mode"] = cfg.brute ? "brute" : "pruned";
    doc["nodes_explored"] = r.nodes_explored;
    switch (r.verdict) {
        case MembershipResult::Verdict::Member:
            doc["verdict"] = "member";
            doc["witness_ordering"] = ordering_json(*r.witness_ordering);
            return finish(cfg, 0, doc);
        case MembershipResult::Verdict::NonMember:
            doc["verdict"] = "non-member";
            return finish(cfg, 1, doc);
        case MembershipResult::Verdict::Unknown:
            doc["verdict"] = "unknown";
            return finish(cfg, 2, doc);
    }
    throw std::logic_error("unreachable");
}

RunResult run_build(const RunConfig& cfg) {
    if (cfg.rep_kind.empty() || cfg.graph_path.empty())
        throw std::invalid_argument("build requires --rep and --graph");
    Graph g = parse_graph_auto(read_file(cfg.graph_path));
    RepKind kind = rep_kind_from_name(cfg.rep_kind);

    Ordering sigma{{}};
    if (kind != RepKind::TouchingLShapes) {
        if (!cfg.ordering_path.empty()) {
            sigma = ordering_from_json(read_file(cfg.ordering_path));
        } else if (cfg.solve) {
            PatternSet pre;
            switch (kind) {
                case RepKind::TouchingRectangles: pre = resolve_class_selector("empty"); break;
                case RepKind::IntervalFilaments: pre = resolve_class_selector("a"); break;
                case RepKind::GroundedStairs: pre = resolve_class_selector("ab"); break;
                default: break;
            }
            MembershipResult m = find_avoiding_ordering(g, pre, effective_budget(cfg.budget));
            if (m.verdict == MembershipResult::Verdict::Unknown) {
                nlohmann::json doc;
                doc["command"] = "build";
                doc["error"] = "membership search exhausted its budget";
                return finish(cfg, 2, doc);
            }
            if (!m.member()) {
                nlohmann::json doc;
                doc["command"] = "build";
                doc["error"] = "graph is not in the builder's input class";
                return finish(cfg, 1, doc);
            }
            sigma = *m.witness_ordering;
        } else {
            throw std::invalid_argument("build requires --ordering <file> or --solve");
        }
    }

    Representation rep;
    try {
        switch (kind) {
            case RepKind::TouchingLShapes: rep = build_touching_lshapes(g); break;
            case RepKind::TouchingRectangles: rep = build_touching_rectangles(g, sigma); break;
            case RepKind::IntervalFilaments: rep = build_interval_filaments(g, sigma); break;
            case RepKind::GroundedStairs: rep = build_grounded_stairs(g, sigma); break;
        }
    } catch (const NotAForest& e) {
        nlohmann::json doc;
        doc["command"] = "build";
        doc["error"] = e.what();
        return finish(cfg, 1, doc);
    } catch (const OrderingNotAvoiding& e) {
        nlohmann::json doc;
        doc["command"] = "build";
        doc["error"] = e.what();
        return finish(cfg, 1, doc);
    }

    if (!cfg.svg_path.empty()) write_file(cfg.svg_path, render_svg(rep, cfg.svg_scale));
    RunResult res;
    res.exit_code = 0;
    res.output = rep_to_json(rep) + "\n";
    if (!cfg.out_path.empty()) write_file(cfg.out_path, res.output);
    return res;
}

RunResult run_verify(const RunConfig& cfg) {
    if (cfg.rep_path.empty() || cfg.graph_path.empty())
        throw std::invalid_argument("verify requires --rep and --graph");
    Representation rep = rep_from_json(read_file(cfg.rep_path));
    Graph g = parse_graph_auto(read_file(cfg.graph_path));
    Report report = verify_representation(rep, g);

    nlohmann::json doc;
    doc["command"] = "verify";
    doc["kind"] = rep_kind_name(rep.kind);
    doc["valid"] = report.valid();
    doc["violations"] = report.violations;
    if (report.valid()) {
        doc["grounding_order"] = ordering_json(grounding_order(rep));
        doc["order_theorems_hold"] = check_grounding_theorem(rep, g);
    }
    return finish(cfg, report.valid() ? 0 : 1, doc);
}

RunResult run_hunt(const RunConfig& cfg) {
    if (cfg.in_class.empty() || cfg.notin_class.empty())
        throw std::invalid_argument("hunt requires --in and --notin");
    ClassSpec inside = resolve_class_spec(cfg.in_class);
    ClassSpec outside = resolve_class_spec(cfg.notin_class);
    std::optional<Graph> found = hunt_separating_graph(outside, inside, cfg.max_n);

    nlohmann::json doc;
    doc["command"] = "hunt";
    doc["in"] = cfg.in_class;
    doc["notin"] = cfg.notin_class;
    doc["max_n"] = cfg.max_n;
    if (found) {
        doc["found"] = true;
        doc["graph6"] = emit_graph6(*found);
        doc["graph"] = nlohmann::json::parse(emit_graph_json(*found));
        // Re-verified certificates.
        doc["in_member"] = inside.decide(*found);
        doc["notin_member"] = outside.decide(*found);
        return finish(cfg, 0, doc);
    }
    doc["found"] = false;
    return finish(cfg, 1, doc);
}

RunResult run_edges(const RunConfig& cfg) {
    if (!cfg.diagram) throw std::invalid_argument("edges requires --diagram");
    std::vector<DiagramEdgeReport> reports = run_diagram_report(cfg.max_n);
    nlohmann::json doc;
    doc["command"] = "edges";
    doc["max_n"] = cfg.max_n;
    doc["edges"] = nlohmann::json::array();
    bool any_failed = false;
    for (const auto& r : reports) {
        nlohmann::json e;
        e["id"] = r.id;
        e["sub"] = r.sub;
        e["sup"] = r.sup;
        e["mode"] = r.mode;
        e["status"] = r.status;
        e["detail"] = r.detail;
        if (r.separating_graph6) e["separating_graph6"] = *r.separating_graph6;
        doc["edges"].push_back(e);
        if (r.status == "failed") any_failed = true;
    }
    if (!cfg.dot_path.empty()) write_file(cfg.dot_path, diagram_report_to_dot(reports));
    return finish(cfg, any_failed ? 1 : 0, doc);
}

RunResult run_catalog(const RunConfig& cfg) {
    GraphCatalog cat = enumerate_catalog(cfg.max_n);
    std::ostringstream os;
    for (int n = 1; n <= cfg.max_n; ++n)
        for (const Graph& g : cat.of_order(n)) os << emit_graph6(g) << "\n";
    RunResult res;
    res.exit_code = 0;
    res.output = os.str();
    if (!cfg.out_path.empty()) write_file(cfg.out_path, res.output);
    return res;
}

RunResult run_render(const RunConfig& cfg) {
    if (cfg.rep_path.empty() || cfg.svg_path.empty())
        throw std::invalid_argument("render requires --rep and --svg");
    Representation rep = rep_from_json(read_file(cfg.rep_path));
    write_file(cfg.svg_path, render_svg(rep, cfg.svg_scale));
    nlohmann::json doc;
    doc["command"] = "render";
    doc["svg"] = cfg.svg_path;
    doc["shapes"] = rep.size();
    return finish(cfg, 0, doc);
}

}  // namespace

RunResult dispatch(const RunConfig& cfg) {
    if (cfg.command == "check") return run_check(cfg);
    if (cfg.command == "build") return run_build(cfg);
    if (cfg.command == "verify") return run_verify(cfg);
    if (cfg.command == "hunt") return run_hunt(cfg);
    if (cfg.command == "edges") return run_edges(cfg);
    if (cfg.command == "render") return run_render(cfg);
    if (cfg.command == "catalog") return run_catalog(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace patternforge
