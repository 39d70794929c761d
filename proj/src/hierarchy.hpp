#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "patterns.hpp"
#include "solver.hpp"

namespace patternforge {

// A class with a decision procedure at desk scale: either a forbidden-pattern
// family run through the ordering solver, or a brute-force oracle.
struct ClassSpec {
    std::string name;
    std::function<bool(const Graph&)> decide;   // throws on undecided/oversize
    std::function<bool(const Graph&)> recheck;  // independent route for certificates, may be empty
    int max_n = 8;
};

ClassSpec pattern_class(const std::string& selector);
ClassSpec oracle_class(const std::string& name);
ClassSpec all_graphs_class();

// Resolves "oracle:<name>" to the named oracle, anything else to a pattern
// class (catalog name or P_S subset string).
ClassSpec resolve_class_spec(const std::string& selector);

struct EdgeCheckResult {
    std::string sub, sup;
    bool inclusion_holds_on_catalog = false;
    std::optional<Graph> separating_example;  // in sup, not in sub
    bool strict_on_catalog = false;
    long graphs_checked = 0;
};

// Sweeps the catalog up to n_max: inclusion holds when no graph lies in sub
// without lying in sup; the first graph of sup \ sub (canonical enumeration
// order, smallest order first) certifies strictness. Membership of any
// reported example is re-verified through both decision procedures.
EdgeCheckResult verify_inclusion(const ClassSpec& sub, const ClassSpec& sup, int n_max);

// First catalog graph in b \ a, or nullopt.
std::optional<Graph> hunt_separating_graph(const ClassSpec& a, const ClassSpec& b, int n_max);

// Hard-coded separation witnesses with their expected verdicts.
struct FixtureVerdict {
    std::string class_selector;
    bool member;
};

struct SeparatingFixture {
    std::string name;
    Graph graph = Graph(0);
    std::vector<FixtureVerdict> expected;
    std::optional<Ordering> known_avoiding;  // ordering certifying the positive verdict
};

// Two graphs found by computer search in the source hierarchy: an 8-vertex
// graph inside C_ab but outside C_a and C_b, and a 12-vertex graph outside
// C_abcd altogether.
const std::vector<SeparatingFixture>& separating_fixtures();

// The inclusion diagram: numbered edges between pattern classes and grounded
// geometric classes. Only some directions are computable; each edge records
// how (or whether) this artifact can check it.
struct DiagramEdge {
    enum class Mode { Patterns, Constructive, OrderTheorem, Definitional, NotComputable };

    int id;
    std::string sub, sup;
    Mode mode;
};

const std::vector<DiagramEdge>& diagram_edges();

struct DiagramEdgeReport {
    int id;
    std::string sub, sup;
    std::string mode;
    std::string status;  // "holds", "holds-strict", "failed", "skipped"
    std::string detail;
    std::optional<std::string> separating_graph6;
};

std::vector<DiagramEdgeReport> run_diagram_report(int n_max);

std::string diagram_report_to_dot(const std::vector<DiagramEdgeReport>& reports);

}  // namespace patternforge
