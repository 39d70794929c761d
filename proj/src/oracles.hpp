#pragma once

#include "graph.hpp"

namespace patternforge {
namespace oracles {

// Independent brute-force class tests at desk scale. None of these touch the
// pattern machinery; they exist to cross-check it.

bool is_acyclic(const Graph& g);
bool is_linear_forest(const Graph& g);          // acyclic and max degree <= 2
bool is_star_plus_isolated(const Graph& g);     // all edges share one endpoint
bool is_bipartite(const Graph& g);
bool has_triangle(const Graph& g);
bool is_chordal(const Graph& g);                // no induced cycle of length >= 4, subset scan
bool has_transitive_orientation(const Graph& g);  // brute over edge orientations, n <= 6 advised
bool is_cocomparability(const Graph& g);
bool is_permutation_graph(const Graph& g);
bool is_3colorable(const Graph& g);
bool has_k4(const Graph& g);
bool is_split(const Graph& g);                  // brute clique + independent partition
bool is_at_free(const Graph& g);
bool is_interval(const Graph& g);               // chordal and asteroidal-triple-free
bool is_p4_free(const Graph& g);                // cographs
bool is_strongly_chordal(const Graph& g);       // chordal and no induced 3-sun; valid for n <= 7

}  // namespace oracles
}  // namespace patternforge
