#pragma once

#include <string>
#include <vector>

#include "cyclebench/cycles.hpp"
#include "cyclebench/graph.hpp"

namespace cyc {

bool is_connected(const Graph& g);  // n == 0 counts as connected

// True iff no vertex cut of size < k exists. Decided via vertex-disjoint paths
// (vertex-split max-flow) between a fixed vertex and all non-neighbors, plus
// between all non-adjacent pairs of that vertex's neighbors.
bool vertex_connectivity_at_least(const Graph& g, int k);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> coloring;  // 0/1 per vertex when bipartite
  Cycle odd_cycle;            // an odd cycle when not bipartite
};
BipartiteCheck is_bipartite(const Graph& g);

// Labeling-invariant byte representation: equal strings iff the graphs are
// isomorphic. Partition refinement plus backtracking over labelings; intended
// for n <= 30 or so (the generator sizes), correctness over speed. The string
// is the graph6 encoding of the canonically relabeled graph.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace cyc
