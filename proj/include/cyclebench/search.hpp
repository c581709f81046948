#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclebench/cycles.hpp"
#include "cyclebench/graph.hpp"

namespace cyc {

// Largest order the generator accepts; enough for the f(2) reproduction with
// headroom, while the interesting larger orders (24+) are out of desk scale.
inline constexpr int kMaxGenerationOrder = 14;

// One representative per isomorphism class of connected cubic graphs on n
// vertices (n even, 4 <= n <= 14). Representatives carry their canonical
// labeling and are returned sorted by graph6 string. Backtracking
// edge-completion with canonical-form deduplication.
std::vector<Graph> generate_cubic_graphs(int n);

struct OrderStats {
  int n = 0;
  std::uint64_t num_graphs = 0;
  std::uint64_t num_passing = 0;
  std::vector<std::string> witnesses_g6;  // sorted graph6 strings
};

struct SearchReport {
  int exponent = 0;
  int nmax = 0;
  std::optional<int> min_order;  // first order with a passing graph
  std::vector<OrderStats> orders;
  std::string to_text() const;
};

// Scans n = 4, 6, ..., nmax for cubic graphs with no 2^m-cycle, m <= exponent;
// stops at the first order with a witness.
SearchReport find_min_pow2_free(int exponent, int nmax, const EngineOptions& opts = {});

}  // namespace cyc
