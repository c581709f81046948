#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cyclebench/graph.hpp"

namespace cyc {

// Engineering cap on cycle lengths; well beyond what the workbench needs (32)
// and low enough to stop accidental exponential blowups.
inline constexpr int kMaxCycleLength = 64;

// Exact counts of simple cycles per length, 3..lmax. Absent keys mean zero;
// here every length up to lmax is stored explicitly.
struct CycleSpectrum {
  int lmax = 0;
  std::vector<std::uint64_t> counts;  // indexed by length; size lmax+1

  std::uint64_t count(int length) const {
    return (length >= 0 && length < static_cast<int>(counts.size())) ? counts[length] : 0;
  }
  bool operator==(const CycleSpectrum&) const = default;
  std::string to_text() const;
};

// A simple cycle as its vertex sequence, closed implicitly. Canonical form:
// starts at its minimum vertex, and the second vertex is smaller than the last.
using Cycle = std::vector<Vertex>;

struct EngineOptions {
  int threads = 0;              // 0 = available hardware parallelism
  bool distance_pruning = true; // BFS-distance pruning; counts never depend on it
};

// Exact-length simple-cycle existence: true iff g has a cycle of exactly
// `length` edges. Canonical-root search; short-circuits on the first witness.
bool has_cycle_of_length(const Graph& g, int length, const EngineOptions& opts = {});

// As above but returns the witness cycle (deterministic: the canonically first
// one, independent of thread count).
std::optional<Cycle> find_cycle_of_length(const Graph& g, int length,
                                          const EngineOptions& opts = {});

// Exact counts for every length 3..lmax; deterministic across thread counts.
CycleSpectrum count_cycles_by_length(const Graph& g, int lmax, const EngineOptions& opts = {});

// Streams every simple cycle of length <= lmax exactly once, in canonical
// order (ascending root, then search order). Return false from the sink to
// stop. Runs single-threaded so the stream order is reproducible.
void enumerate_cycles(const Graph& g, int lmax, const std::function<bool(const Cycle&)>& sink);

// Length of a shortest cycle; nullopt for forests. Independent BFS route, not
// the canonical-root searcher (the two are cross-checked in the tests).
std::optional<int> girth(const Graph& g);

struct Pow2CycleCheck {
  bool free = true;
  int exponent = 0;  // smallest offending m when !free
  Cycle witness;     // a 2^exponent-cycle when !free
};

// True iff g has no cycle of length 2^m for any 2 <= m <= max_exponent
// (lengths 1 and 2 are impossible in simple graphs).
Pow2CycleCheck is_pow2_cycle_free(const Graph& g, int max_exponent,
                                  const EngineOptions& opts = {});

}  // namespace cyc
