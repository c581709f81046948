#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclebench/cycles.hpp"
#include "cyclebench/embedding.hpp"
#include "cyclebench/graph.hpp"

namespace cyc {

// Placeholders used in gadget rotations for the three external edges.
inline constexpr int kExternalU = -1;
inline constexpr int kExternalV = -2;
inline constexpr int kExternalW = -3;

// A small graph with three designated attachment vertices, used to replace a
// vertex of a cubic base graph. Attachment vertices have internal degree 2
// (identity gadget: a single vertex serving all three roles), every other
// vertex has degree 3, and the gadget contains no cycle of length a power of
// two; all of this is checked at construction.
struct Gadget {
  std::string name;
  Graph graph;
  int attach_u = 0;
  int attach_v = 0;
  int attach_w = 0;
  // Planar rotation with external-edge placeholders at the attachment
  // vertices; the external edges appear in the cyclic order (u, v, w) around
  // the drawing. Gadgets without an embedding on file carry none.
  std::optional<RotationSystem> rotation;

  bool is_identity() const { return graph.vertex_count() == 1; }
};

const Gadget& identity_gadget();
const Gadget& k3_gadget();
const Gadget& h7();
const Gadget& h15();
const Gadget* find_gadget(const std::string& name);  // nullptr when unknown

struct PlanEntry {
  const Gadget* gadget = nullptr;
  // The base edge {x, u_neighbor} receives attachment u. Of the two remaining
  // incident edges, the lexicographically smaller one receives v (fixed
  // convention; flipping it yields an isomorphic result).
  int u_neighbor = -1;
  bool swap_vw = false;  // override the v/w convention, for the symmetry tests
};

struct InflationPlan {
  Graph base;  // must be cubic
  std::optional<RotationSystem> base_rotation;
  std::vector<PlanEntry> entries;  // one per base vertex
};

struct Inflation {
  Graph graph;
  // Composed embedding, present when the base and every gadget carry one.
  std::optional<RotationSystem> rotation;
  std::vector<int> projection;    // inflated vertex -> base vertex
  std::vector<int> block_offset;  // base vertex -> first vertex of its copy
};

Inflation inflate(const InflationPlan& plan);

struct ProjectedCycle {
  std::vector<int> walk;  // image in the base, consecutive duplicates collapsed
  bool degenerate = false;    // cycle confined to one gadget copy
  bool simple_cycle = false;  // the image walk is a simple cycle
  std::vector<int> copies;    // base vertices whose copies the cycle visits
  int internal_edges = 0;     // cycle edges inside gadget copies
  int joining_edges = 0;      // cycle edges between copies
};

// Projects a cycle of the inflated graph onto the base. The cycle is replayed
// against the inflated adjacency first; invalid input throws.
ProjectedCycle project_cycle(const Cycle& cycle, const Inflation& inflation);

// Plan text format: one line "vertex gadget-name u-neighbor" per base vertex.
std::string encode_plan(const InflationPlan& plan);
InflationPlan parse_plan(const Graph& base, const std::string& text);

}  // namespace cyc
