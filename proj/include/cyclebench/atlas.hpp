#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclebench/cycles.hpp"
#include "cyclebench/embedding.hpp"
#include "cyclebench/graph.hpp"
#include "cyclebench/inflate.hpp"

namespace cyc {

struct ClaimResult {
  bool pass = false;
  std::string detail;
};

struct Claim {
  std::string name;
  std::function<ClaimResult(const EngineOptions&)> run;
};

// A construction with its published labeling, embedding where one is claimed,
// edge classes, and a machine-checkable claim list.
struct NamedGraph {
  std::string name;
  Graph graph;
  std::optional<RotationSystem> rotation;
  std::map<Edge, std::string> edge_classes;
  std::vector<Claim> claims;
  std::optional<InflationPlan> plan;  // for constructions built by inflation

  // The unique neighbor of x over an edge of the given class.
  int class_neighbor(int x, const std::string& cls) const;
};

NamedGraph h7_named();
NamedGraph h15_named();
NamedGraph petersen();
NamedGraph icosahedron();
NamedGraph tetrahedron();
NamedGraph c60();
NamedGraph tutte_coxeter();
NamedGraph g12();
NamedGraph g12_figure();  // the drawing's labeling; base of the g78 plan
NamedGraph g420();
NamedGraph g78();
NamedGraph g450();
NamedGraph markstrom24();

// Vertex truncation: one vertex per dart of g, each original vertex becomes a
// cycle in rotation order, each original edge joins its two darts. Requires a
// rotation; the result carries the induced rotation and single/double edge
// classes (double = images of original edges). Labeling: the dart (v, k-th
// neighbor in the rotation at v) gets index sum(deg(u) for u < v) + k.
NamedGraph truncate(const NamedGraph& g, const std::string& name);

const std::vector<std::string>& atlas_names();
NamedGraph build_named(const std::string& name);  // throws std::out_of_range

// Exhaustive search over the 3^11 u-edge assignments of the g78 construction:
// returns every assignment whose inflation has no 4-, 8- or 16-cycle, each as
// a per-vertex u-neighbor vector (-1 for the unreplaced vertex), in
// lexicographic order.
std::vector<std::vector<int>> g78_search(const EngineOptions& opts = {});
std::vector<int> g78_shipped_assignment();

}  // namespace cyc
