// Longer-running checks: the larger generation orders and the census/projection
// facts about g420 that need deep cycle enumeration.

#include <functional>
#include <map>
#include <set>

#include "cyclebench/atlas.hpp"
#include "cyclebench/inflate.hpp"
#include "cyclebench/search.hpp"
#include "doctest.h"

using namespace cyc;

TEST_CASE("generation counts at the cap follow the published census") {
  CHECK(generate_cubic_graphs(12).size() == 85);
  CHECK(generate_cubic_graphs(14).size() == 509);
}

TEST_CASE("no graph below order 24 passes k=3 up to the generation cap") {
  SearchReport report = find_min_pow2_free(3, 14);
  CHECK_FALSE(report.min_order.has_value());
  for (const auto& stats : report.orders) CHECK(stats.num_passing == 0);
}

TEST_CASE("pruning agreement at full scale") {
  EngineOptions pruned, unpruned;
  unpruned.distance_pruning = false;
  Graph big = g420().graph;
  CHECK(count_cycles_by_length(big, 17, pruned) == count_cycles_by_length(big, 17, unpruned));
  Graph bigger = g450().graph;
  CHECK(count_cycles_by_length(bigger, 23, pruned) ==
        count_cycles_by_length(bigger, 23, unpruned));
}

TEST_CASE("the 16-cycle certificates hold on the unpruned route too") {
  EngineOptions unpruned;
  unpruned.distance_pruning = false;
  CHECK_FALSE(has_cycle_of_length(g78().graph, 16, unpruned));
  CHECK_FALSE(has_cycle_of_length(g420().graph, 16, unpruned));
  CHECK_FALSE(has_cycle_of_length(markstrom24().graph, 8, unpruned));
}

TEST_CASE("g450 spectrum: per-copy cycles plus the crossing-cycle convolution") {
  // Cycles of the inflation up to length 23: 30 gadget copies contribute their
  // own spectra; the only other cycles cross exactly two h7 halves of one
  // gadget, with length (v-w path) + (v-w path) + 3. So the counts at 9..15
  // are 30 times the self-convolution of the h7 v-w path-length census, and
  // everything in [16..23] is zero (base 8-cycles lift to length >= 32).
  const Gadget& gadget = h7();
  std::map<int, std::uint64_t> vw_paths;  // length -> count, by brute force
  {
    const Graph& h = gadget.graph;
    std::vector<char> used(h.vertex_count(), 0);
    std::function<void(int, int)> dfs = [&](int v, int len) {
      if (v == gadget.attach_w) {
        ++vw_paths[len];
        return;
      }
      used[v] = 1;
      for (int w : h.neighbors(v))
        if (!used[w]) dfs(w, len + 1);
      used[v] = 0;
    };
    dfs(gadget.attach_v, 0);
  }
  CHECK(vw_paths == std::map<int, std::uint64_t>{{3, 1}, {4, 3}, {5, 3}, {6, 1}});

  CycleSpectrum spectrum = count_cycles_by_length(g450().graph, 23);
  CycleSpectrum h15_spectrum = count_cycles_by_length(h15().graph, 15);
  for (int len = 3; len <= 15; ++len)
    CHECK(spectrum.count(len) == 30 * h15_spectrum.count(len));
  for (int len = 9; len <= 15; ++len) {
    std::uint64_t crossing = 0;
    for (const auto& [la, ca] : vw_paths)
      for (const auto& [lb, cb] : vw_paths)
        if (la + lb + 3 == len) crossing += ca * cb;
    CHECK(h15_spectrum.count(len) == crossing);  // all h15 cycles there cross
  }
  for (int len = 16; len <= 23; ++len) CHECK(spectrum.count(len) == 0);
}

TEST_CASE("an 18-cycle of g420 projects to a hexagonal face cycle") {
  NamedGraph g = g420();
  Inflation inflation = inflate(*g.plan);
  auto cycle = find_cycle_of_length(g.graph, 18);
  REQUIRE(cycle.has_value());
  ProjectedCycle projected = project_cycle(*cycle, inflation);
  CHECK(projected.simple_cycle);
  CHECK(projected.walk.size() == 6);
  CHECK(projected.copies.size() == 6);
  CHECK(projected.joining_edges == 6);
  CHECK(projected.internal_edges == 12);
}

TEST_CASE("every 20-cycle of g420 that projects to a pentagon uses 15 gadget edges") {
  // Any such cycle lives inside the five gadget copies over its pentagon, so
  // enumerate within those blocks, pentagon by pentagon.
  NamedGraph base = c60();
  NamedGraph g = g420();
  Inflation inflation = inflate(*g.plan);

  std::vector<std::vector<int>> pentagons;
  for (const auto& face : trace_faces(base.graph, *base.rotation)) {
    if (face.size() != 5) continue;
    std::vector<int> cycle;
    for (const auto& dart : face) cycle.push_back(dart.first);
    pentagons.push_back(cycle);
  }
  REQUIRE(pentagons.size() == 12);

  int found = 0;
  for (const auto& pent : pentagons) {
    std::set<int> block_set(pent.begin(), pent.end());
    // induced subgraph on the five blocks
    std::vector<int> to_sub(g.graph.vertex_count(), -1), to_full;
    for (int v = 0; v < g.graph.vertex_count(); ++v) {
      if (block_set.count(inflation.projection[v])) {
        to_sub[v] = static_cast<int>(to_full.size());
        to_full.push_back(v);
      }
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.graph.edges())
      if (to_sub[a] >= 0 && to_sub[b] >= 0) edges.push_back(make_edge(to_sub[a], to_sub[b]));
    Graph sub(static_cast<int>(to_full.size()), edges);
    CHECK(sub.vertex_count() == 35);

    enumerate_cycles(sub, 20, [&](const Cycle& c) {
      if (c.size() != 20) return true;
      Cycle full;
      for (int v : c) full.push_back(to_full[v]);
      ProjectedCycle projected = project_cycle(full, inflation);
      if (projected.simple_cycle && projected.walk.size() == 5) {
        ++found;
        CHECK(projected.copies.size() == 5);
        CHECK(projected.internal_edges == 15);
        CHECK(projected.joining_edges == 5);
      }
      return true;
    });
  }
  CHECK(found > 0);
}
