#include <map>
#include <set>

#include "cyclebench/atlas.hpp"
#include "cyclebench/cycles.hpp"
#include "cyclebench/search.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cyc;

namespace {

const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

bool spectrum_matches(const CycleSpectrum& got, const std::map<int, std::uint64_t>& expected) {
  for (int len = 3; len <= got.lmax; ++len) {
    auto it = expected.find(len);
    std::uint64_t want = it == expected.end() ? 0 : it->second;
    if (got.count(len) != want) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, const Cycle& c, int length) {
  if (static_cast<int>(c.size()) != length) return false;
  std::set<int> distinct(c.begin(), c.end());
  if (static_cast<int>(distinct.size()) != length) return false;
  for (int i = 0; i < length; ++i)
    if (!g.has_edge(c[i], c[(i + 1) % length])) return false;
  return true;
}

}  // namespace

TEST_CASE("h7 spectrum against the cycle-space oracle") {
  const Graph& g = h7().graph;
  auto census = oracle::cycle_space_census(g);
  CHECK(census == std::map<int, std::uint64_t>{{3, 2}, {5, 1}, {6, 2}, {7, 1}});

  CycleSpectrum spectrum = count_cycles_by_length(g, 7);
  CHECK(spectrum_matches(spectrum, {{3, 2}, {5, 1}, {6, 2}, {7, 1}}));
}

TEST_CASE("full petersen spectrum against the cycle-space oracle") {
  Graph p = petersen().graph;
  auto census = oracle::cycle_space_census(p);  // cyclomatic number 6
  CycleSpectrum spectrum = count_cycles_by_length(p, 10);
  std::uint64_t total = 0;
  for (int len = 3; len <= 10; ++len) {
    auto it = census.find(len);
    CHECK(spectrum.count(len) == (it == census.end() ? 0 : it->second));
    total += spectrum.count(len);
  }
  CHECK(total == 12 + 10 + 15 + 20);  // 5-, 6-, 8- and 9-cycles only
}

TEST_CASE("existence basics") {
  CHECK(has_cycle_of_length(k4, 3));
  CHECK(has_cycle_of_length(k4, 4));
  CHECK_FALSE(has_cycle_of_length(k4, 5));  // longer than the graph
  CHECK_FALSE(has_cycle_of_length(petersen().graph, 10));  // hypohamiltonian
  CHECK_THROWS_AS(has_cycle_of_length(k4, 2), std::invalid_argument);
  CHECK_THROWS_AS(has_cycle_of_length(k4, kMaxCycleLength + 1), std::invalid_argument);
  CHECK_THROWS_AS(count_cycles_by_length(k4, 2), std::invalid_argument);
}

TEST_CASE("find_cycle returns the canonically first witness") {
  for (int len : {5, 6}) {
    auto witness = find_cycle_of_length(petersen().graph, len);
    REQUIRE(witness.has_value());
    Cycle first;
    enumerate_cycles(petersen().graph, len, [&](const Cycle& c) {
      if (static_cast<int>(c.size()) != len) return true;
      first = c;
      return false;
    });
    CHECK(*witness == first);
  }
}

TEST_CASE("witnesses replay against the adjacency") {
  for (int len : {3, 4}) {
    auto witness = find_cycle_of_length(k4, len);
    REQUIRE(witness.has_value());
    CHECK(is_valid_cycle(k4, *witness, len));
  }
  Graph p = petersen().graph;
  auto five = find_cycle_of_length(p, 5);
  REQUIRE(five.has_value());
  CHECK(is_valid_cycle(p, *five, 5));
  CHECK_FALSE(find_cycle_of_length(p, 3).has_value());
  CHECK_FALSE(find_cycle_of_length(p, 4).has_value());
}

TEST_CASE("counts match the naive oracle on all small cubic graphs") {
  for (int n : {4, 6, 8, 10}) {
    for (const Graph& g : generate_cubic_graphs(n)) {
      CycleSpectrum fast = count_cycles_by_length(g, 10);
      CycleSpectrum naive = oracle::naive_cycle_spectrum(g, 10);
      CHECK(fast.counts == naive.counts);
    }
  }
}

TEST_CASE("counts match the naive oracle on assorted non-regular graphs") {
  std::mt19937 rng(99);
  int tested = 0;
  while (tested < 25) {
    int n = 5 + static_cast<int>(rng() % 5);
    Graph g = oracle::random_graph(n, 0.4, rng);
    ++tested;
    CycleSpectrum fast = count_cycles_by_length(g, 9);
    CycleSpectrum naive = oracle::naive_cycle_spectrum(g, 9);
    CHECK(fast.counts == naive.counts);
  }
}

TEST_CASE("degenerate graphs") {
  Graph empty(0, {});
  CHECK(count_cycles_by_length(empty, 5).count(3) == 0);
  CHECK_FALSE(has_cycle_of_length(empty, 3));
  CHECK(count_cycles_by_length(Graph(3, {}), 6).count(3) == 0);
}

TEST_CASE("girth") {
  CHECK(girth(petersen().graph) == 5);
  CHECK(girth(tutte_coxeter().graph) == 8);
  CHECK(girth(h7().graph) == 3);
  CHECK(girth(k4) == 3);
  CHECK_FALSE(girth(Graph(5, {{0, 1}, {1, 2}, {3, 4}})).has_value());  // forest
  CHECK_FALSE(girth(Graph(0, {})).has_value());

  // monotone consistency: girth = min { L : has_cycle_of_length }
  for (const Graph& g : {petersen().graph, h7().graph, tutte_coxeter().graph}) {
    int expected = -1;
    for (int len = 3; len <= g.vertex_count(); ++len)
      if (has_cycle_of_length(g, len)) {
        expected = len;
        break;
      }
    CHECK(girth(g) == expected);
  }
}

TEST_CASE("power-of-two cycle checks") {
  CHECK(is_pow2_cycle_free(petersen().graph, 2).free);

  auto tc = is_pow2_cycle_free(tutte_coxeter().graph, 3);
  CHECK_FALSE(tc.free);
  CHECK(tc.exponent == 3);
  CHECK(is_valid_cycle(tutte_coxeter().graph, tc.witness, 8));

  auto k4check = is_pow2_cycle_free(k4, 2);
  CHECK_FALSE(k4check.free);
  CHECK(k4check.exponent == 2);
  CHECK(is_valid_cycle(k4, k4check.witness, 4));

  CHECK_THROWS_AS(is_pow2_cycle_free(k4, 1), std::invalid_argument);
  CHECK_THROWS_AS(is_pow2_cycle_free(k4, 7), std::invalid_argument);  // 128 above cap
}

TEST_CASE("spectrum is deterministic across thread counts") {
  Graph bucky = c60().graph;
  EngineOptions one;
  one.threads = 1;
  EngineOptions many;
  many.threads = 4;
  CHECK(count_cycles_by_length(bucky, 10, one) == count_cycles_by_length(bucky, 10, many));

  Graph p = petersen().graph;
  CHECK(count_cycles_by_length(p, 9, one) == count_cycles_by_length(p, 9, many));
}

TEST_CASE("witnesses are deterministic across thread counts") {
  Graph bucky = c60().graph;
  EngineOptions one;
  one.threads = 1;
  EngineOptions many;
  many.threads = 4;
  for (int len : {5, 6, 9, 10}) {
    auto a = find_cycle_of_length(bucky, len, one);
    auto b = find_cycle_of_length(bucky, len, many);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
  }
}

TEST_CASE("pruning changes runtime, never counts") {
  EngineOptions pruned;
  EngineOptions unpruned;
  unpruned.distance_pruning = false;
  for (const Graph& g :
       {petersen().graph, g12().graph, tutte_coxeter().graph, h15().graph, c60().graph}) {
    CHECK(count_cycles_by_length(g, 12, pruned) == count_cycles_by_length(g, 12, unpruned));
  }
}

TEST_CASE("enumerate mode streams each cycle once, in canonical order") {
  Graph p = petersen().graph;
  std::vector<Cycle> cycles;
  enumerate_cycles(p, 6, [&](const Cycle& c) {
    cycles.push_back(c);
    return true;
  });
  CHECK(cycles.size() == 12 + 10);
  std::set<Cycle> distinct(cycles.begin(), cycles.end());
  CHECK(distinct.size() == cycles.size());
  for (const Cycle& c : cycles) {
    CHECK(is_valid_cycle(p, c, static_cast<int>(c.size())));
    CHECK(*std::min_element(c.begin(), c.end()) == c.front());  // canonical root
    CHECK(c[1] < c.back());                                     // canonical direction
  }
  int roots_seen_max = -1;
  for (const Cycle& c : cycles) {
    CHECK(c.front() >= roots_seen_max - 0);  // ascending roots
    roots_seen_max = std::max(roots_seen_max, c.front());
  }

  // early stop
  int seen = 0;
  enumerate_cycles(p, 6, [&](const Cycle&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("bipartite shortcut answers odd queries without search") {
  Graph tc = tutte_coxeter().graph;
  for (int len : {9, 11, 15}) CHECK_FALSE(has_cycle_of_length(tc, len));
  CHECK(has_cycle_of_length(tc, 8));
}
