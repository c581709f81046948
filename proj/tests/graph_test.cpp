#include <random>

#include "cyclebench/atlas.hpp"
#include "cyclebench/graph.hpp"
#include "cyclebench/graph6.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cyc;

namespace {

const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
const Graph triangle(3, {{0, 1}, {1, 2}, {2, 0}});

}  // namespace

TEST_CASE("edge list construction") {
  CHECK(k4.is_regular(3));
  CHECK(k4.edge_count() == 6);
  CHECK(triangle.vertex_count() == 3);

  CHECK_THROWS_AS(Graph(2, {{0, 1}, {0, 1}}), graph_error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), graph_error);  // same edge, reversed
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), graph_error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), graph_error);

  // handshake identity
  for (const Graph& g : {k4, triangle, petersen().graph}) {
    int total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("graph6 hand-derived encodings") {
  // n=4 is 'C' (4+63); six upper-triangle 1-bits pack to 111111 -> '~'
  CHECK(encode_graph6(k4) == "C~");
  Graph parsed = parse_graph6("C~");
  CHECK(parsed.vertex_count() == 4);
  CHECK(parsed.is_regular(3));

  // empty and one-vertex graphs
  CHECK(encode_graph6(Graph(0, {})) == "?");
  CHECK(encode_graph6(Graph(1, {})) == "@");
  CHECK(parse_graph6("?").vertex_count() == 0);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 30);
    Graph g = oracle::random_graph(n, 0.3, rng);
    Graph back = parse_graph6(encode_graph6(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  // canonical strings round trip the other way
  Graph p = petersen().graph;
  CHECK(encode_graph6(parse_graph6(encode_graph6(p))) == encode_graph6(p));
}

TEST_CASE("graph6 long form for n > 62") {
  Graph big = c60().graph;  // fits the short form
  CHECK(parse_graph6(encode_graph6(big)).edges() == big.edges());
  Graph approx(100, {{0, 99}, {4, 7}});
  std::string enc = encode_graph6(approx);
  CHECK(enc[0] == '~');
  CHECK(parse_graph6(enc).edges() == approx.edges());
}

TEST_CASE("graph6 malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
  CHECK_THROWS_AS(parse_graph6("C~~"), parse_error);     // trailing data
  CHECK_THROWS_AS(parse_graph6("C"), parse_error);       // truncated
  CHECK_THROWS_AS(parse_graph6("C\x1f"), parse_error);   // outside alphabet
  CHECK_THROWS_AS(parse_graph6("B~"), parse_error);      // nonzero padding bits

  try {
    parse_graph6("C~\x07");
  } catch (const parse_error& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("petersen round trip is the identity") {
  Graph p = petersen().graph;
  Graph back = parse_graph6(encode_graph6(p));
  CHECK(back.edges() == p.edges());
}

TEST_CASE("dot export") {
  std::string dot = to_dot(k4);
  CHECK(dot.find("graph g {") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '-') == 2 * 6);  // "--" per edge

  std::string dot3 = to_dot(triangle, {"x", "y", "z"});
  CHECK(dot3.find("label=\"x\"") != std::string::npos);
  CHECK(std::count(dot3.begin(), dot3.end(), '-') == 2 * 3);

  // 10 nodes, 15 edges
  std::string dotp = to_dot(petersen().graph);
  CHECK(std::count(dotp.begin(), dotp.end(), '-') == 2 * 15);
}

TEST_CASE("edge list text format") {
  std::string text = encode_edge_list(k4);
  CHECK(text.substr(0, 4) == "4 6\n");
  Graph back = parse_edge_list(text);
  CHECK(back.edges() == k4.edges());

  CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n9 9\n"), parse_error);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0\n"), parse_error);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), parse_error);  // out of range
}

TEST_CASE("bfs distances") {
  const Gadget& gadget = h7();
  auto from_u = bfs_distances(gadget.graph, gadget.attach_u);
  CHECK(from_u[gadget.attach_v] == 2);
  CHECK(from_u[gadget.attach_w] == 2);
  auto from_v = bfs_distances(gadget.graph, gadget.attach_v);
  CHECK(from_v[gadget.attach_w] == 3);

  const Gadget& big = h15();
  auto from_v15 = bfs_distances(big.graph, big.attach_v);
  CHECK(from_v15[big.attach_w] == 5);

  Graph both(3, {{0, 1}});
  auto dist = bfs_distances(both, 0);
  CHECK(dist[1] == 1);
  CHECK(dist[2] == -1);  // unreachable
}
