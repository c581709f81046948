#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyc {

using Vertex = int;
using Edge = std::pair<int, int>;  // canonical form: first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Construction-time violation of the simple-graph invariants.
struct graph_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text-format errors; offset is the byte position of the problem.
struct parse_error : std::runtime_error {
  std::size_t offset;
  parse_error(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

// Immutable simple undirected graph on vertices 0..n-1.
// Neighbor lists are kept sorted ascending; all queries are const and thread-safe.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;  // ascending (min,max) pairs
  bool is_regular(int d) const;
  std::vector<int> degree_sequence() const;  // ascending

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

Graph graph_from_edge_list(int n, const std::vector<Edge>& edges);

// Unweighted shortest-path distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

// Edge-list text format: first line "n m", then m lines "a b" (0-based).
std::string encode_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

}  // namespace cyc
