#include "cyclebench/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

namespace cyc {

namespace {

std::string edge_name(int a, int b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), m_(0), adj_(n) {
  if (n < 0) throw graph_error("negative vertex count");
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw graph_error("endpoint out of range in edge " + edge_name(a, b));
    if (a == b) throw graph_error("self-loop at edge " + edge_name(a, b));
  }
  for (const auto& [a, b] : edges) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    auto& row = adj_[v];
    std::sort(row.begin(), row.end());
    auto dup = std::adjacent_find(row.begin(), row.end());
    if (dup != row.end()) throw graph_error("duplicate edge " + edge_name(v, *dup));
  }
  m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return false;
  const auto& row = adj_[a];
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int v = 0; v < n_; ++v)
    for (int w : adj_[v])
      if (v < w) out.emplace_back(v, w);
  return out;
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> seq(n_);
  for (int v = 0; v < n_; ++v) seq[v] = degree(v);
  std::sort(seq.begin(), seq.end());
  return seq;
}

Graph graph_from_edge_list(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n) throw std::invalid_argument("bfs source out of range");
  std::vector<int> dist(n, -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error(std::string("expected ") + what, start);
    long v = 0;
    try {
      v = std::stol(text.substr(start, pos - start));
    } catch (const std::exception&) {
      throw parse_error(std::string("bad integer for ") + what, start);
    }
    return v;
  };
  long n = read_int("vertex count");
  long m = read_int("edge count");
  if (n < 0 || m < 0) throw parse_error("negative header value", 0);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long i = 0; i < m; ++i) {
    long a = read_int("edge endpoint");
    long b = read_int("edge endpoint");
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  skip_ws();
  if (pos != text.size()) throw parse_error("trailing data after edge list", pos);
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const graph_error& e) {
    throw parse_error(e.what(), 0);
  }
}

}  // namespace cyc
