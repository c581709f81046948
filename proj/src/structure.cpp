#include "cyclebench/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "cyclebench/graph6.hpp"

namespace cyc {

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

// Unit-capacity max-flow on the vertex-split digraph, stopping at `limit`
// augmentations. Node 2v = v_in, 2v+1 = v_out.
class DisjointPathCounter {
 public:
  explicit DisjointPathCounter(const Graph& g) : n_(g.vertex_count()) {
    head_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1);  // vertex capacity
    for (const auto& [a, b] : g.edges()) {
      add_arc(2 * a + 1, 2 * b);
      add_arc(2 * b + 1, 2 * a);
    }
  }

  // max number of internally vertex-disjoint s-t paths, capped at limit
  int count(int s, int t, int limit) {
    for (auto& arc : arcs_) arc.cap = arc.base_cap;
    // source and sink internal arcs must not constrain the flow
    arcs_[2 * s].cap = limit;
    arcs_[2 * t].cap = limit;
    int flow = 0;
    while (flow < limit && augment(2 * s + 1, 2 * t)) ++flow;
    return flow;
  }

 private:
  struct Arc {
    int to;
    int rev;
    int cap;
    int base_cap;
    int next;
  };

  void add_arc(int from, int to) {
    arcs_.push_back({to, static_cast<int>(arcs_.size()) + 1, 1, 1, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, static_cast<int>(arcs_.size()) - 1, 0, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  bool augment(int s, int t) {
    std::vector<int> via(2 * n_, -1);
    std::queue<int> q;
    q.push(s);
    via[s] = -2;
    while (!q.empty() && via[t] == -1) {
      int x = q.front();
      q.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
          via[arcs_[a].to] = a;
          q.push(arcs_[a].to);
        }
      }
    }
    if (via[t] == -1) return false;
    for (int x = t; x != s;) {
      int a = via[x];
      --arcs_[a].cap;
      ++arcs_[arcs_[a].rev].cap;
      x = arcs_[arcs_[a].rev].to;
    }
    return true;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("connectivity bound below 1");
  if (n <= k) throw std::invalid_argument("graph too small for connectivity bound");
  if (!is_connected(g)) return false;
  if (k == 1) return true;

  DisjointPathCounter counter(g);
  const int s = 0;
  for (int t = 1; t < n; ++t) {
    if (g.has_edge(s, t)) continue;
    if (counter.count(s, t, k) < k) return false;
  }
  const auto& nbrs = g.neighbors(s);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.has_edge(nbrs[i], nbrs[j])) continue;
      if (counter.count(nbrs[i], nbrs[j], k) < k) return false;
    }
  }
  return true;
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  BipartiteCheck result;
  result.coloring.assign(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);
  std::queue<int> q;
  for (int start = 0; start < n; ++start) {
    if (result.coloring[start] >= 0) continue;
    result.coloring[start] = 0;
    q.push(start);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (result.coloring[y] < 0) {
          result.coloring[y] = 1 - result.coloring[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          q.push(y);
        } else if (result.coloring[y] == result.coloring[x]) {
          // walk both BFS-tree paths up to their meeting point
          int a = x, b = y;
          std::vector<int> left{a}, right{b};
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          result.odd_cycle = std::move(left);
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin() + 1, right.rend());
          result.bipartite = false;
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  return result;
}

namespace {

// Equitable refinement: split color classes by the multiset of neighbor
// colors until stable. Colors are ranks 0..k-1, label-invariant.
void refine_colors(const Graph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  for (;;) {
    // signature = (current color, sorted neighbor colors)
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.degree(v) + 1);
      s.push_back(color[v]);
      for (int w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int rank = -1;
    const std::vector<int>* prev = nullptr;
    for (const auto& [s, v] : sorted) {
      if (!prev || s != *prev) {
        ++rank;
        prev = &s;
      }
      next[v] = rank;
    }
    bool changed = false;
    for (int v = 0; v < n; ++v)
      if (next[v] != color[v]) changed = true;
    color = std::move(next);
    if (!changed) return;
  }
}

void canonical_search(const Graph& g, std::vector<int> color, std::string& best) {
  const int n = g.vertex_count();
  refine_colors(g, color);

  // first smallest non-singleton color class
  int max_color = 0;
  for (int v = 0; v < n; ++v) max_color = std::max(max_color, color[v]);
  std::vector<int> size(max_color + 1, 0);
  for (int v = 0; v < n; ++v) ++size[color[v]];

  int target = -1;
  for (int c = 0; c <= max_color; ++c) {
    if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    if (target >= 0 && size[target] == 2) break;
  }

  if (target < 0) {
    // discrete: color is a permutation; relabel and keep the lexicographic min
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& [a, b] : g.edges()) edges.push_back(make_edge(color[a], color[b]));
    std::string candidate = encode_graph6(Graph(n, edges));
    if (best.empty() || candidate < best) best = candidate;
    return;
  }

  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    // individualize v ahead of its class mates
    std::vector<int> branched(n);
    for (int w = 0; w < n; ++w) branched[w] = 2 * color[w] + (w == v ? 0 : 1);
    canonical_search(g, std::move(branched), best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  std::string best;
  canonical_search(g, std::vector<int>(g.vertex_count(), 0), best);
  return best;
}

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace cyc
