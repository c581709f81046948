#include "cyclebench/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "cyclebench/graph6.hpp"
#include "cyclebench/structure.hpp"

namespace cyc {

namespace {

// Backtracking edge-completion. Vertices are numbered in first-touch order
// (a fresh vertex may only enter as the smallest unused index), edges at the
// current deficient vertex are added with increasing partners, and partners
// that are indistinguishable in the partial graph (identical neighbor lists)
// are only tried once. All three rules keep at least one labeling per
// isomorphism class reachable; duplicates are removed by canonical form.
class CubicGenerator {
 public:
  explicit CubicGenerator(int n) : n_(n), deg_(n, 0), adj_(n) {}

  std::vector<Graph> run() {
    extend(0, 0, 1);
    std::vector<Graph> out;
    out.reserve(seen_.size());
    for (const std::string& form : seen_) out.push_back(parse_graph6(form));
    return out;
  }

 private:
  bool adjacent(int a, int b) const {
    return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end();
  }

  // is the component of v fully 3-regular but smaller than the whole graph?
  bool closed_component(int v) const {
    std::vector<int> stack{v}, comp;
    std::vector<char> mark(n_, 0);
    mark[v] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      if (deg_[x] < 3) return false;
      for (int y : adj_[x])
        if (!mark[y]) {
          mark[y] = 1;
          stack.push_back(y);
        }
    }
    return static_cast<int>(comp.size()) < n_;
  }

  void emit() {
    std::vector<Edge> edges;
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[v])
        if (v < w) edges.emplace_back(v, w);
    Graph g(n_, edges);
    if (!is_connected(g)) return;
    seen_.insert(canonical_form(g));
  }

  // u: first vertex with degree < 3; min_partner: lower bound for u's next
  // partner; touched: number of vertices already in the graph.
  void extend(int u, int min_partner, int touched) {
    while (u < n_ && deg_[u] == 3) {
      if (closed_component(u)) return;
      ++u;
      min_partner = 0;
    }
    if (u == n_) {
      emit();
      return;
    }
    if (u >= touched) return;  // untouched deficient vertex can never fill

    std::vector<std::vector<int>> tried;
    const int limit = std::min(n_, touched + 1);  // at most one fresh vertex
    for (int v = std::max(u + 1, min_partner); v < limit; ++v) {
      if (deg_[v] == 3 || adjacent(u, v)) continue;
      std::vector<int> signature = adj_[v];
      std::sort(signature.begin(), signature.end());
      if (std::find(tried.begin(), tried.end(), signature) != tried.end()) continue;
      tried.push_back(signature);

      adj_[u].push_back(v);
      adj_[v].push_back(u);
      ++deg_[u];
      ++deg_[v];
      extend(u, v + 1, std::max(touched, v + 1));
      --deg_[u];
      --deg_[v];
      adj_[u].pop_back();
      adj_[v].pop_back();
    }
  }

  int n_;
  std::vector<int> deg_;
  std::vector<std::vector<int>> adj_;
  std::set<std::string> seen_;
};

}  // namespace

std::vector<Graph> generate_cubic_graphs(int n) {
  if (n % 2 != 0) throw std::invalid_argument("no cubic graph on an odd number of vertices");
  if (n < 4 || n > kMaxGenerationOrder)
    throw std::invalid_argument("generation order must be even and in [4, " +
                                std::to_string(kMaxGenerationOrder) + "]");
  return CubicGenerator(n).run();
}

std::string SearchReport::to_text() const {
  std::ostringstream out;
  out << "pow2-cycle-free search: k=" << exponent << ", orders 4.." << nmax << "\n";
  for (const auto& stats : orders) {
    out << "n=" << stats.n << ": " << stats.num_graphs << " connected cubic graphs, "
        << stats.num_passing << " pass\n";
    for (const auto& g6 : stats.witnesses_g6) out << "  " << g6 << "\n";
  }
  if (min_order)
    out << "f(" << exponent << ") = " << *min_order << ", "
        << orders.back().num_passing << " witnesses\n";
  else
    out << "no witness up to n=" << nmax << "\n";
  return out.str();
}

SearchReport find_min_pow2_free(int exponent, int nmax, const EngineOptions& opts) {
  if (exponent < 2) throw std::invalid_argument("exponent bound below 2");
  if (nmax > kMaxGenerationOrder)
    throw std::invalid_argument("order cap above generation limit");
  if (nmax < 4) throw std::invalid_argument("order cap below 4");

  SearchReport report;
  report.exponent = exponent;
  report.nmax = nmax;
  for (int n = 4; n <= nmax; n += 2) {
    OrderStats stats;
    stats.n = n;
    for (const Graph& g : generate_cubic_graphs(n)) {
      ++stats.num_graphs;
      if (is_pow2_cycle_free(g, exponent, opts).free) {
        ++stats.num_passing;
        stats.witnesses_g6.push_back(encode_graph6(g));
      }
    }
    std::sort(stats.witnesses_g6.begin(), stats.witnesses_g6.end());
    report.orders.push_back(std::move(stats));
    if (report.orders.back().num_passing > 0) {
      report.min_order = n;
      break;
    }
  }
  return report;
}

}  // namespace cyc
