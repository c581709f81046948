#include "cyclebench/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "cyclebench/structure.hpp"

namespace cyc {

std::string CycleSpectrum::to_text() const {
  std::ostringstream out;
  for (int len = 3; len <= lmax; ++len) out << len << ' ' << counts[len] << '\n';
  return out.str();
}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

struct FlatGraph {
  int n = 0;
  std::vector<std::int32_t> off;
  std::vector<std::int32_t> nbr;

  explicit FlatGraph(const Graph& g) : n(g.vertex_count()), off(n + 1, 0) {
    for (int v = 0; v < n; ++v) off[v + 1] = off[v] + g.degree(v);
    nbr.resize(off[n]);
    int k = 0;
    for (int v = 0; v < n; ++v)
      for (int w : g.neighbors(v)) nbr[k++] = w;
  }
};

constexpr std::uint8_t kUnreachable = 255;

// Canonical-root searcher: every simple cycle is discovered exactly once, from
// its minimum-index vertex, walking only through vertices of larger index; the
// traversal direction is fixed by requiring the second vertex to be smaller
// than the last. Reused across roots; one instance per thread.
struct RootSearcher {
  const FlatGraph& fg;
  int lmax;
  bool prune;
  int root = 0;
  std::vector<std::uint8_t> dist;      // BFS distance to root within {v >= root}
  std::vector<std::uint64_t> visited;  // bitset
  std::vector<char> root_adj;
  std::vector<std::int32_t> path;
  std::vector<std::int32_t> bfs_queue;
  std::uint32_t tick = 0;

  RootSearcher(const FlatGraph& fg_, int lmax_, bool prune_)
      : fg(fg_),
        lmax(lmax_),
        prune(prune_),
        dist(fg_.n, kUnreachable),
        visited((fg_.n + 63) / 64, 0),
        root_adj(fg_.n, 0),
        path(lmax_ + 1, 0),
        bfs_queue(fg_.n, 0) {}

  bool test_visited(int v) const { return (visited[v >> 6] >> (v & 63)) & 1; }
  void set_visited(int v) { visited[v >> 6] |= std::uint64_t(1) << (v & 63); }
  void clear_visited(int v) { visited[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

  void prepare(int r) {
    root = r;
    if (prune) {
      std::fill(dist.begin() + r, dist.end(), kUnreachable);
      int head = 0, tail = 0;
      dist[r] = 0;
      bfs_queue[tail++] = r;
      while (head < tail) {
        int x = bfs_queue[head++];
        std::uint8_t d = dist[x];
        if (d >= lmax) continue;  // deeper levels can never matter
        for (std::int32_t i = fg.off[x]; i < fg.off[x + 1]; ++i) {
          int y = fg.nbr[i];
          if (y >= r && dist[y] == kUnreachable) {
            dist[y] = d + 1;
            bfs_queue[tail++] = y;
          }
        }
      }
    }
    for (std::int32_t i = fg.off[r]; i < fg.off[r + 1]; ++i)
      if (fg.nbr[i] > r) root_adj[fg.nbr[i]] = 1;
    set_visited(r);
    path[0] = r;
  }

  void finish() {
    for (std::int32_t i = fg.off[root]; i < fg.off[root + 1]; ++i) root_adj[fg.nbr[i]] = 0;
    clear_visited(root);
  }

  // Sink contract: on_cycle(length, path) -> keep searching?; keep_going() is
  // polled periodically so parallel existence queries can stop early.
  template <class Sink>
  bool run(Sink& sink) {
    bool ok = true;
    for (std::int32_t i = fg.off[root]; i < fg.off[root + 1]; ++i) {
      int y = fg.nbr[i];
      if (y <= root) continue;
      if (prune && dist[y] + 1 > lmax) continue;
      set_visited(y);
      path[1] = y;
      ok = extend(y, 1, sink);
      clear_visited(y);
      if (!ok) break;
    }
    finish();
    return ok;
  }

  template <class Sink>
  bool extend(int x, int depth, Sink& sink) {
    if ((++tick & 0x3ff) == 0 && !sink.keep_going()) return false;
    if (depth >= 2 && root_adj[x] && path[1] < x) {
      if (!sink.on_cycle(depth + 1, path.data())) return false;
    }
    if (depth + 2 > lmax) return true;
    const int budget = lmax - depth - 1;  // distance allowance for a child
    for (std::int32_t i = fg.off[x]; i < fg.off[x + 1]; ++i) {
      int y = fg.nbr[i];
      if (y <= root || test_visited(y)) continue;
      if (prune && dist[y] > budget) continue;
      set_visited(y);
      path[depth + 1] = y;
      bool go = extend(y, depth + 1, sink);
      clear_visited(y);
      if (!go) return false;
    }
    return true;
  }
};

struct CountSink {
  std::vector<std::uint64_t>& counts;
  bool on_cycle(int length, const std::int32_t*) {
    ++counts[length];
    return true;
  }
  bool keep_going() const { return true; }
};

struct ExistSink {
  int target;
  std::atomic<bool>* found;
  bool on_cycle(int length, const std::int32_t*) {
    if (length != target) return true;
    found->store(true, std::memory_order_relaxed);
    return false;
  }
  bool keep_going() const { return !found->load(std::memory_order_relaxed); }
};

struct WitnessSink {
  int target;
  int my_root;
  std::atomic<int>* best_root;
  Cycle local;
  bool on_cycle(int length, const std::int32_t* path) {
    if (length != target) return true;
    local.assign(path, path + length);
    return false;
  }
  bool keep_going() const {
    // keep searching while this root could still provide the canonical witness
    return my_root < best_root->load(std::memory_order_relaxed);
  }
};

struct StreamSink {
  const std::function<bool(const Cycle&)>& user;
  Cycle buf;
  bool stopped = false;
  bool on_cycle(int length, const std::int32_t* path) {
    buf.assign(path, path + length);
    if (!user(buf)) {
      stopped = true;
      return false;
    }
    return true;
  }
  bool keep_going() const { return true; }
};

void check_length_arg(int length, int minimum) {
  if (length < minimum)
    throw std::invalid_argument("cycle length below " + std::to_string(minimum));
  if (length > kMaxCycleLength)
    throw std::invalid_argument("cycle length above cap " + std::to_string(kMaxCycleLength));
}

// Runs fn(thread_index) on `threads` workers (inline when threads == 1).
void run_workers(int threads, const std::function<void(int)>& fn) {
  if (threads <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(fn, t);
  for (auto& th : pool) th.join();
}

}  // namespace

CycleSpectrum count_cycles_by_length(const Graph& g, int lmax, const EngineOptions& opts) {
  check_length_arg(lmax, 3);
  const FlatGraph fg(g);
  const int n = fg.n;
  const int threads = std::min(resolve_threads(opts.threads), std::max(n, 1));

  std::vector<std::vector<std::uint64_t>> partial(threads,
                                                  std::vector<std::uint64_t>(lmax + 1, 0));
  std::atomic<int> next_root{0};
  run_workers(threads, [&](int t) {
    RootSearcher searcher(fg, lmax, opts.distance_pruning);
    CountSink sink{partial[t]};
    for (;;) {
      int r = next_root.fetch_add(1, std::memory_order_relaxed);
      if (r >= n) break;
      searcher.prepare(r);
      searcher.run(sink);
    }
  });

  CycleSpectrum spectrum;
  spectrum.lmax = lmax;
  spectrum.counts.assign(lmax + 1, 0);
  for (const auto& part : partial)
    for (int len = 0; len <= lmax; ++len) spectrum.counts[len] += part[len];
  return spectrum;
}

bool has_cycle_of_length(const Graph& g, int length, const EngineOptions& opts) {
  check_length_arg(length, 3);
  const int n = g.vertex_count();
  if (length > n) return false;
  if (length % 2 == 1 && is_bipartite(g).bipartite) return false;  // free and exact

  const FlatGraph fg(g);
  const int threads = std::min(resolve_threads(opts.threads), std::max(n, 1));
  std::atomic<bool> found{false};
  std::atomic<int> next_root{0};
  run_workers(threads, [&](int) {
    RootSearcher searcher(fg, length, opts.distance_pruning);
    ExistSink sink{length, &found};
    while (!found.load(std::memory_order_relaxed)) {
      int r = next_root.fetch_add(1, std::memory_order_relaxed);
      if (r >= n) break;
      searcher.prepare(r);
      searcher.run(sink);
    }
  });
  return found.load();
}

std::optional<Cycle> find_cycle_of_length(const Graph& g, int length, const EngineOptions& opts) {
  check_length_arg(length, 3);
  const int n = g.vertex_count();
  if (length > n) return std::nullopt;
  if (length % 2 == 1 && is_bipartite(g).bipartite) return std::nullopt;

  const FlatGraph fg(g);
  const int threads = std::min(resolve_threads(opts.threads), std::max(n, 1));

  // The witness must not depend on thread count: each root's search is
  // deterministic, so keep the witness of the smallest witness-bearing root.
  // Roots above the current best are cancelled; roots below run to completion.
  std::atomic<int> best_root{std::numeric_limits<int>::max()};
  std::mutex mtx;
  Cycle best;
  std::atomic<int> next_root{0};
  run_workers(threads, [&](int) {
    RootSearcher searcher(fg, length, opts.distance_pruning);
    for (;;) {
      int r = next_root.fetch_add(1, std::memory_order_relaxed);
      if (r >= n || r > best_root.load(std::memory_order_relaxed)) break;
      WitnessSink sink{length, r, &best_root, {}};
      searcher.prepare(r);
      searcher.run(sink);
      if (!sink.local.empty()) {
        std::lock_guard<std::mutex> lock(mtx);
        if (r < best_root.load()) {
          best_root.store(r);
          best = std::move(sink.local);
        }
      }
    }
  });
  if (best.empty()) return std::nullopt;
  return best;
}

void enumerate_cycles(const Graph& g, int lmax, const std::function<bool(const Cycle&)>& sink) {
  check_length_arg(lmax, 3);
  const FlatGraph fg(g);
  RootSearcher searcher(fg, lmax, true);
  StreamSink stream{sink, {}, false};
  for (int r = 0; r < fg.n && !stream.stopped; ++r) {
    searcher.prepare(r);
    searcher.run(stream);
  }
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n), queue(n);
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    dist[r] = 0;
    parent[r] = -1;
    queue[tail++] = r;
    while (head < tail) {
      int x = queue[head++];
      if (2 * dist[x] >= best) break;  // no shorter closure can appear deeper
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue[tail++] = y;
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

Pow2CycleCheck is_pow2_cycle_free(const Graph& g, int max_exponent, const EngineOptions& opts) {
  if (max_exponent < 2) throw std::invalid_argument("exponent bound below 2");
  if ((1 << max_exponent) > kMaxCycleLength)
    throw std::invalid_argument("2^" + std::to_string(max_exponent) + " above length cap");
  for (int m = 2; m <= max_exponent; ++m) {
    if (auto witness = find_cycle_of_length(g, 1 << m, opts)) {
      return Pow2CycleCheck{false, m, *witness};
    }
  }
  return Pow2CycleCheck{};
}

}  // namespace cyc
