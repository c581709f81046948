#include "cyclebench/inflate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cyc {

namespace {

Gadget make_gadget(std::string name, Graph graph, int u, int v, int w,
                   std::optional<RotationSystem> rotation) {
  Gadget g{std::move(name), std::move(graph), u, v, w, std::move(rotation)};
  const int n = g.graph.vertex_count();
  if (g.is_identity()) {
    if (u != 0 || v != 0 || w != 0) throw graph_error("identity gadget attachments");
  } else {
    if (u == v || u == w || v == w)
      throw graph_error("gadget " + g.name + ": attachments not distinct");
    for (int x = 0; x < n; ++x) {
      const bool attach = (x == u || x == v || x == w);
      if (g.graph.degree(x) != (attach ? 2 : 3))
        throw graph_error("gadget " + g.name + ": bad degree at vertex " + std::to_string(x));
    }
  }
  for (int len = 4; len <= n; len *= 2) {
    if (has_cycle_of_length(g.graph, len))
      throw graph_error("gadget " + g.name + ": has a " + std::to_string(len) + "-cycle");
  }
  return g;
}

}  // namespace

const Gadget& identity_gadget() {
  static const Gadget g = make_gadget(
      "identity", Graph(1, {}), 0, 0, 0,
      RotationSystem{{{kExternalU, kExternalV, kExternalW}}});
  return g;
}

const Gadget& k3_gadget() {
  static const Gadget g = make_gadget(
      "k3", Graph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 1, 2,
      RotationSystem{{{1, 2, kExternalU}, {2, 0, kExternalV}, {0, 1, kExternalW}}});
  return g;
}

// Published labeling: 0=v, 1=a, 2=b, 3=w, 4=p, 5=u, 6=q. The chain v-a-b-w,
// the upper path v-p-u-q-w is split by the chords a-p and b-q.
const Gadget& h7() {
  static const Gadget g = make_gadget(
      "h7",
      Graph(7, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {4, 5}, {5, 6}, {6, 2}, {3, 6}}),
      /*u=*/5, /*v=*/0, /*w=*/3,
      RotationSystem{{{1, 4, kExternalV},
                      {2, 4, 0},
                      {3, 6, 1},
                      {kExternalW, 6, 2},
                      {5, 0, 1},
                      {kExternalU, 4, 6},
                      {5, 2, 3}}});
  return g;
}

// Two copies of h7 with the copies' v vertices joined, their w vertices joined
// to a fresh vertex (the new u), and the copies' former u apexes serving as
// the new v and w. Copy 0 occupies vertices 0..6, copy 1 occupies 7..13, the
// fresh vertex is 14. No embedding on file (none of its uses need one).
const Gadget& h15() {
  static const Gadget g = [] {
    const Graph& base = h7().graph;
    std::vector<Edge> edges;
    for (const auto& [a, b] : base.edges()) {
      edges.emplace_back(a, b);
      edges.emplace_back(a + 7, b + 7);
    }
    edges.emplace_back(0, 7);    // v-v join
    edges.emplace_back(3, 14);   // copy 0 w to the new u
    edges.emplace_back(10, 14);  // copy 1 w to the new u
    return make_gadget("h15", Graph(15, edges), /*u=*/14, /*v=*/5, /*w=*/12, std::nullopt);
  }();
  return g;
}

const Gadget* find_gadget(const std::string& name) {
  if (name == "identity") return &identity_gadget();
  if (name == "k3") return &k3_gadget();
  if (name == "h7") return &h7();
  if (name == "h15") return &h15();
  return nullptr;
}

namespace {

struct VertexRoles {
  int u_neighbor, v_neighbor, w_neighbor;
  int attach_for_neighbor(const Gadget& gadget, int nbr) const {
    if (nbr == u_neighbor) return gadget.attach_u;
    if (nbr == v_neighbor) return gadget.attach_v;
    return gadget.attach_w;
  }
};

VertexRoles roles_at(const Graph& base, int x, const PlanEntry& entry) {
  const auto& nbrs = base.neighbors(x);
  std::vector<int> rest;
  for (int y : nbrs)
    if (y != entry.u_neighbor) rest.push_back(y);
  if (rest.size() != 2)
    throw graph_error("u-edge endpoint " + std::to_string(entry.u_neighbor) +
                      " not incident to vertex " + std::to_string(x));
  // rest is ascending; the smaller neighbor forms the lexicographically
  // smaller incident edge, which takes role v
  VertexRoles roles{entry.u_neighbor, rest[0], rest[1]};
  if (entry.swap_vw) std::swap(roles.v_neighbor, roles.w_neighbor);
  return roles;
}

}  // namespace

Inflation inflate(const InflationPlan& plan) {
  const Graph& base = plan.base;
  const int bn = base.vertex_count();
  if (!base.is_regular(3)) throw graph_error("inflation base is not cubic");
  if (static_cast<int>(plan.entries.size()) != bn)
    throw graph_error("plan must have one entry per base vertex");

  std::vector<VertexRoles> roles;
  roles.reserve(bn);
  for (int x = 0; x < bn; ++x) {
    if (plan.entries[x].gadget == nullptr) throw graph_error("plan entry without gadget");
    roles.push_back(roles_at(base, x, plan.entries[x]));
  }

  Inflation out;
  out.block_offset.assign(bn + 1, 0);
  for (int x = 0; x < bn; ++x)
    out.block_offset[x + 1] = out.block_offset[x] + plan.entries[x].gadget->graph.vertex_count();
  const int n = out.block_offset[bn];

  out.projection.assign(n, 0);
  for (int x = 0; x < bn; ++x)
    for (int i = out.block_offset[x]; i < out.block_offset[x + 1]; ++i) out.projection[i] = x;

  // The inflated vertex that the base edge {x,y} attaches to on x's side.
  auto port = [&](int x, int y) {
    return out.block_offset[x] + roles[x].attach_for_neighbor(*plan.entries[x].gadget, y);
  };

  std::vector<Edge> edges;
  edges.reserve(3 * n / 2);
  for (int x = 0; x < bn; ++x)
    for (const auto& [a, b] : plan.entries[x].gadget->graph.edges())
      edges.emplace_back(out.block_offset[x] + a, out.block_offset[x] + b);
  for (const auto& [x, y] : base.edges()) edges.push_back(make_edge(port(x, y), port(y, x)));
  out.graph = Graph(n, edges);
  if (!out.graph.is_regular(3)) throw graph_error("inflation produced a non-cubic graph");

  const bool want_rotation =
      plan.base_rotation.has_value() &&
      std::all_of(plan.entries.begin(), plan.entries.end(),
                  [](const PlanEntry& e) { return e.gadget->rotation.has_value(); });
  if (want_rotation) {
    RotationSystem rot;
    rot.order.resize(n);
    for (int x = 0; x < bn; ++x) {
      const Gadget& gadget = *plan.entries[x].gadget;
      // Does the base rotation list the role edges in the cyclic order
      // (u, v, w)? If not, splice the mirrored gadget drawing instead, so the
      // external edges keep their cyclic order around the replaced vertex.
      const auto& row = plan.base_rotation->order[x];
      int iu = static_cast<int>(std::find(row.begin(), row.end(), roles[x].u_neighbor) -
                                row.begin());
      const bool forward = row[(iu + 1) % 3] == roles[x].v_neighbor;
      for (int gv = 0; gv < gadget.graph.vertex_count(); ++gv) {
        std::vector<int> grow = gadget.rotation->order[gv];
        if (!forward) std::reverse(grow.begin(), grow.end());
        std::vector<int>& target = rot.order[out.block_offset[x] + gv];
        target.reserve(grow.size());
        for (int e : grow) {
          if (e >= 0) {
            target.push_back(out.block_offset[x] + e);
          } else {
            int nbr = (e == kExternalU)   ? roles[x].u_neighbor
                      : (e == kExternalV) ? roles[x].v_neighbor
                                          : roles[x].w_neighbor;
            target.push_back(port(nbr, x));
          }
        }
      }
    }
    out.rotation = std::move(rot);
  }
  return out;
}

ProjectedCycle project_cycle(const Cycle& cycle, const Inflation& inflation) {
  const Graph& g = inflation.graph;
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw std::invalid_argument("cycle shorter than 3");
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (static_cast<int>(distinct.size()) != len)
    throw std::invalid_argument("cycle repeats a vertex");
  for (int i = 0; i < len; ++i) {
    int a = cycle[i], b = cycle[(i + 1) % len];
    if (a < 0 || a >= g.vertex_count() || !g.has_edge(a, b))
      throw std::invalid_argument("cycle replay failed at position " + std::to_string(i));
  }

  ProjectedCycle out;
  std::set<int> copies;
  for (int i = 0; i < len; ++i) {
    int pa = inflation.projection[cycle[i]];
    int pb = inflation.projection[cycle[(i + 1) % len]];
    copies.insert(pa);
    if (pa == pb)
      ++out.internal_edges;
    else
      ++out.joining_edges;
    if (out.walk.empty() || out.walk.back() != pa) out.walk.push_back(pa);
  }
  while (out.walk.size() > 1 && out.walk.front() == out.walk.back()) out.walk.pop_back();
  out.copies.assign(copies.begin(), copies.end());
  out.degenerate = out.walk.size() == 1;
  out.simple_cycle =
      out.walk.size() >= 3 && out.walk.size() == copies.size();
  return out;
}

std::string encode_plan(const InflationPlan& plan) {
  std::ostringstream out;
  for (int x = 0; x < plan.base.vertex_count(); ++x)
    out << x << ' ' << plan.entries[x].gadget->name << ' ' << plan.entries[x].u_neighbor << '\n';
  return out.str();
}

InflationPlan parse_plan(const Graph& base, const std::string& text) {
  InflationPlan plan;
  plan.base = base;
  plan.entries.assign(base.vertex_count(), PlanEntry{});
  std::vector<char> seen(base.vertex_count(), 0);
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int vertex, u_neighbor;
    std::string gadget_name;
    if (!(fields >> vertex >> gadget_name >> u_neighbor))
      throw parse_error("bad plan line", line_start);
    std::string extra;
    if (fields >> extra) throw parse_error("trailing field on plan line", line_start);
    if (vertex < 0 || vertex >= base.vertex_count())
      throw parse_error("plan vertex out of range", line_start);
    if (seen[vertex]) throw parse_error("duplicate plan vertex", line_start);
    const Gadget* gadget = find_gadget(gadget_name);
    if (gadget == nullptr) throw parse_error("unknown gadget " + gadget_name, line_start);
    if (!base.has_edge(vertex, u_neighbor))
      throw parse_error("u-edge not incident to plan vertex", line_start);
    seen[vertex] = 1;
    plan.entries[vertex] = PlanEntry{gadget, u_neighbor, false};
  }
  for (int x = 0; x < base.vertex_count(); ++x)
    if (!seen[x]) throw parse_error("missing plan entry for vertex " + std::to_string(x), 0);
  return plan;
}

}  // namespace cyc
