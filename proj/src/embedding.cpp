#include "cyclebench/embedding.hpp"

#include <algorithm>

#include "cyclebench/structure.hpp"

namespace cyc {

RotationSystem RotationSystem::mirrored(const RotationSystem& rot) {
  RotationSystem out = rot;
  for (auto& row : out.order) std::reverse(row.begin(), row.end());
  return out;
}

namespace {

// position of neighbor w in the rotation at v
int rot_pos(const RotationSystem& rot, Vertex v, Vertex w) {
  const auto& row = rot.order[v];
  for (int i = 0; i < static_cast<int>(row.size()); ++i)
    if (row[i] == w) return i;
  return -1;
}

void validate(const Graph& g, const RotationSystem& rot) {
  if (static_cast<int>(rot.order.size()) != g.vertex_count())
    throw graph_error("rotation system size does not match graph");
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto row = rot.order[v];
    std::sort(row.begin(), row.end());
    if (row != g.neighbors(v))
      throw graph_error("rotation at vertex " + std::to_string(v) +
                        " is not a permutation of its neighbors");
  }
}

}  // namespace

std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rot) {
  validate(g, rot);
  const int n = g.vertex_count();

  // dart id = offset(v) + index of the dart's head in rot.order[v]
  std::vector<int> offset(n + 1, 0);
  for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  auto dart_id = [&](Vertex from, Vertex to) { return offset[from] + rot_pos(rot, from, to); };

  std::vector<char> seen(offset[n], 0);
  std::vector<Face> faces;
  for (int v = 0; v < n; ++v) {
    for (Vertex w : rot.order[v]) {
      if (seen[dart_id(v, w)]) continue;
      Face face;
      Vertex x = v, y = w;
      while (!seen[dart_id(x, y)]) {
        seen[dart_id(x, y)] = 1;
        face.emplace_back(x, y);
        int p = rot_pos(rot, y, x);
        Vertex z = rot.order[y][(p + 1) % g.degree(y)];
        x = y;
        y = z;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

int genus(const Graph& g, const RotationSystem& rot) {
  if (!is_connected(g)) throw graph_error("genus requires a connected graph");
  const int f = static_cast<int>(trace_faces(g, rot).size());
  const int euler = g.vertex_count() - g.edge_count() + f;
  return (2 - euler) / 2;
}

std::vector<int> face_lengths(const std::vector<Face>& faces) {
  std::vector<int> lengths;
  lengths.reserve(faces.size());
  for (const auto& f : faces) lengths.push_back(static_cast<int>(f.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace cyc
