#pragma once

#include <utility>
#include <vector>

#include "cyclebench/graph.hpp"

namespace cyc {

// Combinatorial embedding: the cyclic order of neighbors around each vertex.
// All rotations in this project follow one fixed orientation convention
// (clockwise in the reference drawing); the mirror image has the same genus.
struct RotationSystem {
  std::vector<std::vector<Vertex>> order;

  static RotationSystem mirrored(const RotationSystem& rot);
};

using Dart = std::pair<Vertex, Vertex>;  // (from, to)
using Face = std::vector<Dart>;

// Partition the 2|E| darts into faces: the dart after (x,y) is (y,z) where z
// follows x in the rotation at y. Throws graph_error if the rotation at some
// vertex is not a permutation of its neighbors.
std::vector<Face> trace_faces(const Graph& g, const RotationSystem& rot);

// Orientable genus of the embedding, via Euler's formula. Requires g connected.
int genus(const Graph& g, const RotationSystem& rot);

std::vector<int> face_lengths(const std::vector<Face>& faces);  // ascending

}  // namespace cyc
