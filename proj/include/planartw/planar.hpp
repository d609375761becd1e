#pragma once

#include <vector>

#include "planartw/graph.hpp"

namespace planartw {

struct Face {
  int id = 0;
  std::vector<int> boundary;  // cyclic vertex sequence
  VertexSet vertex_set;
};

// Combinatorial plane graph: rotation[v] is the clockwise cyclic order of
// N(v).  next_after(v, u) realizes pi_v(u).
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Validates the rotation system: each rotation must be a permutation of
  // N(v) and the face traversal must satisfy Euler's formula.
  PlaneGraph(Graph g, std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return g_; }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }

  // pi_v(u): the neighbor of v immediately after u in clockwise order.
  int next_after(int v, int u) const;

  const std::vector<Face>& faces() const { return faces_; }

 private:
  void traverse_faces();

  Graph g_;
  std::vector<std::vector<int>> rot_;
  std::vector<std::vector<int>> pos_;  // pos_[v][u] = index of u in rot_[v]
  std::vector<Face> faces_;
};

bool is_planar(const Graph& g);

// Planar embedding via Boyer-Myrvold; throws NotPlanar / Disconnected.
PlaneGraph embed(const Graph& g);

// Brute-force connectivity classification.
bool is_biconnected(const Graph& g);
bool is_triconnected(const Graph& g);

// All size-2 separators, ordered by (min, max) vertex id.
std::vector<VertexSet> two_separators(const Graph& g);

}  // namespace planartw
