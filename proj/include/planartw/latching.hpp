#pragma once

#include <vector>

#include "planartw/planar.hpp"

namespace planartw {

struct LatchingEdge {
  int u, v;
  bool chord;       // false: edge of the base graph
  int face_id = -1; // face the chord was drawn in (chords only)
};

// The base plane graph plus, in every face bounded by a cycle of length
// >= 4, all chords of the bounding cycle.
class LatchingGraph {
 public:
  explicit LatchingGraph(const PlaneGraph& base);

  const PlaneGraph& base() const { return *base_; }
  const Graph& graph() const { return lg_; }  // all latching edges, untagged
  const std::vector<LatchingEdge>& edges() const { return edges_; }

  // The face a chord {u,v} was drawn in, or -1 for base edges.
  int chord_face(int u, int v) const;

  // Latching edges with both ends in x, ids preserved.
  Graph induced(const VertexSet& x) const { return lg_.induced_same_ids(x); }

  // True iff no face of the base graph contains >= 4 members of x;
  // exactly when L_G[x] is a plane graph.
  bool is_plane_induced(const VertexSet& x) const;

 private:
  const PlaneGraph* base_;
  Graph lg_;
  std::vector<LatchingEdge> edges_;
  std::vector<std::vector<int>> chord_face_;  // -1 where no chord
};

// Throws NotBiconnected; MultiEdge when a chord would duplicate an
// existing latching edge (the base graph was not triconnected).
LatchingGraph build_latching(const PlaneGraph& pg);

}  // namespace planartw
