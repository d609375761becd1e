#include "planartw/latching.hpp"

#include <set>

namespace planartw {

LatchingGraph::LatchingGraph(const PlaneGraph& base)
    : base_(&base), lg_(base.graph().n()) {
  const Graph& g = base.graph();
  const int n = g.n();
  if (!is_biconnected(g)) throw NotBiconnectedError();

  chord_face_.assign(n, std::vector<int>(n, -1));
  for (auto [u, v] : g.edges()) {
    lg_.add_edge(u, v);
    edges_.push_back({u, v, false, -1});
  }
  for (const Face& f : base.faces()) {
    const auto& b = f.boundary;
    const int k = int(b.size());
    if (int(f.vertex_set.count()) != k)
      throw NotBiconnectedError("face boundary is not a simple cycle");
    if (k < 4) continue;
    for (int i = 0; i < k; i++)
      for (int j = i + 2; j < k; j++) {
        if (i == 0 && j == k - 1) continue;  // consecutive on the cycle
        int u = b[i], v = b[j];
        if (lg_.has_edge(u, v))
          throw MultiEdgeError("chord {" + std::to_string(u) + "," +
                               std::to_string(v) + "} duplicates a latching edge");
        lg_.add_edge(u, v);
        edges_.push_back({u, v, true, f.id});
        chord_face_[u][v] = chord_face_[v][u] = f.id;
      }
  }
}

int LatchingGraph::chord_face(int u, int v) const { return chord_face_[u][v]; }

bool LatchingGraph::is_plane_induced(const VertexSet& x) const {
  for (const Face& f : base_->faces())
    if ((f.vertex_set & x).count() >= 4) return false;
  return true;
}

LatchingGraph build_latching(const PlaneGraph& pg) { return LatchingGraph(pg); }

}  // namespace planartw
