#include "planartw/planar.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <map>

namespace planartw {

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rotation)
    : g_(std::move(g)), rot_(std::move(rotation)) {
  const int n = g_.n();
  if (int(rot_.size()) != n)
    throw InvalidEmbeddingError("rotation system size mismatch");
  if (!is_connected(g_)) throw DisconnectedError();
  pos_.assign(n, {});
  for (int v = 0; v < n; v++) {
    std::vector<int> sorted = rot_[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g_.neighbors(v))
      throw InvalidEmbeddingError("rotation at vertex " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
    pos_[v].assign(n, -1);
    for (int i = 0; i < int(rot_[v].size()); i++) pos_[v][rot_[v][i]] = i;
  }
  traverse_faces();
  int euler = n - g_.m() + int(faces_.size());
  if (euler != 2)
    throw InvalidEmbeddingError("face traversal gives Euler characteristic " +
                                std::to_string(euler));
}

int PlaneGraph::next_after(int v, int u) const {
  const auto& r = rot_[v];
  return r[(pos_[v][u] + 1) % r.size()];
}

void PlaneGraph::traverse_faces() {
  // Walk rule: arriving along u->v, continue with v->pi_v(u).  Each
  // directed edge lies on exactly one face walk.
  std::map<std::pair<int, int>, bool> used;
  for (auto [u, v] : g_.edges()) {
    used[{u, v}] = false;
    used[{v, u}] = false;
  }
  faces_.clear();
  for (auto& [start, done] : used) {
    if (done) continue;
    Face f;
    f.id = int(faces_.size());
    f.vertex_set = VertexSet(g_.n());
    int u = start.first, v = start.second;
    while (true) {
      auto& flag = used[{u, v}];
      if (flag) break;
      flag = true;
      f.boundary.push_back(u);
      f.vertex_set.set(u);
      int w = next_after(v, u);
      u = v;
      v = w;
    }
    faces_.push_back(std::move(f));
  }
}

bool is_planar(const Graph& g) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(g.n());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlaneGraph embed(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError();
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                       boost::property<boost::vertex_index_t, int>,
                                       boost::property<boost::edge_index_t, int>>;
  BGraph bg(g.n());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  int ei = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it)
    boost::put(boost::edge_index, bg, *it, ei++);

  using EdgeVec = std::vector<boost::graph_traits<BGraph>::edge_descriptor>;
  std::vector<EdgeVec> embedding(boost::num_vertices(bg));
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(),
                                            boost::get(boost::vertex_index, bg)));
  if (!planar) throw NotPlanarError();

  std::vector<std::vector<int>> rotation(g.n());
  for (int v = 0; v < g.n(); v++)
    for (const auto& e : embedding[v]) {
      int a = int(boost::source(e, bg)), b = int(boost::target(e, bg));
      rotation[v].push_back(a == v ? b : a);
    }
  return PlaneGraph(g, std::move(rotation));
}

bool is_biconnected(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.n() <= 2) return true;
  VertexSet all = VertexSet::full(g.n());
  for (int v = 0; v < g.n(); v++) {
    VertexSet rest = all;
    rest.reset(v);
    if (!is_connected(g, rest)) return false;
  }
  return true;
}

bool is_triconnected(const Graph& g) {
  if (g.n() < 4) return false;  // 3-connectivity needs at least 4 vertices
  if (!is_biconnected(g)) return false;
  VertexSet all = VertexSet::full(g.n());
  for (int u = 0; u < g.n(); u++)
    for (int v = u + 1; v < g.n(); v++) {
      VertexSet rest = all;
      rest.reset(u);
      rest.reset(v);
      if (!is_connected(g, rest)) return false;
    }
  return true;
}

std::vector<VertexSet> two_separators(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.n() <= 3) return out;
  VertexSet all = VertexSet::full(g.n());
  for (int u = 0; u < g.n(); u++)
    for (int v = u + 1; v < g.n(); v++) {
      VertexSet rest = all;
      rest.reset(u);
      rest.reset(v);
      if (!is_connected(g, rest))
        out.push_back(VertexSet::of(g.n(), {u, v}));
    }
  return out;
}

}  // namespace planartw
