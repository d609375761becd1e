#pragma once

#include <vector>

#include "planartw/bitset.hpp"
#include "planartw/errors.hpp"

namespace planartw {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n), adj_(n), adj_set_(n, VertexSet(n)) {}

  int n() const { return n_; }
  int m() const;

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_set_[u].test(v); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  const VertexSet& neighbor_set(int v) const { return adj_set_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }

  std::vector<std::pair<int, int>> edges() const;

  // Subgraph induced by x, with vertex ids preserved (universe unchanged,
  // vertices outside x isolated).  keep[v] tells membership.
  Graph induced_same_ids(const VertexSet& x) const;

 private:
  int n_;
  std::vector<std::vector<int>> adj_;  // sorted
  std::vector<VertexSet> adj_set_;
};

struct Component {
  VertexSet vertices;
  VertexSet neighborhood;  // N_G(vertices)
};

// Open neighborhood of u in g.
VertexSet neighborhood(const Graph& g, const VertexSet& u);

bool is_clique(const Graph& g, const VertexSet& x);
bool is_connected(const Graph& g, const VertexSet& x);
bool is_connected(const Graph& g);

// Components of G[V \ s], ordered by minimum vertex id.
std::vector<Component> components(const Graph& g, const VertexSet& s);

// True iff at least two components of G[V \ s] are full (neighborhood = s).
bool is_minimal_separator(const Graph& g, const VertexSet& s);

// Bouchitte-Todinca PMC predicate: no full component associated with x, and
// every pair in x is adjacent or co-covered by some component neighborhood.
bool is_pmc(const Graph& g, const VertexSet& x);

}  // namespace planartw
