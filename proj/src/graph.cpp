#include "planartw/graph.hpp"

#include <algorithm>
#include <cassert>

namespace planartw {

int Graph::m() const {
  int total = 0;
  for (const auto& a : adj_) total += int(a.size());
  return total / 2;
}

void Graph::add_edge(int u, int v) {
  assert(u != v && 0 <= u && u < n_ && 0 <= v && v < n_);
  if (adj_set_[u].test(v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  adj_set_[u].set(v);
  adj_set_[v].set(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; u++)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced_same_ids(const VertexSet& x) const {
  Graph h(n_);
  for (int u = x.first(); u >= 0; u = x.next(u))
    for (int v : adj_[u])
      if (u < v && x.test(v)) h.add_edge(u, v);
  return h;
}

VertexSet neighborhood(const Graph& g, const VertexSet& u) {
  VertexSet nb(g.n());
  for (int v = u.first(); v >= 0; v = u.next(v)) nb |= g.neighbor_set(v);
  nb -= u;
  return nb;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  for (int u = x.first(); u >= 0; u = x.next(u))
    for (int v = x.next(u); v >= 0; v = x.next(v))
      if (!g.has_edge(u, v)) return false;
  return true;
}

bool is_connected(const Graph& g, const VertexSet& x) {
  int start = x.first();
  if (start < 0) return true;
  VertexSet seen(g.n());
  std::vector<int> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v))
      if (x.test(w) && !seen.test(w)) {
        seen.set(w);
        stack.push_back(w);
      }
  }
  return seen == x;
}

bool is_connected(const Graph& g) {
  return is_connected(g, VertexSet::full(g.n()));
}

std::vector<Component> components(const Graph& g, const VertexSet& s) {
  std::vector<Component> out;
  VertexSet seen = s;
  for (int start = 0; start < g.n(); start++) {
    if (seen.test(start)) continue;
    Component c{VertexSet(g.n()), VertexSet(g.n())};
    std::vector<int> stack{start};
    seen.set(start);
    c.vertices.set(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (s.test(w)) {
          c.neighborhood.set(w);
        } else if (!seen.test(w)) {
          seen.set(w);
          c.vertices.set(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  int full = 0;
  for (const auto& c : components(g, s))
    if (c.neighborhood == s && ++full >= 2) return true;
  return false;
}

bool is_pmc(const Graph& g, const VertexSet& x) {
  if (x.empty()) return false;
  auto comps = components(g, x);
  for (const auto& c : comps)
    if (c.neighborhood == x) return false;
  for (int u = x.first(); u >= 0; u = x.next(u)) {
    for (int v = x.next(u); v >= 0; v = x.next(v)) {
      if (g.has_edge(u, v)) continue;
      bool covered = false;
      for (const auto& c : comps)
        if (c.neighborhood.test(u) && c.neighborhood.test(v)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace planartw
