#include "planartw/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>

#include "planartw/planar.hpp"

namespace planartw {
namespace oracle {

namespace {

void require_size(const Graph& g, int cap) {
  if (g.n() > cap) throw TooLargeError();
}

bool chordless_list(const Graph& g, const std::vector<int>& p, bool cycle) {
  const size_t k = p.size();
  for (size_t i = 0; i < k; i++)
    for (size_t j = i + 1; j < k; j++) {
      bool consecutive = (j == i + 1) || (cycle && i == 0 && j == k - 1);
      if (g.has_edge(p[i], p[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace

std::set<VertexSet> pmcs_bruteforce(const Graph& g) {
  require_size(g, 16);
  std::set<VertexSet> out;
  const int n = g.n();
  for (uint64_t mask = 1; mask < (uint64_t(1) << n); mask++) {
    VertexSet x(n);
    for (int v = 0; v < n; v++)
      if ((mask >> v) & 1) x.set(v);
    if (is_pmc(g, x)) out.insert(x);
  }
  return out;
}

std::set<VertexSet> minseps_bruteforce(const Graph& g) {
  require_size(g, 16);
  std::set<VertexSet> out;
  const int n = g.n();
  for (uint64_t mask = 1; mask < (uint64_t(1) << n); mask++) {
    VertexSet s(n);
    for (int v = 0; v < n; v++)
      if ((mask >> v) & 1) s.set(v);
    if (is_minimal_separator(g, s)) out.insert(s);
  }
  return out;
}

int treewidth_bruteforce(const Graph& g) {
  require_size(g, 20);
  const int n = g.n();
  if (n == 0) return -1;
  // Elimination-prefix DP: tw[S] is the best max fill degree over orders
  // eliminating S first.
  std::vector<int8_t> tw(size_t(1) << n, 0);
  for (uint64_t mask = 1; mask < (uint64_t(1) << n); mask++) {
    int best = n;
    for (int v = 0; v < n; v++) {
      if (!((mask >> v) & 1)) continue;
      uint64_t rest = mask & ~(uint64_t(1) << v);
      // Q(rest, v): vertices outside rest+{v} adjacent to v or reachable
      // from it through rest.
      uint64_t reach = uint64_t(1) << v;
      uint64_t frontier = reach;
      uint64_t q = 0;
      while (frontier) {
        int u = __builtin_ctzll(frontier);
        frontier &= frontier - 1;
        for (int w : g.neighbors(u)) {
          uint64_t bit = uint64_t(1) << w;
          if (rest & bit) {
            if (!(reach & bit)) {
              reach |= bit;
              frontier |= bit;
            }
          } else if (w != v) {
            q |= bit;
          }
        }
      }
      int val = std::max(int(tw[rest]), __builtin_popcountll(q));
      best = std::min(best, val);
    }
    tw[mask] = int8_t(best);
  }
  return tw[(uint64_t(1) << n) - 1];
}

std::set<std::vector<int>> chordless_cycles_bruteforce(const Graph& g) {
  require_size(g, 16);
  std::set<std::vector<int>> out;
  const int n = g.n();
  std::vector<int> path;
  std::vector<bool> used(n, false);
  // Simple cycles with minimum vertex first; orientation fixed by
  // path[1] < path.back().
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < path.back() && chordless_list(g, path, true))
          out.insert(path);
      } else if (w > root && !used[w]) {
        used[w] = true;
        path.push_back(w);
        dfs(root, w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  for (int root = 0; root < n; root++) {
    path = {root};
    dfs(root, root);
  }
  return out;
}

std::set<std::vector<int>> chordless_paths_bruteforce(const Graph& g, int s,
                                                      int t) {
  require_size(g, 16);
  std::set<std::vector<int>> out;
  std::vector<int> path{s};
  std::vector<bool> used(g.n(), false);
  used[s] = true;
  std::function<void(int)> dfs = [&](int v) {
    if (v == t) {
      if (chordless_list(g, path, false)) out.insert(path);
      return;
    }
    for (int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = false;
    }
  };
  dfs(s);
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; v++) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (int v = 0; v < rim; v++) {
    g.add_edge(v, (v + 1) % rim);
    g.add_edge(v, rim);
  }
  return g;
}

Graph prism_graph(int k) {
  Graph g(2 * k);
  for (int v = 0; v < k; v++) {
    g.add_edge(v, (v + 1) % k);
    g.add_edge(k + v, k + (v + 1) % k);
    g.add_edge(v, k + v);
  }
  return g;
}

Graph antiprism_graph(int k) {
  Graph g(2 * k);
  for (int v = 0; v < k; v++) {
    g.add_edge(v, (v + 1) % k);
    g.add_edge(k + v, k + (v + 1) % k);
    g.add_edge(v, k + v);
    g.add_edge(v, k + (v + 1) % k);
  }
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (int v = 0; v < 8; v++)
    for (int b = 0; b < 3; b++) {
      int w = v ^ (1 << b);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

Graph octahedron_graph() {
  // K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5)
  Graph g(6);
  for (int u = 0; u < 6; u++)
    for (int v = u + 1; v < 6; v++)
      if (!(u / 2 == v / 2)) g.add_edge(u, v);
  return g;
}

Graph dodecahedron_graph() {
  // Generalized Petersen graph GP(10,2)
  Graph g(20);
  for (int i = 0; i < 10; i++) {
    g.add_edge(i, (i + 1) % 10);
    g.add_edge(i, 10 + i);
    g.add_edge(10 + i, 10 + (i + 2) % 10);
  }
  return g;
}

Graph icosahedron_graph() {
  Graph g(12);
  for (int i = 0; i < 5; i++) {
    int u = 1 + i, un = 1 + (i + 1) % 5;
    int l = 6 + i, ln = 6 + (i + 1) % 5;
    g.add_edge(0, u);
    g.add_edge(u, un);
    g.add_edge(l, ln);
    g.add_edge(11, l);
    g.add_edge(u, l);
    g.add_edge(u, ln);
  }
  return g;
}

Graph grid_graph(int rows, int cols) {
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; r++)
    for (int c = 0; c < cols; c++) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

Graph theta_graph(int a, int b, int c) {
  Graph g(2 + a + b + c);
  int next = 2;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; i++) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph grow_triangulation(const Graph& base, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::array<int, 3>> faces;
  PlaneGraph pg = embed(base);
  for (const Face& f : pg.faces())
    faces.push_back({f.boundary[0], f.boundary[1], f.boundary[2]});

  Graph g(n);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  for (int v = base.n(); v < n; v++) {
    size_t fi = rng() % faces.size();
    auto [a, b, c] = faces[fi];
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    faces[fi] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return g;
}

Graph random_triconnected_planar(int n, unsigned seed) {
  std::mt19937 rng(seed);
  int pick = int(rng() % 3);
  if (n < 6) pick = 0;
  Graph base;
  if (pick == 0) {
    base = complete_graph(4);
  } else if (pick == 1) {
    base = octahedron_graph();
  } else {
    base = n >= 12 ? icosahedron_graph() : octahedron_graph();
  }
  return grow_triangulation(base, n, rng());
}

namespace {

// Glue g2 onto g1 by identifying an edge of each; the shared pair is a
// 2-separator of the result.
Graph glue_on_edge(const Graph& g1, const Graph& g2) {
  auto e1 = g1.edges().front();
  auto e2 = g2.edges().front();
  int n = g1.n() + g2.n() - 2;
  Graph g(n);
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  auto map2 = [&](int v) {
    if (v == e2.first) return e1.first;
    if (v == e2.second) return e1.second;
    int w = v;
    if (v > e2.first) w--;
    if (v > e2.second) w--;
    return g1.n() + w;
  };
  for (auto [u, v] : g2.edges()) {
    int a = map2(u), b = map2(v);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

Graph random_tree(int n, unsigned seed) {
  std::mt19937 rng(seed);
  Graph g(n);
  for (int v = 1; v < n; v++) g.add_edge(v, int(rng() % v));
  return g;
}

}  // namespace

std::vector<CorpusGraph> corpus(unsigned seed, int n_max) {
  std::vector<CorpusGraph> out;
  auto add = [&](const std::string& name, Graph g) {
    if (g.n() > n_max || g.n() == 0) return;
    CorpusGraph cg;
    cg.name = name;
    cg.planar = is_planar(g);
    cg.biconnected = is_biconnected(g);
    cg.triconnected = is_triconnected(g);
    cg.graph = std::move(g);
    out.push_back(std::move(cg));
  };

  add("k4", complete_graph(4));
  add("octahedron", octahedron_graph());
  add("cube", cube_graph());
  add("icosahedron", icosahedron_graph());
  add("dodecahedron", dodecahedron_graph());
  for (int rim = 4; rim <= 11; rim++)
    add("wheel" + std::to_string(rim), wheel_graph(rim));
  for (int k = 3; k <= 6; k++)
    add("prism" + std::to_string(k), prism_graph(k));
  for (int k = 3; k <= 6; k++)
    add("antiprism" + std::to_string(k), antiprism_graph(k));

  std::mt19937 rng(seed);
  for (int i = 0; i < 40; i++) {
    int n = 5 + int(rng() % 8);  // 5..12
    add("rand_tri" + std::to_string(i),
        random_triconnected_planar(std::min(n, n_max), rng()));
  }

  // Non-triconnected planar graphs for the decomposition pipeline.
  for (int n : {2, 5, 9, 13}) add("tree" + std::to_string(n), random_tree(n, seed + n));
  for (int n : {4, 6, 9}) add("cycle" + std::to_string(n), cycle_graph(n));
  add("path6", path_graph(6));
  add("grid2x2", grid_graph(2, 2));
  add("grid2x3", grid_graph(2, 3));
  add("grid3x3", grid_graph(3, 3));
  add("grid3x4", grid_graph(3, 4));
  add("grid4x4", grid_graph(4, 4));
  add("theta111", theta_graph(1, 1, 1));
  add("theta123", theta_graph(1, 2, 3));
  add("theta222", theta_graph(2, 2, 2));
  add("glue_k4_k4", glue_on_edge(complete_graph(4), complete_graph(4)));
  add("glue_k4_oct", glue_on_edge(complete_graph(4), octahedron_graph()));
  add("glue_oct_cube", glue_on_edge(octahedron_graph(), cube_graph()));
  return out;
}

}  // namespace oracle
}  // namespace planartw
