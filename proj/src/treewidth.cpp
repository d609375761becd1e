#include "planartw/treewidth.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "planartw/latching.hpp"
#include "planartw/pmc_enum.hpp"
#include "planartw/planar.hpp"

namespace planartw {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

struct BtDp {
  const Graph& g;
  const std::vector<VertexSet>& pmcs;
  // block component -> (cost, chosen bag)
  std::map<VertexSet, std::pair<int, VertexSet>> memo;

  // Cost of block (S = N(C), C): best max bag size - 1 inside C cup S.
  int block_cost(const VertexSet& comp) {
    auto it = memo.find(comp);
    if (it != memo.end()) return it->second.first;
    VertexSet sep = neighborhood(g, comp);
    VertexSet allowed = comp | sep;
    int best = kInf;
    VertexSet best_bag;
    for (const VertexSet& omega : pmcs) {
      if (!sep.subset_of(omega) || !omega.subset_of(allowed)) continue;
      if (!omega.intersects(comp)) continue;
      int val = omega.count() - 1;
      for (const auto& c2 : components(g, omega)) {
        if (!c2.vertices.subset_of(comp)) continue;
        val = std::max(val, block_cost(c2.vertices));
        if (val >= best) break;
      }
      if (val < best) {
        best = val;
        best_bag = omega;
      }
    }
    if (best >= kInf)
      throw IncompletePmcSetError("no feasible bag for a block");
    memo[comp] = {best, best_bag};
    return best;
  }

  // Recreate the decomposition from the recorded bag choices.
  int emit(const VertexSet& comp, TreeDecomposition& td, int parent) {
    const VertexSet& omega = memo.at(comp).second;
    int id = int(td.bags.size());
    td.bags.push_back(omega);
    if (parent >= 0) td.edges.push_back({parent, id});
    for (const auto& c2 : components(g, omega))
      if (c2.vertices.subset_of(comp)) emit(c2.vertices, td, id);
    return id;
  }
};

Graph relabel_subgraph(const Graph& g, const VertexSet& keep,
                       std::vector<int>& local_to_global) {
  local_to_global = keep.to_vector();
  std::vector<int> global_to_local(g.n(), -1);
  for (int i = 0; i < int(local_to_global.size()); i++)
    global_to_local[local_to_global[i]] = i;
  Graph h(int(local_to_global.size()));
  for (auto [u, v] : g.edges())
    if (keep.test(u) && keep.test(v))
      h.add_edge(global_to_local[u], global_to_local[v]);
  return h;
}

// Append child (in local ids) to td, translating through the map; returns
// the offset of the child's bags.
int splice_td(TreeDecomposition& td, const TreeDecomposition& child,
              const std::vector<int>& local_to_global, int n_global) {
  int offset = int(td.bags.size());
  for (const auto& bag : child.bags) {
    VertexSet b(n_global);
    for (int v = bag.first(); v >= 0; v = bag.next(v))
      b.set(local_to_global[v]);
    td.bags.push_back(b);
  }
  for (auto [a, b] : child.edges)
    td.edges.push_back({a + offset, b + offset});
  return offset;
}

// Biconnected components as vertex sets, via DFS edge stacking.
std::vector<VertexSet> biconnected_components(const Graph& g) {
  const int n = g.n();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  struct Frame {
    int v, parent;
    size_t idx = 0;
  };
  for (int root = 0; root < n; root++) {
    if (num[root] >= 0) continue;
    std::vector<Frame> frames{{root, -1}};
    num[root] = low[root] = timer++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.idx < nbrs.size()) {
        int w = nbrs[f.idx++];
        if (w == f.parent) continue;
        if (num[w] < 0) {
          stack.push_back({f.v, w});
          num[w] = low[w] = timer++;
          frames.push_back({w, f.v});
        } else if (num[w] < num[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v, p = f.parent;
        frames.pop_back();
        if (p >= 0) {
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= num[p]) {
            VertexSet block(n);
            while (!stack.empty()) {
              auto [a, b] = stack.back();
              if (num[a] < num[v] && a != p) break;
              stack.pop_back();
              block.set(a);
              block.set(b);
              if (a == p && b == v) break;
            }
            if (!block.empty()) blocks.push_back(block);
          }
        }
      }
    }
  }
  return blocks;
}

TwResult tw_connected(const Graph& g);

// Biconnected planar input.
TwResult tw_biconnected(const Graph& g) {
  const int n = g.n();
  VertexSet all = VertexSet::full(n);
  if (is_clique(g, all)) {
    TreeDecomposition td;
    td.bags.push_back(all);
    return {n - 1, td};
  }

  auto seps2 = two_separators(g);
  if (!seps2.empty()) {
    VertexSet s = seps2.front();
    int a = s.first(), b = s.next(a);
    TreeDecomposition td;
    td.bags.push_back(s);  // root bag {a,b}
    for (const auto& comp : components(g, s)) {
      VertexSet keep = comp.vertices | s;
      std::vector<int> map;
      Graph gi = relabel_subgraph(g, keep, map);
      int la = -1, lb = -1;
      for (int i = 0; i < int(map.size()); i++) {
        if (map[i] == a) la = i;
        if (map[i] == b) lb = i;
      }
      gi.add_edge(la, lb);  // fill the separator into a clique
      if (!is_planar(gi))
        throw std::logic_error("2-separator piece lost planarity");
      TwResult child = tw_connected(gi);
      int offset = splice_td(td, child.td, map, n);
      for (int i = 0; i < int(child.td.bags.size()); i++)
        if (child.td.bags[i].test(la) && child.td.bags[i].test(lb)) {
          td.edges.push_back({0, offset + i});
          break;
        }
    }
    return {td.width(), td};
  }

  // Triconnected piece: latching PMC enumeration plus the BT DP.
  PlaneGraph pg = embed(g);
  LatchingGraph l = build_latching(pg);
  std::vector<VertexSet> pi;
  auto stream = pmcs(g, l);
  while (stream.advance()) pi.push_back(stream.current().vertices);
  return treewidth_from_pmcs(g, pi);
}

TwResult tw_connected(const Graph& g) {
  const int n = g.n();
  if (n == 1) {
    TreeDecomposition td;
    td.bags.push_back(VertexSet::full(1));
    return {0, td};
  }
  auto blocks = biconnected_components(g);
  if (blocks.size() == 1) return tw_biconnected(g);

  TreeDecomposition td;
  std::vector<int> repr(n, -1);  // a bag holding each vertex seen so far
  for (const auto& block : blocks) {
    std::vector<int> map;
    Graph sub = relabel_subgraph(g, block, map);
    TwResult child = tw_connected(sub);
    int offset = splice_td(td, child.td, map, n);
    // Link through cut vertices shared with already placed blocks.
    for (int v = block.first(); v >= 0; v = block.next(v)) {
      if (repr[v] < 0) continue;
      for (int i = 0; i < int(child.td.bags.size()); i++)
        if (td.bags[offset + i].test(v)) {
          td.edges.push_back({repr[v], offset + i});
          break;
        }
    }
    for (int v = block.first(); v >= 0; v = block.next(v))
      if (repr[v] < 0)
        for (int i = 0; i < int(child.td.bags.size()); i++)
          if (td.bags[offset + i].test(v)) {
            repr[v] = offset + i;
            break;
          }
  }
  return {td.width(), td};
}

}  // namespace

bool validate_td(const Graph& g, const TreeDecomposition& td) {
  const int n = g.n();
  const int k = int(td.bags.size());
  if (k == 0) return n == 0;
  // tree shape
  if (int(td.edges.size()) != k - 1) return false;
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : td.edges) {
    if (a < 0 || a >= k || b < 0 || b >= k) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(k, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        cnt++;
        stack.push_back(w);
      }
  }
  if (cnt != k) return false;

  // vertex and edge coverage
  VertexSet covered(n);
  for (const auto& b : td.bags) covered |= b;
  if (covered != VertexSet::full(n)) return false;
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (const auto& b : td.bags)
      if (b.test(u) && b.test(v)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  // connected occurrence sets
  for (int v = 0; v < n; v++) {
    int start = -1, total = 0;
    for (int i = 0; i < k; i++)
      if (td.bags[i].test(v)) {
        total++;
        if (start < 0) start = i;
      }
    if (total == 0) return false;
    std::vector<bool> vis(k, false);
    std::vector<int> st{start};
    vis[start] = true;
    int reached = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (!vis[y] && td.bags[y].test(v)) {
          vis[y] = true;
          reached++;
          st.push_back(y);
        }
    }
    if (reached != total) return false;
  }
  return true;
}

TwResult treewidth_from_pmcs(const Graph& g,
                             const std::vector<VertexSet>& pmc_set) {
  if (!is_connected(g)) throw DisconnectedError();
  BtDp dp{g, pmc_set, {}};
  int best = kInf;
  const VertexSet* best_root = nullptr;
  for (const VertexSet& omega : pmc_set) {
    int val = omega.count() - 1;
    if (val >= best) continue;
    for (const auto& c : components(g, omega)) {
      val = std::max(val, dp.block_cost(c.vertices));
      if (val >= best) break;
    }
    if (val < best) {
      best = val;
      best_root = &omega;
    }
  }
  if (!best_root) throw IncompletePmcSetError("empty or infeasible PMC set");
  TreeDecomposition td;
  td.bags.push_back(*best_root);
  for (const auto& c : components(g, *best_root))
    dp.emit(c.vertices, td, 0);
  return {best, td};
}

TwResult treewidth_planar(const Graph& g) {
  if (g.n() == 0) return {-1, {}};
  if (!is_planar(g)) throw NotPlanarError();
  VertexSet all = VertexSet::full(g.n());
  auto comps = components(g, VertexSet(g.n()));
  if (comps.size() == 1) return tw_connected(g);
  TreeDecomposition td;
  int prev_root = -1;
  for (const auto& c : comps) {
    std::vector<int> map;
    Graph sub = relabel_subgraph(g, c.vertices, map);
    TwResult child = tw_connected(sub);
    int offset = splice_td(td, child.td, map, g.n());
    if (prev_root >= 0) td.edges.push_back({prev_root, offset});
    prev_root = offset;
  }
  return {td.width(), td};
}

}  // namespace planartw
