#include "planartw/chordless.hpp"

#include <cassert>
#include <stdexcept>

namespace planartw {

namespace {

bool reachable(const Graph& g, const VertexSet& allowed, int from, int to,
               EventCounter* ev) {
  if (from == to) return true;
  VertexSet seen(g.n());
  seen.set(from);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (ev) ev->tick();
    for (int w : g.neighbors(v)) {
      if (!allowed.test(w) || seen.test(w)) continue;
      if (w == to) return true;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return false;
}

struct Frame {
  int v;          // current end of the prefix
  VertexSet ok;   // vertices still usable past this point (contains v, maybe t)
  size_t cand = 0;  // next neighbor index to try
};

}  // namespace

bool is_chordless_path(const Graph& g, const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); i++)
    for (size_t j = i + 1; j < p.size(); j++) {
      bool adjacent = g.has_edge(p[i], p[j]);
      if (adjacent != (j == i + 1)) return false;
    }
  return true;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& c) {
  const size_t k = c.size();
  if (k < 3) return false;
  for (size_t i = 0; i < k; i++)
    for (size_t j = i + 1; j < k; j++) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

Generator<std::vector<int>> chordless_paths(const Graph& g, int s, int t,
                                            EventCounter* ev) {
  assert(s != t);
  std::vector<int> prefix{s};
  std::vector<Frame> stack;
  {
    VertexSet ok = VertexSet::full(g.n());
    if (!reachable(g, ok, s, t, ev)) co_return;
    stack.push_back({s, std::move(ok), 0});
  }
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (ev) ev->tick();
    if (f.v == t) {
      if (!is_chordless_path(g, prefix))
        throw std::logic_error("emitted path is not chordless");
      co_yield prefix;
      stack.pop_back();
      prefix.pop_back();
      continue;
    }
    const auto& nbrs = g.neighbors(f.v);
    bool pushed = false;
    while (f.cand < nbrs.size()) {
      int w = nbrs[f.cand++];
      if (!f.ok.test(w) || w == f.v) continue;
      if (ev) ev->tick();
      // Vertices past w must avoid the closed neighborhood of v, so that
      // v stays chord-free; w itself is the consecutive exception.
      VertexSet ok2 = f.ok;
      ok2 -= g.neighbor_set(f.v);
      ok2.reset(f.v);
      ok2.set(w);
      if (!reachable(g, ok2, w, t, ev)) continue;
      prefix.push_back(w);
      stack.push_back({w, std::move(ok2), 0});
      pushed = true;
      break;
    }
    if (!pushed) {
      stack.pop_back();
      prefix.pop_back();
    }
  }
}

Generator<ChordlessCycle> chordless_cycles(const Graph& g, EventCounter* ev) {
  const int n = g.n();
  for (int u = 0; u < n; u++) {
    // u is the minimum vertex of the cycle; pick its two cycle-neighbors
    // v < w.  The rest of the cycle is a chordless v-w path avoiding
    // N[u], which keeps the cycle chord-free at u.
    VertexSet avoid = g.neighbor_set(u);
    const auto& nbrs = g.neighbors(u);
    for (size_t i = 0; i < nbrs.size(); i++) {
      int v = nbrs[i];
      if (v < u) continue;
      for (size_t j = i + 1; j < nbrs.size(); j++) {
        int w = nbrs[j];
        if (w < u) continue;
        if (ev) ev->tick();
        Graph h(n);
        for (auto [a, b] : g.edges()) {
          bool oka = (a > u && !avoid.test(a)) || a == v || a == w;
          bool okb = (b > u && !avoid.test(b)) || b == v || b == w;
          if (oka && okb) h.add_edge(a, b);
        }
        auto paths = chordless_paths(h, v, w, ev);
        while (paths.advance()) {
          ChordlessCycle c;
          c.order.push_back(u);
          for (int x : paths.current()) c.order.push_back(x);
          c.vertices = VertexSet(n);
          for (int x : c.order) c.vertices.set(x);
          if (!is_chordless_cycle(g, c.order))
            throw std::logic_error("emitted cycle is not chordless");
          co_yield c;
        }
      }
    }
  }
}

}  // namespace planartw
