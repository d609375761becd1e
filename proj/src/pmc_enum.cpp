#include "planartw/pmc_enum.hpp"

#include <map>
#include <memory>
#include <set>
#include <stdexcept>

namespace planartw {

namespace {

// Is L[p] a path with end set {u1,u2}?  (|p| >= 2.)
bool induced_path_between(const Graph& lg, const VertexSet& p, int u1, int u2) {
  if (p.count() < 2 || !p.test(u1) || !p.test(u2)) return false;
  for (int v = p.first(); v >= 0; v = p.next(v)) {
    int deg = int((lg.neighbor_set(v) & p).count());
    bool end = (v == u1 || v == u2);
    if (deg != (end ? 1 : 2)) return false;
  }
  return is_connected(lg, p);
}

struct Desc {
  enum Kind { kWheel, kPairA, kTripleB } kind;
  int u1 = -1, u2 = -1;
  VertexSet span;  // vertex set of A or B
};

struct CompoCtx {
  const Graph* g;
  const LatchingGraph* l;
  MinSep sep;
  Component c;        // the component the stream is for
  Component opposite; // C'
  std::vector<Desc> descs;
  PmcStats* st;
};

void tick(PmcStats* st, long long k = 1) {
  if (st) st->events.tick(k);
}

Generator<VertexSet> wheel_gen(std::shared_ptr<CompoCtx> ctx) {
  const VertexSet& cp = ctx->opposite.vertices;
  for (int u = cp.first(); u >= 0; u = cp.next(u)) {
    tick(ctx->st);
    VertexSet ns = ctx->l->graph().neighbor_set(u) & ctx->sep.vertices;
    if (ns.empty() || is_slot(ctx->sep.cycle_order, ns)) continue;
    VertexSet x = ctx->sep.vertices;
    x.set(u);
    if (!is_pmc_by_steering(*ctx->l, x)) {
      if (ctx->st) ctx->st->filter_rejections++;
      continue;
    }
    co_yield x;
  }
}

Generator<VertexSet> path_gen(std::shared_ptr<CompoCtx> ctx, size_t idx) {
  const Desc& d = ctx->descs[idx];
  Graph sub = ctx->l->induced(d.span);
  auto paths = chordless_paths(sub, d.u1, d.u2,
                               ctx->st ? &ctx->st->events : nullptr);
  while (paths.advance()) {
    VertexSet x = ctx->sep.vertices;
    for (int v : paths.current()) x.set(v);
    if (!is_pmc_by_steering(*ctx->l, x)) {
      if (ctx->st) ctx->st->filter_rejections++;
      continue;
    }
    co_yield x;
  }
}

bool raw_member(const CompoCtx& ctx, const VertexSet& x, size_t idx) {
  const Desc& d = ctx.descs[idx];
  VertexSet p = x - ctx.sep.vertices;
  switch (d.kind) {
    case Desc::kWheel: {
      if (p.count() != 1) return false;
      int u = p.first();
      if (!ctx.opposite.vertices.test(u)) return false;
      VertexSet ns = ctx.l->graph().neighbor_set(u) & ctx.sep.vertices;
      return !ns.empty() && !is_slot(ctx.sep.cycle_order, ns);
    }
    case Desc::kPairA:
    case Desc::kTripleB:
      if (!p.subset_of(d.span)) return false;
      return induced_path_between(ctx.l->graph(), p, d.u1, d.u2);
  }
  return false;
}

}  // namespace

std::vector<Port> ports(const LatchingGraph& l, const MinSep& s,
                        const Component& opposite) {
  std::vector<Port> out;
  const VertexSet& cp = opposite.vertices;
  for (int u = cp.first(); u >= 0; u = cp.next(u)) {
    VertexSet slot = l.graph().neighbor_set(u) & s.vertices;
    if (!slot.empty() && is_slot(s.cycle_order, slot)) out.push_back({u, slot});
  }
  return out;
}

std::vector<ValidPair> valid_pairs(const std::vector<Port>& ports,
                                   const MinSep& s) {
  const int k = int(s.cycle_order.size());
  auto cycle_neighbors = [&](int v) {
    for (int i = 0; i < k; i++)
      if (s.cycle_order[i] == v)
        return std::pair<int, int>{s.cycle_order[(i + k - 1) % k],
                                   s.cycle_order[(i + 1) % k]};
    return std::pair<int, int>{-1, -1};
  };
  auto slot_matches = [&](const VertexSet& slot, int s1, int hinge) {
    if (slot.count() == 1) return slot.first() == s1;
    return slot.test(s1) && slot.test(hinge);
  };
  std::vector<ValidPair> out;
  for (size_t i = 0; i < ports.size(); i++)
    for (size_t j = i + 1; j < ports.size(); j++) {
      VertexSet u = ports[i].slot | ports[j].slot;
      if (is_slot(s.cycle_order, u)) continue;
      ValidPair vp{ports[i].vertex, ports[j].vertex, {}};
      for (int h = s.vertices.first(); h >= 0; h = s.vertices.next(h)) {
        auto [a, b] = cycle_neighbors(h);
        if ((slot_matches(ports[i].slot, a, h) &&
             slot_matches(ports[j].slot, b, h)) ||
            (slot_matches(ports[i].slot, b, h) &&
             slot_matches(ports[j].slot, a, h)))
          vp.hinges.push_back(h);
      }
      out.push_back(std::move(vp));
    }
  return out;
}

InducedSub graph_A(const LatchingGraph& l, const MinSep& s,
                   const Component& opposite, int u1, int u2) {
  VertexSet w = opposite.vertices;
  w -= neighborhood(l.graph(), s.vertices);
  w.set(u1);
  w.set(u2);
  return {l.induced(w), w};
}

InducedSub graph_B(const LatchingGraph& l, const MinSep& s,
                   const Component& opposite, int u1, int u2, int hinge) {
  VertexSet w = opposite.vertices;
  w -= neighborhood(l.graph(), s.vertices);
  w |= l.graph().neighbor_set(hinge) & opposite.vertices;
  w.set(u1);
  w.set(u2);
  return {l.induced(w), w};
}

Generator<PMC> pmcs_for_component(const Graph& g, const LatchingGraph& l,
                                  MinSep s, Component c, PmcStats* st) {
  auto ctx = std::make_shared<CompoCtx>();
  ctx->g = &g;
  ctx->l = &l;
  ctx->sep = std::move(s);
  ctx->c = std::move(c);
  ctx->opposite = ctx->sep.sides[0].vertices == ctx->c.vertices
                      ? ctx->sep.sides[1]
                      : ctx->sep.sides[0];
  ctx->st = st;

  auto port_list = ports(l, ctx->sep, ctx->opposite);
  auto pairs = valid_pairs(port_list, ctx->sep);
  tick(st, (long long)port_list.size() + 1);

  std::vector<Generator<VertexSet>> gens;
  // Category order fixes ownership: wheel candidates, then (S,P)-steerings
  // from A, then hinge steerings from B; the largest matching index wins,
  // so hinge triples own the |S| = 4 overlap.
  ctx->descs.push_back({Desc::kWheel, -1, -1, VertexSet(g.n())});
  gens.push_back(wheel_gen(ctx));
  for (const auto& vp : pairs) {
    auto a = graph_A(l, ctx->sep, ctx->opposite, vp.u1, vp.u2);
    ctx->descs.push_back({Desc::kPairA, vp.u1, vp.u2, a.vertices});
  }
  for (const auto& vp : pairs)
    for (int h : vp.hinges) {
      auto b = graph_B(l, ctx->sep, ctx->opposite, vp.u1, vp.u2, h);
      ctx->descs.push_back({Desc::kTripleB, vp.u1, vp.u2, b.vertices});
    }
  for (size_t i = 1; i < ctx->descs.size(); i++) gens.push_back(path_gen(ctx, i));

  UnionStats us;
  auto stream = union_generate<VertexSet>(
      std::move(gens),
      [ctx](const VertexSet& x, size_t i) { return raw_member(*ctx, x, i); },
      &us);
  while (stream.advance()) {
    PMC pmc;
    pmc.vertices = stream.current();
    auto cert = find_certificate(l.induced(pmc.vertices), pmc.vertices);
    if (!cert) throw std::logic_error("emitted PMC lost its certificate");
    pmc.certificate = *cert;
    pmc.witness_separator = ctx->sep.vertices;
    pmc.witness_component = ctx->c.vertices;
    co_yield pmc;
  }
  if (st) {
    st->suppressions += us.suppressions;
    st->invariant_violations += us.invariant_violations;
    st->delay_bound_violations += us.delay_bound_violations;
  }
}

Generator<PMC> pmcs(const Graph& g, const LatchingGraph& l, PmcStats* st) {
  const int n = g.n();
  long long last_emit = st ? st->events.count : 0;
  auto note_emit = [&]() {
    if (!st) return;
    long long gap = st->events.count - last_emit;
    if (gap > st->max_events_between_emissions)
      st->max_events_between_emissions = gap;
    last_emit = st->events.count;
    st->emissions++;
  };

  // K4-type PMCs: latching triangles extended by a common neighbor, kept
  // when the result is a K4 drawn without crossings.
  std::set<VertexSet> k4s;
  const Graph& lg = l.graph();
  for (int a = 0; a < n; a++)
    for (int b : lg.neighbors(a)) {
      if (b <= a) continue;
      for (int c : lg.neighbors(b)) {
        if (c <= b || !lg.has_edge(a, c)) continue;
        VertexSet common = lg.neighbor_set(a) & lg.neighbor_set(b) &
                           lg.neighbor_set(c);
        tick(st);
        for (int w = common.first(); w >= 0; w = common.next(w)) {
          VertexSet x = VertexSet::of(n, {a, b, c, w});
          if (l.is_plane_induced(x)) k4s.insert(x);
        }
      }
    }
  for (const VertexSet& x : k4s) {
    if (!is_pmc_by_steering(l, x)) {
      if (st) st->filter_rejections++;
      continue;
    }
    PMC pmc;
    pmc.vertices = x;
    pmc.certificate = *find_certificate(l.induced(x), x);
    pmc.k4_type = true;
    pmc.witness_separator = VertexSet(n);
    pmc.witness_component = VertexSet(n);
    note_emit();
    co_yield pmc;
  }

  // Pi'(G): per-vertex families over separators avoiding v.
  std::vector<Generator<PMC>> gens;
  for (int v = 0; v < n; v++) {
    auto gen_v = [](const Graph& g, const LatchingGraph& l, int v,
                    PmcStats* st) -> Generator<PMC> {
      auto seps = minimal_separators_avoiding(g, l, v,
                                              st ? &st->events : nullptr);
      while (seps.advance()) {
        const MinSep& s = seps.current();
        if (s.vertices.count() < 4) continue;
        Component c =
            s.sides[0].vertices.test(v) ? s.sides[0] : s.sides[1];
        long long yielded = 0;
        auto sub = pmcs_for_component(g, l, s, c, st);
        while (sub.advance()) {
          yielded++;
          co_yield sub.current();
        }
        if (yielded == 0)
          throw std::logic_error("Pi(G,C) came out empty for a separator");
      }
    };
    gens.push_back(gen_v(g, l, v, st));
  }
  UnionStats us;
  auto stream = union_generate<PMC>(
      std::move(gens),
      [&g](const PMC& pmc, size_t v) {
        if (pmc.vertices.test(int(v))) return false;
        for (const auto& c : components(g, pmc.vertices))
          if (c.vertices.test(int(v))) return c.neighborhood.count() >= 4;
        return false;
      },
      &us);
  while (stream.advance()) {
    note_emit();
    co_yield stream.current();
  }
  if (st) {
    st->suppressions += us.suppressions;
    st->invariant_violations += us.invariant_violations;
    st->delay_bound_violations += us.delay_bound_violations;
  }
}

Generator<PMC> pmcs_of(Graph g, PmcStats* st) {
  if (!is_planar(g)) throw NotPlanarError();
  if (g.n() <= 3 && is_clique(g, VertexSet::full(g.n())) && g.n() > 0) {
    // Complete tiny graphs: the whole vertex set is the unique PMC.
    PMC pmc;
    pmc.vertices = VertexSet::full(g.n());
    pmc.witness_separator = VertexSet(g.n());
    pmc.witness_component = VertexSet(g.n());
    if (st) st->emissions++;
    co_yield pmc;
    co_return;
  }
  if (!is_triconnected(g)) throw NotTriconnectedError();
  PlaneGraph pg = embed(g);
  LatchingGraph l = build_latching(pg);
  auto stream = pmcs(g, l, st);
  while (stream.advance()) co_yield stream.current();
}

}  // namespace planartw
