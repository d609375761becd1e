#include "planartw/minsep.hpp"

#include <stdexcept>

namespace planartw {

namespace {

// Shared filter: keep a chordless cycle of L_G iff it is a minimal
// separator of G, and attach its two full components.
Generator<MinSep> filter_cycles(const Graph& g, Graph lsub, EventCounter* ev) {
  auto cycles = chordless_cycles(lsub, ev);
  while (cycles.advance()) {
    const ChordlessCycle& c = cycles.current();
    bool minimal = is_minimal_separator(g, c.vertices);
    if (!minimal) {
      if (c.order.size() >= 4)
        throw std::logic_error(
            "size >= 4 chordless latching cycle is not a minimal separator");
      continue;
    }
    MinSep ms;
    ms.vertices = c.vertices;
    ms.cycle_order = c.order;
    auto comps = components(g, c.vertices);
    if (comps.size() != 2 || comps[0].neighborhood != c.vertices ||
        comps[1].neighborhood != c.vertices)
      throw std::logic_error(
          "minimal separator without exactly two full components");
    ms.sides[0] = std::move(comps[0]);
    ms.sides[1] = std::move(comps[1]);
    co_yield ms;
  }
}

}  // namespace

Generator<MinSep> minimal_separators(const Graph& g, const LatchingGraph& l,
                                     EventCounter* ev) {
  return filter_cycles(g, l.graph(), ev);
}

Generator<MinSep> minimal_separators_avoiding(const Graph& g,
                                              const LatchingGraph& l, int v,
                                              EventCounter* ev) {
  VertexSet keep = VertexSet::full(g.n());
  keep.reset(v);
  return filter_cycles(g, l.induced(keep), ev);
}

}  // namespace planartw
