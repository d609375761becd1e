#pragma once

#include <vector>

#include "planartw/chordless.hpp"
#include "planartw/latching.hpp"

namespace planartw {

struct MinSep {
  VertexSet vertices;
  std::vector<int> cycle_order;  // the chordless cycle of L_G on vertices
  Component sides[2];            // the two full components
};

// Minimal separators of a triconnected plane graph, one per chordless
// cycle of L_G with a nonempty region on both sides.  Size-3 cycles
// bounding an empty region are the only ones filtered out; a size >= 4
// chordless cycle is always kept.
Generator<MinSep> minimal_separators(const Graph& g, const LatchingGraph& l,
                                     EventCounter* ev = nullptr);

// Minimal separators not containing v: chordless cycles of L_G[V \ {v}].
Generator<MinSep> minimal_separators_avoiding(const Graph& g,
                                              const LatchingGraph& l, int v,
                                              EventCounter* ev = nullptr);

}  // namespace planartw
