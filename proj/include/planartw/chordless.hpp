#pragma once

#include <vector>

#include "planartw/events.hpp"
#include "planartw/generator.hpp"
#include "planartw/graph.hpp"

namespace planartw {

struct ChordlessCycle {
  // Canonical rotation: minimum vertex first, its smaller cycle-neighbor
  // second.
  std::vector<int> order;
  VertexSet vertices;
};

// All chordless s-t paths, each exactly once, as ordered vertex lists.
// Branches are pruned by a reachability feasibility check, so the delay
// between outputs is polynomial.
Generator<std::vector<int>> chordless_paths(const Graph& g, int s, int t,
                                            EventCounter* ev = nullptr);

// All chordless cycles, each exactly once in canonical rotation.
Generator<ChordlessCycle> chordless_cycles(const Graph& g,
                                           EventCounter* ev = nullptr);

bool is_chordless_path(const Graph& g, const std::vector<int>& p);
bool is_chordless_cycle(const Graph& g, const std::vector<int>& c);

}  // namespace planartw
