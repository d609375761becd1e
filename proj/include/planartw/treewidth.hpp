#pragma once

#include <vector>

#include "planartw/graph.hpp"

namespace planartw {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // over bag indices
  int width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, int(b.count()) - 1);
    return w;
  }
};

struct TwResult {
  int width;
  TreeDecomposition td;
};

// Checks the three decomposition axioms and that the bag edges form a tree.
bool validate_td(const Graph& g, const TreeDecomposition& td);

// Bouchitte-Todinca dynamic program over blocks (S, C).  pmc_set must be
// all of Pi(g); throws IncompletePmcSet when no feasible bag covers a
// block.
TwResult treewidth_from_pmcs(const Graph& g,
                             const std::vector<VertexSet>& pmc_set);

// Exact treewidth of an arbitrary planar graph: split at cut vertices,
// recurse across 2-separators, and solve triconnected pieces through the
// latching PMC enumeration plus the DP above.
TwResult treewidth_planar(const Graph& g);

}  // namespace planartw
