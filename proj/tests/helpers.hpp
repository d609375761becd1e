#pragma once

#include <set>
#include <vector>

#include "planartw/generator.hpp"
#include "planartw/graph.hpp"

namespace planartw::testing {

inline std::set<VertexSet> collect_sets(Generator<VertexSet> gen) {
  std::set<VertexSet> out;
  while (gen.advance()) out.insert(gen.current());
  return out;
}

// Drains a generator, projecting each item through f; also verifies no
// duplicate projections appear in the raw stream.
template <class G, class F>
auto drain_unique(G gen, F f, bool* dup = nullptr) {
  std::set<decltype(f(gen.current()))> out;
  if (dup) *dup = false;
  while (gen.advance()) {
    auto key = f(gen.current());
    if (!out.insert(key).second && dup) *dup = true;
  }
  return out;
}

inline std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); mask++) {
    VertexSet x(n);
    for (int v = 0; v < n; v++)
      if ((mask >> v) & 1) x.set(v);
    out.push_back(x);
  }
  return out;
}

}  // namespace planartw::testing
