#pragma once

#include <iosfwd>
#include <string>

#include "planartw/graph.hpp"
#include "planartw/planar.hpp"
#include "planartw/treewidth.hpp"

namespace planartw {

// PACE-2017 graph format: header `p tw <n> <m>`, one 1-indexed edge per
// line, `c` comment lines ignored.
Graph read_gr(std::istream& in);
void write_gr(std::ostream& out, const Graph& g);

// PACE-2017 decomposition format: `s td <#bags> <width+1> <n>`, `b <i>
// <v...>` bag lines, then tree edges `i j` (all 1-indexed).
TreeDecomposition read_td(std::istream& in, int* n_out = nullptr);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

// Embedding sidecar: per vertex one line `v: u1 u2 ... uk`, the clockwise
// neighbor order.  Validated by the PlaneGraph invariants.
PlaneGraph read_rotation(std::istream& in, const Graph& g);

Graph read_gr_file(const std::string& path);
TreeDecomposition read_td_file(const std::string& path, int* n_out = nullptr);

}  // namespace planartw
