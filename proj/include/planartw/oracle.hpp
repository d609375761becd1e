#pragma once

#include <set>
#include <string>
#include <vector>

#include "planartw/graph.hpp"

namespace planartw {
namespace oracle {

// Brute-force references, independent of the enumeration pipeline; they
// share nothing with it beyond the Graph substrate.

std::set<VertexSet> pmcs_bruteforce(const Graph& g);      // n <= 16
std::set<VertexSet> minseps_bruteforce(const Graph& g);   // n <= 16
int treewidth_bruteforce(const Graph& g);                 // n <= 20

// All chordless cycles, canonical rotation (min vertex first, smaller
// neighbor second), via exhaustive simple-cycle search.
std::set<std::vector<int>> chordless_cycles_bruteforce(const Graph& g);
// All chordless s-t paths as ordered lists from s.
std::set<std::vector<int>> chordless_paths_bruteforce(const Graph& g, int s,
                                                      int t);

struct CorpusGraph {
  std::string name;
  Graph graph;
  bool planar = false;
  bool biconnected = false;
  bool triconnected = false;
};

// Named constructions.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph wheel_graph(int rim);     // rim cycle plus hub
Graph prism_graph(int k);
Graph antiprism_graph(int k);
Graph cube_graph();
Graph octahedron_graph();
Graph dodecahedron_graph();
Graph icosahedron_graph();
Graph grid_graph(int rows, int cols);
Graph theta_graph(int a, int b, int c);  // internal path lengths

// Triangulation grown from a triconnected planar base (itself a
// triangulation) by repeated vertex insertion into a random face;
// insertion preserves triconnectivity and planarity.
Graph grow_triangulation(const Graph& base, int n, unsigned seed);

// Random triconnected planar graph: grow_triangulation from a randomly
// chosen seed (K4, octahedron, or icosahedron).
Graph random_triconnected_planar(int n, unsigned seed);

// Deterministic corpus keyed by (seed, n_max): platonic solids, wheels,
// prisms, antiprisms, random triangulation-grown graphs, and
// non-triconnected planar graphs for the decomposition pipeline.
std::vector<CorpusGraph> corpus(unsigned seed, int n_max);

}  // namespace oracle
}  // namespace planartw
