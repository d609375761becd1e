#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "planartw/oracle.hpp"
#include "planartw/treewidth.hpp"

using namespace planartw;

TEST_SUITE("treewidth") {
  TEST_CASE("dp on k4") {
    Graph g = oracle::complete_graph(4);
    TwResult r = treewidth_from_pmcs(g, {VertexSet::full(4)});
    CHECK(r.width == 3);
    CHECK(r.td.bags.size() == 1);
    CHECK(validate_td(g, r.td));
  }

  TEST_CASE("dp with oracle pmc sets matches oracle width") {
    for (Graph g : {oracle::octahedron_graph(), oracle::cube_graph(),
                    oracle::icosahedron_graph(), oracle::wheel_graph(7),
                    oracle::grid_graph(3, 3), oracle::cycle_graph(7),
                    oracle::theta_graph(2, 2, 2)}) {
      auto pi = oracle::pmcs_bruteforce(g);
      std::vector<VertexSet> pmc_list(pi.begin(), pi.end());
      TwResult r = treewidth_from_pmcs(g, pmc_list);
      CHECK(r.width == oracle::treewidth_bruteforce(g));
      CHECK(validate_td(g, r.td));
      CHECK(r.td.width() == r.width);
      for (const auto& bag : r.td.bags) CHECK(pi.count(bag) == 1);
    }
  }

  TEST_CASE("incomplete pmc set is detected") {
    Graph g = oracle::cube_graph();
    CHECK_THROWS_AS(treewidth_from_pmcs(g, {}), IncompletePmcSetError);
  }

  TEST_CASE("planar treewidth on simple families") {
    CHECK(treewidth_planar(oracle::path_graph(7)).width == 1);
    CHECK(treewidth_planar(oracle::cycle_graph(8)).width == 2);
    CHECK(treewidth_planar(oracle::complete_graph(4)).width == 3);
    CHECK(treewidth_planar(oracle::grid_graph(3, 3)).width == 3);
    CHECK(treewidth_planar(oracle::complete_graph(1)).width == 0);
    Graph single(1);
    CHECK(treewidth_planar(single).width == 0);
  }

  TEST_CASE("planar treewidth matches the oracle across structures") {
    std::vector<Graph> graphs = {
        oracle::octahedron_graph(),    oracle::cube_graph(),
        oracle::icosahedron_graph(),   oracle::grid_graph(3, 4),
        oracle::grid_graph(4, 4),      oracle::theta_graph(1, 2, 3),
        oracle::prism_graph(5),        oracle::antiprism_graph(5),
        oracle::wheel_graph(9),        oracle::path_graph(2)};
    for (const Graph& g : graphs) {
      TwResult r = treewidth_planar(g);
      CHECK(r.width == oracle::treewidth_bruteforce(g));
      CHECK(validate_td(g, r.td));
      CHECK(r.td.width() == r.width);
    }
  }

  TEST_CASE("disconnected input") {
    Graph g(7);  // a triangle, an edge, two isolated vertices
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    TwResult r = treewidth_planar(g);
    CHECK(r.width == 2);
    CHECK(validate_td(g, r.td));
  }

  TEST_CASE("nonplanar input throws") {
    CHECK_THROWS_AS(treewidth_planar(oracle::complete_graph(5)),
                    NotPlanarError);
  }

  TEST_CASE("validate_td rejects broken decompositions") {
    Graph g = oracle::path_graph(3);  // edges 0-1, 1-2
    TreeDecomposition good;
    good.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
    good.edges = {{0, 1}};
    CHECK(validate_td(g, good));

    TreeDecomposition miss_edge;  // vertex 2 covered, edge 1-2 is not
    miss_edge.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {2})};
    miss_edge.edges = {{0, 1}};
    CHECK(!validate_td(g, miss_edge));

    TreeDecomposition not_tree = good;
    not_tree.edges = {};
    CHECK(!validate_td(g, not_tree));

    TreeDecomposition split;  // occurrences of 0 not connected
    split.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2}),
                  VertexSet::of(3, {0, 2})};
    split.edges = {{0, 1}, {1, 2}};
    CHECK(!split.bags.empty());
    CHECK(!validate_td(g, split));
  }
}
