#include "doctest.h"
#include "helpers.hpp"
#include "planartw/graph.hpp"
#include "planartw/oracle.hpp"

using namespace planartw;

TEST_SUITE("graph") {
  TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of(10, {1, 4, 9});
    CHECK(s.count() == 3);
    CHECK(s.test(4));
    CHECK(!s.test(0));
    CHECK(s.first() == 1);
    CHECK(s.next(1) == 4);
    CHECK(s.next(9) == -1);
    CHECK(s.to_vector() == std::vector<int>{1, 4, 9});
    VertexSet t = VertexSet::of(10, {4});
    CHECK(t.subset_of(s));
    CHECK(!s.subset_of(t));
    CHECK((s - t).count() == 2);
    CHECK((s & t) == t);
    CHECK((s | t) == s);
  }

  TEST_CASE("graph adjacency") {
    Graph g = oracle::cycle_graph(5);
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    CHECK(g.has_edge(0, 4));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.neighbors(0) == std::vector<int>{1, 4});
    CHECK(g.degree(2) == 2);
  }

  TEST_CASE("induced subgraph keeps ids") {
    Graph g = oracle::complete_graph(4);
    Graph h = g.induced_same_ids(VertexSet::of(4, {0, 2, 3}));
    CHECK(h.n() == 4);
    CHECK(h.has_edge(0, 2));
    CHECK(h.has_edge(2, 3));
    CHECK(!h.has_edge(0, 1));
    CHECK(h.degree(1) == 0);
  }

  TEST_CASE("components ordered by minimum vertex") {
    Graph g = oracle::cycle_graph(6);
    auto comps = components(g, VertexSet::of(6, {0, 3}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == VertexSet::of(6, {1, 2}));
    CHECK(comps[0].neighborhood == VertexSet::of(6, {0, 3}));
    CHECK(comps[1].vertices == VertexSet::of(6, {4, 5}));
  }

  TEST_CASE("connectivity") {
    Graph g = oracle::path_graph(4);
    CHECK(is_connected(g));
    CHECK(is_connected(g, VertexSet::of(4, {1, 2})));
    CHECK(!is_connected(g, VertexSet::of(4, {0, 2})));
    Graph two(3);
    two.add_edge(0, 1);
    CHECK(!is_connected(two));
  }

  TEST_CASE("clique test") {
    Graph g = oracle::complete_graph(4);
    CHECK(is_clique(g, VertexSet::full(4)));
    Graph c = oracle::cycle_graph(4);
    CHECK(is_clique(c, VertexSet::of(4, {0, 1})));
    CHECK(!is_clique(c, VertexSet::of(4, {0, 1, 2})));
  }

  TEST_CASE("minimal separators of a cycle") {
    Graph g = oracle::cycle_graph(6);
    for (int i = 0; i < 6; i++)
      CHECK(is_minimal_separator(g, VertexSet::of(6, {i, (i + 3) % 6})));
    CHECK(is_minimal_separator(g, VertexSet::of(6, {0, 2})));
    CHECK(!is_minimal_separator(g, VertexSet::of(6, {0, 1})));
    CHECK(!is_minimal_separator(g, VertexSet::of(6, {0})));
    Graph k = oracle::complete_graph(4);
    for (const auto& s : testing::all_subsets(4))
      CHECK(!is_minimal_separator(k, s));
  }

  TEST_CASE("pmc predicate") {
    Graph k = oracle::complete_graph(4);
    CHECK(is_pmc(k, VertexSet::full(4)));
    CHECK(!is_pmc(k, VertexSet::of(4, {0, 1, 2})));
    // C5: the PMCs are exactly the 3-vertex paths.
    Graph c = oracle::cycle_graph(5);
    for (int i = 0; i < 5; i++)
      CHECK(is_pmc(c, VertexSet::of(5, {i, (i + 1) % 5, (i + 2) % 5})));
    CHECK(!is_pmc(c, VertexSet::of(5, {0, 1})));
    CHECK(!is_pmc(c, VertexSet::full(5)));
  }
}
