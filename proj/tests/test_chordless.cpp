#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "planartw/chordless.hpp"
#include "planartw/oracle.hpp"

using namespace planartw;

namespace {

std::set<std::vector<int>> stream_cycles(const Graph& g, bool* dup = nullptr) {
  auto gen = chordless_cycles(g);
  return planartw::testing::drain_unique(
      std::move(gen), [](const ChordlessCycle& c) { return c.order; }, dup);
}

std::set<std::vector<int>> stream_paths(const Graph& g, int s, int t,
                                        bool* dup = nullptr) {
  auto gen = chordless_paths(g, s, t);
  return planartw::testing::drain_unique(
      std::move(gen), [](const std::vector<int>& p) { return p; }, dup);
}

}  // namespace

TEST_SUITE("chordless") {
  TEST_CASE("cycle stream on small graphs matches brute force") {
    std::vector<Graph> graphs = {
        oracle::cycle_graph(6),       oracle::complete_graph(4),
        oracle::octahedron_graph(),   oracle::cube_graph(),
        oracle::wheel_graph(6),       oracle::prism_graph(4),
        oracle::theta_graph(2, 2, 2), oracle::grid_graph(3, 3),
        oracle::path_graph(5)};
    for (const Graph& g : graphs) {
      bool dup = false;
      CHECK(stream_cycles(g, &dup) == oracle::chordless_cycles_bruteforce(g));
      CHECK(!dup);
    }
  }

  TEST_CASE("canonical rotation") {
    Graph g = oracle::cycle_graph(5);
    auto cycles = stream_cycles(g);
    REQUIRE(cycles.size() == 1);
    CHECK(*cycles.begin() == std::vector<int>{0, 1, 2, 3, 4});
    Graph k = oracle::complete_graph(4);
    CHECK(stream_cycles(k).size() == 4);  // the four triangles
  }

  TEST_CASE("path stream matches brute force for every pair") {
    std::vector<Graph> graphs = {oracle::cube_graph(), oracle::wheel_graph(5),
                                 oracle::grid_graph(2, 4),
                                 oracle::octahedron_graph()};
    for (const Graph& g : graphs)
      for (int s = 0; s < g.n(); s++)
        for (int t = s + 1; t < g.n(); t++) {
          bool dup = false;
          CHECK(stream_paths(g, s, t, &dup) ==
                oracle::chordless_paths_bruteforce(g, s, t));
          CHECK(!dup);
        }
  }

  TEST_CASE("checkers") {
    Graph g = oracle::cycle_graph(6);
    CHECK(is_chordless_path(g, {0, 1, 2, 3}));
    CHECK(is_chordless_cycle(g, {0, 1, 2, 3, 4, 5}));
    CHECK(!is_chordless_cycle(g, {0, 1, 2, 3}));  // 3-0 is not an edge
    Graph w = oracle::wheel_graph(5);             // hub 5
    CHECK(is_chordless_cycle(w, {0, 1, 2, 3, 4}));  // rim; the hub is
                                                    // outside the cycle
    CHECK(is_chordless_cycle(w, {0, 1, 5}));
    CHECK(!is_chordless_cycle(w, {0, 1, 2, 5}));  // spokes 0-5 cut it
    Graph k = oracle::complete_graph(4);
    CHECK(!is_chordless_path(k, {0, 1, 2}));  // chord 0-2
  }

  TEST_CASE("events are counted") {
    EventCounter ev;
    Graph g = oracle::cube_graph();
    auto gen = chordless_cycles(g, &ev);
    while (gen.advance()) {
    }
    CHECK(ev.count > 0);
  }
}
