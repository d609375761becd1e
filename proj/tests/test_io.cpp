#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "planartw/io.hpp"
#include "planartw/oracle.hpp"

using namespace planartw;

TEST_SUITE("io") {
  TEST_CASE("read_gr parses the pace format") {
    std::istringstream in(
        "c a complete graph\np tw 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    Graph g = read_gr(in);
    CHECK(g.n() == 4);
    CHECK(g.m() == 6);
    CHECK(g.has_edge(0, 3));
  }

  TEST_CASE("gr roundtrip") {
    Graph g = oracle::cube_graph();
    std::ostringstream out;
    write_gr(out, g);
    std::istringstream in(out.str());
    Graph h = read_gr(in);
    CHECK(g.edges() == h.edges());
  }

  TEST_CASE("gr parse errors") {
    std::istringstream bad_header("p twx 4 6\n");
    CHECK_THROWS_AS(read_gr(bad_header), ParseError);
    std::istringstream out_of_range("p tw 3 1\n1 5\n");
    CHECK_THROWS_AS(read_gr(out_of_range), ParseError);
    std::istringstream wrong_count("p tw 3 2\n1 2\n");
    CHECK_THROWS_AS(read_gr(wrong_count), ParseError);
    std::istringstream empty("c nothing\n");
    CHECK_THROWS_AS(read_gr(empty), ParseError);
  }

  TEST_CASE("td roundtrip") {
    TreeDecomposition td;
    td.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
    td.edges = {{0, 1}};
    std::ostringstream out;
    write_td(out, td, 3);
    CHECK(out.str().substr(0, 11) == "s td 2 2 3\n");
    std::istringstream in(out.str());
    int n = 0;
    TreeDecomposition back = read_td(in, &n);
    CHECK(n == 3);
    CHECK(back.bags == td.bags);
    CHECK(back.edges == td.edges);
  }

  TEST_CASE("single bag header for k4") {
    TreeDecomposition td;
    td.bags = {VertexSet::full(4)};
    std::ostringstream out;
    write_td(out, td, 4);
    std::istringstream lines(out.str());
    std::string first;
    std::getline(lines, first);
    CHECK(first == "s td 1 4 4");
  }

  TEST_CASE("td parse errors") {
    std::istringstream bad_bag("s td 1 2 3\nb 2 1 2\n");
    CHECK_THROWS_AS(read_td(bad_bag), ParseError);
    std::istringstream bad_vertex("s td 1 2 3\nb 1 9\n");
    CHECK_THROWS_AS(read_td(bad_vertex), ParseError);
    std::istringstream missing_bag("s td 2 2 3\nb 1 1 2\n");
    CHECK_THROWS_AS(read_td(missing_bag), ParseError);
  }

  TEST_CASE("rotation sidecar") {
    Graph g = oracle::complete_graph(4);
    std::istringstream ok("1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n");
    PlaneGraph pg = read_rotation(ok, g);
    CHECK(pg.faces().size() == 4);

    std::istringstream not_perm("1: 2 3\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n");
    CHECK_THROWS_AS(read_rotation(not_perm, g), ParseError);

    // permutations, but the rotation is not planar
    std::istringstream wrong_genus(
        "1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 2 3\n");
    CHECK_THROWS_AS(read_rotation(wrong_genus, g), InvalidEmbeddingError);
  }
}
