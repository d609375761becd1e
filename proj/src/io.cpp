#include "planartw/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace planartw {

namespace {

// Next non-comment, non-blank line.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') continue;
    return true;
  }
  return false;
}

int parse_vertex(std::istream& tok, int n, const char* what) {
  long v;
  if (!(tok >> v)) throw ParseError(std::string("missing ") + what);
  if (v < 1 || v > n)
    throw ParseError(std::string(what) + " out of range: " + std::to_string(v));
  return int(v - 1);
}

}  // namespace

Graph read_gr(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing problem line");
  std::istringstream head(line);
  std::string p, tw;
  long n, m;
  if (!(head >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
    throw ParseError("malformed header: " + line);
  Graph g{int(n)};
  long seen = 0;
  while (next_line(in, line)) {
    std::istringstream tok(line);
    int u = parse_vertex(tok, int(n), "edge endpoint");
    int v = parse_vertex(tok, int(n), "edge endpoint");
    std::string extra;
    if (tok >> extra) throw ParseError("trailing tokens on edge line: " + line);
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    seen++;
  }
  if (seen != m)
    throw ParseError("edge count mismatch: header " + std::to_string(m) +
                     ", found " + std::to_string(seen));
  return g;
}

void write_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << (u + 1) << " " << (v + 1) << "\n";
}

TreeDecomposition read_td(std::istream& in, int* n_out) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("missing solution line");
  std::istringstream head(line);
  std::string s, td_tag;
  long k, w1, n;
  if (!(head >> s >> td_tag >> k >> w1 >> n) || s != "s" || td_tag != "td" ||
      k < 0 || n < 0)
    throw ParseError("malformed td header: " + line);
  TreeDecomposition td;
  td.bags.assign(k, VertexSet(int(n)));
  std::vector<bool> have(k, false);
  while (next_line(in, line)) {
    std::istringstream tok(line);
    std::string first;
    tok >> first;
    if (first == "b") {
      long i;
      if (!(tok >> i) || i < 1 || i > k)
        throw ParseError("bag index out of range: " + line);
      if (have[i - 1]) throw ParseError("duplicate bag: " + line);
      have[i - 1] = true;
      long v;
      while (tok >> v) {
        if (v < 1 || v > n)
          throw ParseError("bag vertex out of range: " + line);
        td.bags[i - 1].set(int(v - 1));
      }
    } else {
      long a, b;
      std::istringstream etok(line);
      if (!(etok >> a >> b) || a < 1 || a > k || b < 1 || b > k)
        throw ParseError("malformed tree edge: " + line);
      td.edges.push_back({int(a - 1), int(b - 1)});
    }
  }
  for (long i = 0; i < k; i++)
    if (!have[i])
      throw ParseError("missing bag " + std::to_string(i + 1));
  if (n_out) *n_out = int(n);
  return td;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << " " << (td.width() + 1) << " " << n
      << "\n";
  for (size_t i = 0; i < td.bags.size(); i++) {
    out << "b " << (i + 1);
    for (int v : td.bags[i].to_vector()) out << " " << (v + 1);
    out << "\n";
  }
  for (auto [a, b] : td.edges) out << (a + 1) << " " << (b + 1) << "\n";
}

PlaneGraph read_rotation(std::istream& in, const Graph& g) {
  std::vector<std::vector<int>> rot(g.n());
  std::vector<bool> have(g.n(), false);
  std::string line;
  while (next_line(in, line)) {
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("rotation line missing ':': " + line);
    std::istringstream vh(line.substr(0, colon));
    int v = parse_vertex(vh, g.n(), "rotation vertex");
    if (have[v]) throw ParseError("duplicate rotation for vertex " +
                                  std::to_string(v + 1));
    have[v] = true;
    std::istringstream tok(line.substr(colon + 1));
    long u;
    while (tok >> u) {
      if (u < 1 || u > g.n())
        throw ParseError("rotation neighbor out of range: " + line);
      rot[v].push_back(int(u - 1));
    }
  }
  for (int v = 0; v < g.n(); v++) {
    if (!have[v] && g.degree(v) > 0)
      throw ParseError("missing rotation for vertex " + std::to_string(v + 1));
    std::vector<int> sorted = rot[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v))
      throw ParseError("rotation of vertex " + std::to_string(v + 1) +
                       " is not a permutation of its neighbors");
  }
  return PlaneGraph(g, std::move(rot));  // validates the Euler count
}

Graph read_gr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_gr(in);
}

TreeDecomposition read_td_file(const std::string& path, int* n_out) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_td(in, n_out);
}

}  // namespace planartw
