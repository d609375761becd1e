#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "planartw/chordless.hpp"
#include "planartw/io.hpp"
#include "planartw/latching.hpp"
#include "planartw/minsep.hpp"
#include "planartw/oracle.hpp"
#include "planartw/pmc_enum.hpp"
#include "planartw/planar.hpp"
#include "planartw/treewidth.hpp"

namespace {

using namespace planartw;

struct Options {
  std::string input;      // .gr path, "-" or empty for stdin
  std::string embedding;  // rotation sidecar
  std::string output;
  std::string td_path;    // check-td
  std::string mode;       // oracle: pmcs | minseps | tw
  long long max_count = -1;
  bool stats = false;
  unsigned seed = 1;
  bool deterministic = true;
  int s = 0, t = 0;  // chordless-paths endpoints, 1-indexed
};

Graph load_graph(const Options& opt) {
  if (opt.input.empty() || opt.input == "-") return read_gr(std::cin);
  return read_gr_file(opt.input);
}

PlaneGraph load_embedding(const Options& opt, const Graph& g) {
  if (!opt.embedding.empty()) {
    std::ifstream in(opt.embedding);
    if (!in) throw ParseError("cannot open " + opt.embedding);
    return read_rotation(in, g);
  }
  return embed(g);
}

std::ostream& open_output(const Options& opt, std::ofstream& file) {
  if (opt.output.empty() || opt.output == "-") return std::cout;
  file.open(opt.output);
  if (!file) throw ParseError("cannot open " + opt.output + " for writing");
  return file;
}

void print_set(std::ostream& out, const VertexSet& x) {
  bool first = true;
  for (int v : x.to_vector()) {
    if (!first) out << " ";
    out << (v + 1);
    first = false;
  }
  out << "\n";
}

void print_list(std::ostream& out, const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); i++)
    out << (i ? " " : "") << (p[i] + 1);
  out << "\n";
}

int run_tw(const Options& opt) {
  Graph g = load_graph(opt);
  TwResult r = treewidth_planar(g);
  std::cout << r.width << "\n";
  if (!opt.output.empty()) {
    std::ofstream file;
    write_td(open_output(opt, file), r.td, g.n());
  }
  return 0;
}

int run_pmcs(const Options& opt) {
  Graph g = load_graph(opt);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  PmcStats st;
  long long emitted = 0;
  if (g.n() <= 3 || is_clique(g, VertexSet::full(g.n()))) {
    auto gen = pmcs_of(g, &st);
    while (gen.advance()) {
      print_set(out, gen.current().vertices);
      if (++emitted == opt.max_count) break;
    }
  } else {
    if (!is_planar(g)) throw NotPlanarError();
    if (!is_triconnected(g)) throw NotTriconnectedError();
    PlaneGraph pg = load_embedding(opt, g);
    LatchingGraph l = build_latching(pg);
    auto gen = pmcs(g, l, &st);
    while (gen.advance()) {
      print_set(out, gen.current().vertices);
      if (++emitted == opt.max_count) break;
    }
  }
  if (opt.stats) {
    std::cerr << "emissions: " << st.emissions << "\n"
              << "events: " << st.events.count << "\n"
              << "max events between emissions: "
              << st.max_events_between_emissions << "\n"
              << "suppressions: " << st.suppressions << "\n"
              << "filter rejections: " << st.filter_rejections << "\n"
              << "invariant violations: " << st.invariant_violations << "\n"
              << "delay bound violations: " << st.delay_bound_violations
              << "\n";
  }
  return 0;
}

int run_minseps(const Options& opt) {
  Graph g = load_graph(opt);
  if (!is_planar(g)) throw NotPlanarError();
  if (!is_triconnected(g)) throw NotTriconnectedError();
  PlaneGraph pg = load_embedding(opt, g);
  LatchingGraph l = build_latching(pg);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  EventCounter ev;
  long long emitted = 0;
  auto gen = minimal_separators(g, l, &ev);
  while (gen.advance()) {
    print_set(out, gen.current().vertices);
    if (++emitted == opt.max_count) break;
  }
  if (opt.stats)
    std::cerr << "emissions: " << emitted << "\nevents: " << ev.count << "\n";
  return 0;
}

int run_latching(const Options& opt) {
  Graph g = load_graph(opt);
  if (!is_planar(g)) throw NotPlanarError();
  PlaneGraph pg = load_embedding(opt, g);
  LatchingGraph l = build_latching(pg);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  for (const auto& e : l.edges()) {
    out << (e.u + 1) << " " << (e.v + 1) << " "
        << (e.chord ? "chord" : "edge");
    if (e.chord) out << " face=" << e.face_id;
    out << "\n";
  }
  return 0;
}

int run_chordless_cycles(const Options& opt) {
  Graph g = load_graph(opt);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  EventCounter ev;
  long long emitted = 0;
  auto gen = chordless_cycles(g, &ev);
  while (gen.advance()) {
    print_list(out, gen.current().order);
    if (++emitted == opt.max_count) break;
  }
  if (opt.stats)
    std::cerr << "emissions: " << emitted << "\nevents: " << ev.count << "\n";
  return 0;
}

int run_chordless_paths(const Options& opt) {
  Graph g = load_graph(opt);
  if (opt.s < 1 || opt.s > g.n() || opt.t < 1 || opt.t > g.n() ||
      opt.s == opt.t)
    throw CLI::ValidationError("--from/--to must be distinct vertices in 1.." +
                               std::to_string(g.n()));
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  EventCounter ev;
  long long emitted = 0;
  auto gen = chordless_paths(g, opt.s - 1, opt.t - 1, &ev);
  while (gen.advance()) {
    print_list(out, gen.current());
    if (++emitted == opt.max_count) break;
  }
  if (opt.stats)
    std::cerr << "emissions: " << emitted << "\nevents: " << ev.count << "\n";
  return 0;
}

int run_check_td(const Options& opt) {
  Graph g = load_graph(opt);
  std::ifstream in(opt.td_path);
  if (!in) throw ParseError("cannot open " + opt.td_path);
  int n = 0;
  TreeDecomposition td = read_td(in, &n);
  if (n != g.n()) {
    std::cout << "invalid: vertex count mismatch\n";
    return 1;
  }
  if (!validate_td(g, td)) {
    std::cout << "invalid\n";
    return 1;
  }
  std::cout << "valid, width " << td.width() << "\n";
  return 0;
}

int run_oracle(const Options& opt) {
  Graph g = load_graph(opt);
  std::ofstream file;
  std::ostream& out = open_output(opt, file);
  if (opt.mode == "tw") {
    out << oracle::treewidth_bruteforce(g) << "\n";
  } else if (opt.mode == "pmcs") {
    for (const auto& x : oracle::pmcs_bruteforce(g)) print_set(out, x);
  } else if (opt.mode == "minseps") {
    for (const auto& s : oracle::minseps_bruteforce(g)) print_set(out, s);
  } else {
    throw CLI::ValidationError("oracle mode must be tw, pmcs, or minseps");
  }
  return 0;
}

int run_corpus(const Options& opt) {
  auto graphs = oracle::corpus(opt.seed, 20);
  for (const auto& cg : graphs) {
    std::cout << cg.name << " n=" << cg.graph.n() << " m=" << cg.graph.m()
              << " planar=" << cg.planar << " biconnected=" << cg.biconnected
              << " triconnected=" << cg.triconnected << "\n";
    if (!opt.output.empty()) {
      std::ofstream f(opt.output + "/" + cg.name + ".gr");
      if (!f) throw ParseError("cannot write into " + opt.output);
      write_gr(f, cg.graph);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact treewidth toolkit for planar graphs"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--input,-i", opt.input, "input .gr file (default stdin)");
  app.add_option("--embedding", opt.embedding,
                 "rotation-system sidecar (default: compute an embedding)");
  app.add_option("--output,-o", opt.output, "output file");
  app.add_option("--max-count", opt.max_count, "stop after this many items");
  app.add_flag("--stats", opt.stats, "print counters to stderr");
  app.add_option("--seed", opt.seed, "random seed");
  app.add_flag("--deterministic,!--no-deterministic", opt.deterministic,
               "deterministic output order (default on)");

  auto* tw = app.add_subcommand("tw", "exact treewidth; width to stdout, "
                                      ".td to --output");
  auto* pm = app.add_subcommand("pmcs", "potential maximal cliques, one per "
                                        "line (triconnected planar input)");
  auto* ms = app.add_subcommand("minseps", "minimal separators, one per line "
                                           "(triconnected planar input)");
  auto* la = app.add_subcommand("latching", "latching-graph edges with "
                                            "origin tags");
  auto* cc = app.add_subcommand("chordless-cycles", "all chordless cycles");
  auto* cp = app.add_subcommand("chordless-paths", "all chordless s-t paths");
  cp->add_option("--from", opt.s, "path start (1-indexed)")->required();
  cp->add_option("--to", opt.t, "path end (1-indexed)")->required();
  auto* ck = app.add_subcommand("check-td", "validate a tree decomposition");
  ck->add_option("--td", opt.td_path, "decomposition file")->required();
  auto* orc = app.add_subcommand("oracle", "brute-force references");
  orc->add_option("mode", opt.mode, "tw | pmcs | minseps")->required();
  auto* co = app.add_subcommand("corpus", "built-in test corpus; .gr files "
                                          "into --output if given");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (tw->parsed()) return run_tw(opt);
    if (pm->parsed()) return run_pmcs(opt);
    if (ms->parsed()) return run_minseps(opt);
    if (la->parsed()) return run_latching(opt);
    if (cc->parsed()) return run_chordless_cycles(opt);
    if (cp->parsed()) return run_chordless_paths(opt);
    if (ck->parsed()) return run_check_td(opt);
    if (orc->parsed()) return run_oracle(opt);
    if (co->parsed()) return run_corpus(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidEmbeddingError& e) {
    std::cerr << "invalid embedding: " << e.what() << "\n";
    return 2;
  } catch (const NotPlanarError&) {
    std::cerr << "error: input graph is not planar\n";
    return 3;
  } catch (const NotTriconnectedError&) {
    std::cerr << "error: input graph is not triconnected\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
