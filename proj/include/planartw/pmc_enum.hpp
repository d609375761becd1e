#pragma once

#include <vector>

#include "planartw/minsep.hpp"
#include "planartw/polydelay.hpp"
#include "planartw/steering.hpp"

namespace planartw {

struct Port {
  int vertex;      // u in C', the full component opposite C
  VertexSet slot;  // N_L(u) cap S, a slot of the cycle L_G[S]
};

struct ValidPair {
  int u1, u2;
  std::vector<int> hinges;
};

struct PMC {
  VertexSet vertices;
  SteeringCertificate certificate;
  bool k4_type = false;
  VertexSet witness_separator;  // empty for K4-type
  VertexSet witness_component;
};

struct PmcStats {
  EventCounter events;
  long long emissions = 0;
  long long max_events_between_emissions = 0;
  long long suppressions = 0;
  long long invariant_violations = 0;
  long long delay_bound_violations = 0;
  long long filter_rejections = 0;
};

std::vector<Port> ports(const LatchingGraph& l, const MinSep& s,
                        const Component& opposite);

std::vector<ValidPair> valid_pairs(const std::vector<Port>& ports,
                                   const MinSep& s);

struct InducedSub {
  Graph graph;        // ids preserved
  VertexSet vertices;
};

// A(C,u1,u2): latching subgraph on (C' \ N_L(S)) cup {u1,u2}.
InducedSub graph_A(const LatchingGraph& l, const MinSep& s,
                   const Component& opposite, int u1, int u2);

// B(C,u1,u2,s): A's vertex set extended by N_L(hinge) cap C'.
InducedSub graph_B(const LatchingGraph& l, const MinSep& s,
                   const Component& opposite, int u1, int u2, int hinge);

// Pi(G,C): all PMCs X with C a component of G - X, for |N(C)| >= 4.
Generator<PMC> pmcs_for_component(const Graph& g, const LatchingGraph& l,
                                  MinSep s, Component c,
                                  PmcStats* st = nullptr);

// Full Pi(G) for a triconnected plane graph: K4-type PMCs first, then the
// per-vertex union of component streams, deduplicated by the scheduler.
Generator<PMC> pmcs(const Graph& g, const LatchingGraph& l,
                    PmcStats* st = nullptr);

// Convenience wrapper owning the embedding; throws NotTriconnected /
// NotPlanar on first advance.
Generator<PMC> pmcs_of(Graph g, PmcStats* st = nullptr);

}  // namespace planartw
