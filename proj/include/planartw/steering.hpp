#pragma once

#include <optional>
#include <vector>

#include "planartw/latching.hpp"

namespace planartw {

// Witness that a graph is a steering: S induces a cycle, P induces a path
// (singleton for wheels), and the attachment conditions hold.
struct SteeringCertificate {
  std::vector<int> cycle;  // H[S] in cyclic order
  std::vector<int> path;   // H[P] end to end; singleton allowed
  bool wheel() const { return path.size() == 1; }
};

// True iff r is a singleton on the cycle or an edge of it.
bool is_slot(const std::vector<int>& cycle, const VertexSet& r);

bool check_certificate(const Graph& h, const VertexSet& hv,
                       const SteeringCertificate& cert);

// Search all bipartitions admissible by the degree constraints; returns
// the certificate with lexicographically smallest P, or nullopt.
std::optional<SteeringCertificate> find_certificate(const Graph& h,
                                                    const VertexSet& hv);

// PMC test via the latching characterization: L_G[x] must be a plane
// graph (no base face holding 4+ members of x) and an abstract steering.
bool is_pmc_by_steering(const LatchingGraph& l, const VertexSet& x);

}  // namespace planartw
