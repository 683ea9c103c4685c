#pragma once

#include <cstddef>
#include <vector>

#include "tempocut/tvg.hpp"

namespace tempocut {

/// Pairwise delta-disjoint s-d journeys.
struct FlowResult {
  std::vector<Journey> journeys;
  int delta = 1;
  bool exact = false;

  int count() const { return static_cast<int>(journeys.size()); }
};

/// Default search-node budget of the exact oracles.
inline constexpr std::size_t kDefaultSearchCap = 5'000'000;

/// Greedy approximation: repeatedly rebuild the Line Graph of the remaining
/// graph, take a min-hop s-d path and delete the interfering contacts of its
/// journey. Requires 1 <= delta <= T and s != d. A nonnegative `limit` stops
/// after that many journeys.
FlowResult greedy_maxflow_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                                int limit = -1);

/// Maximum-cardinality delta-disjoint journey set by branch and bound.
///
/// The search branches on the first contact c of a min-hop journey: either no
/// chosen journey uses c, or exactly one does and it is enumerated hop by hop
/// among node-simple extensions of c. Node-simple journeys suffice because
/// shortcutting a cycle only drops hops. Bounds: contact-disjoint flow in the
/// time-expanded graph and a static edge cut whose capacities are the
/// per-edge delta-packings. The greedy result seeds the incumbent.
///
/// Throws CapacityError once more than `cap` search nodes are expanded.
FlowResult exact_maxflow_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                               std::size_t cap = kDefaultSearchCap);

/// Upper bound on OPT / ALG for the greedy: 3 sqrt(|E| (T/delta + 1)) + 2.
double greedy_ratio_bound(int edge_count, int horizon, int delta);

/// alg <= opt and opt <= greedy_ratio_bound * max(alg, 1).
bool greedy_bound_certificate(int alg_count, int opt_count, int edge_count, int horizon, int delta);

/// Upper bound on MaxFlow_delta of the contacts in `mask`, used by the
/// exact search; exposed for testing.
int maxflow_delta_upper_bound(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                              const ContactMask& mask);

}  // namespace tempocut
