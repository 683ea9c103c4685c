#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tempocut/tvg.hpp"

namespace tempocut {

/// Barabasi-Albert topology (two attachments per new node, each attachment
/// producing both directed edges) with every contact active independently
/// with probability p. Nodes are named v0..v{n-1}.
TimeVaryingGraph gen_random_tvg(int nodes, int horizon, double p, std::uint64_t seed);

/// Graph together with the query pair it was built for.
struct Instance {
  TimeVaryingGraph graph;
  NodeId source = 0;
  NodeId destination = 0;
};

/// Member k >= 1 of a family with MaxFlow_delta = 1 and MinCut_delta = k for
/// every delta >= 2. Level j adds a direct descent from s to d_j and j
/// edge-disjoint bypasses from d_{j-1}, each clashing with the descent.
/// The first three members are checked against the exact oracles at
/// delta 2 and 3 before returning (std::logic_error on mismatch).
Instance gen_counterexample(int k);

struct WeightedArc {
  std::string from;
  std::string to;
  int len = 1;
};

/// Directed graph with positive integer arc lengths and a length budget.
struct WeightedDigraph {
  std::vector<std::string> nodes;
  std::vector<WeightedArc> arcs;
  std::string s;
  std::string d;
  int L = 1;
};

/// Throws InputError on unknown endpoints, nonpositive lengths, L < 1,
/// s == d or repeated node names.
void validate_digraph(const WeightedDigraph& w);

/// Replace each arc of length l by a chain of l unit edges through l - 1
/// fresh nodes; every edge is active in all slots 1..L. Two parallel arcs of
/// length 1 would collapse into one edge and are rejected.
Instance bledp_expand(const WeightedDigraph& w);

/// Largest set of arc-disjoint s-d paths each of total length <= L, by
/// exhaustive search. Throws CapacityError above `max_arcs` arcs.
int bledp_exact(const WeightedDigraph& w, int max_arcs = 24);

/// Random digraph on `nodes` nodes (named u0..) with arc probability
/// `arc_p`, lengths uniform in [1, max_len], s = u0, d = u{nodes-1}.
WeightedDigraph gen_random_digraph(int nodes, double arc_p, int max_len, int L,
                                   std::uint64_t seed);

}  // namespace tempocut
