#pragma once

// Exhaustive reference implementations used only by the tests. They share no
// search code with the library beyond the graph model itself.

#include <cstdint>
#include <vector>

#include "tempocut/rational.hpp"
#include "tempocut/tvg.hpp"

namespace oracle {

using namespace tempocut;

/// EX1: s -> a active {1,2}, a -> d active {2,3}, T = 3.
TimeVaryingGraph ex1();

/// Maximum set of pairwise non-interfering journeys over all enumerated
/// journeys.
int max_disjoint_journeys(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta);

/// Maximum set of journeys sharing no edge.
int max_edge_disjoint_journeys(const TimeVaryingGraph& g, NodeId s, NodeId d);

/// Fewest delta-removals (any head in 1..T) disconnecting the pair.
int min_delta_cut(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta);

/// Fewest edges whose permanent removal disconnects the pair.
int min_edge_cut(const TimeVaryingGraph& g, NodeId s, NodeId d);

/// Minimum total weight of a contact set disconnecting the pair, where the
/// weight of contact (e, t) is 1/K with K the densest same-edge delta-window
/// through t, computed here from scratch.
Rational min_weight_contact_cut(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta);

/// Reachability by search over (node, slot) states.
bool reachable_by_states(const TimeVaryingGraph& g, NodeId s, NodeId d);

/// Number of source-to-sink paths of the Line Graph, by depth-first counting.
std::int64_t line_graph_path_count(const TimeVaryingGraph& g, NodeId s, NodeId d);

/// Small random graph with arbitrary (not scale-free) topology.
TimeVaryingGraph small_random_graph(int nodes, int horizon, double edge_p, double active_p,
                                    std::uint64_t seed);

}  // namespace oracle
