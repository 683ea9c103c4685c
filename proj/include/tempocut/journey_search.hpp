#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tempocut/tvg.hpp"

// Mask-based journey primitives shared by the exact oracles and the simulator.
// They never build a Line Graph; they work on the contact index space of a
// fixed graph with a ContactMask selecting the residual contacts.

namespace tempocut {

/// Journey with the fewest hops among masked contacts, ties broken by earliest
/// arrival. Runs a hop-layered earliest-arrival relaxation.
std::optional<Journey> min_hop_journey(const TimeVaryingGraph& g, NodeId s, NodeId d,
                                       const ContactMask& mask);

/// Subset of `mask` lying on at least one s-d journey.
ContactMask useful_contacts(const TimeVaryingGraph& g, NodeId s, NodeId d, const ContactMask& mask);

/// Clears every contact interfering with j at delta.
void clear_interfering(const TimeVaryingGraph& g, const Journey& j, int delta, ContactMask& mask);

/// Clears the footprint of r.
void clear_footprint(const TimeVaryingGraph& g, const DeltaRemoval& r, ContactMask& mask);

/// Pairwise delta-disjoint journeys picked by repeatedly taking a min-hop
/// journey and clearing its interference. Any such set is a lower bound on
/// both MaxFlow_delta and MinCut_delta of the residual.
std::vector<Journey> greedy_packing(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                                    ContactMask mask);

/// Largest subset of the sorted slots whose members are pairwise at least
/// delta apart.
int window_packing(std::span<const Slot> sorted_slots, int delta);

}  // namespace tempocut
