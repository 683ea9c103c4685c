#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tempocut/line_graph.hpp"
#include "tempocut/maxflow_delta.hpp"
#include "tempocut/rational.hpp"
#include "tempocut/tvg.hpp"

namespace tempocut {

/// Set of delta-removals (all of the same duration) separating s from d.
struct CutResult {
  std::vector<DeltaRemoval> removals;
  int delta = 1;
  bool exact = false;

  int count() const { return static_cast<int>(removals.size()); }
};

/// Contact weights 1/K where K is the largest number of same-edge contacts in
/// any delta-slot window containing the contact.
struct WeightMap {
  int delta = 1;
  std::map<Contact, int> densest;

  Rational weight(const Contact& c) const { return Rational(1, densest.at(c)); }
  ContactWeights weights() const;
  Rational total(const std::vector<Contact>& cs) const;
};

enum class Verdict { kSurvivable, kNotSurvivable, kUnknown };

std::string to_string(Verdict v);

struct SurvivabilityVerdict {
  int n = 0;
  int delta = 1;
  Verdict verdict = Verdict::kUnknown;
  int lower = 0;
  int upper = 0;
};

/// Largest delta accepted by the weighted cut; lcm(1..30) still fits 64 bits.
inline constexpr int kMaxWeightedDelta = 30;

/// Requires 1 <= delta <= min(T, 30).
WeightMap set_weights(const TimeVaryingGraph& g, int delta);

/// Minimum-weight contact set disconnecting s from d, from a node-capacitated
/// max flow on the Line Graph.
std::vector<Contact> weighted_mincut_1(const TimeVaryingGraph& g, const WeightMap& w, NodeId s,
                                       NodeId d);

/// Fewest delta-removals covering `cs`: per edge, a head at each first
/// uncovered slot in ascending order.
std::vector<DeltaRemoval> delta_cover(std::vector<Contact> cs, int delta);

/// SetWeight, weighted MinCut_1, then delta-cover. Always a valid cut.
CutResult minweight_mincut_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta);

/// Minimum delta-cut by iterative deepening between the greedy packing lower
/// bound and the min-weight upper bound. Each level is a depth-first hitting
/// search: find a surviving min-hop journey and branch over the canonical
/// heads (active slots of its edges) whose footprint reaches one of its hops.
/// Throws CapacityError if the graph has more than `head_cap` candidate heads
/// or the search expands more than `search_cap` nodes.
CutResult exact_mincut_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                             std::size_t head_cap = 20'000,
                             std::size_t search_cap = kDefaultSearchCap);

bool verify_cut(const TimeVaryingGraph& g, const CutResult& cut, NodeId s, NodeId d);

/// lower: MaxFlow_delta, upper: size of a delta-cut. With `exact` the upper
/// value is MinCut_delta itself and the verdict is always decided.
SurvivabilityVerdict survivability_bounds(const TimeVaryingGraph& g, NodeId s, NodeId d, int n,
                                          int delta, bool exact,
                                          std::size_t cap = kDefaultSearchCap);

/// sum(w) <= |delta_cover(c)| <= delta * sum(w), evaluated exactly.
bool cover_sandwich_holds(const TimeVaryingGraph& g, const std::vector<Contact>& c, const WeightMap& w,
                  int delta);

}  // namespace tempocut
