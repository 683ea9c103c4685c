#include "tempocut/mincut_delta.hpp"

#include <algorithm>
#include <set>

#include "tempocut/journey_search.hpp"

namespace tempocut {

namespace {

void check_query(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta, int max_delta) {
  if (!g.has_node(s) || !g.has_node(d)) throw InputError("unknown source or destination");
  if (s == d) throw InputError("source and destination must differ");
  if (delta < 1 || delta > max_delta) {
    throw InputError("delta must lie in [1, " + std::to_string(max_delta) + "], got " +
                     std::to_string(delta));
  }
}

class HittingSearch {
 public:
  HittingSearch(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta, std::size_t cap)
      : g_(g), s_(s), d_(d), delta_(delta), cap_(cap) {}

  bool cut_within(int budget, std::vector<DeltaRemoval>& out) {
    chosen_.clear();
    forbidden_.clear();
    if (!search(ContactMask(g_.contact_count(), 1), budget)) return false;
    out = chosen_;
    return true;
  }

 private:
  bool search(const ContactMask& mask, int budget) {
    if (++expanded_ > cap_) throw CapacityError("search exceeded " + std::to_string(cap_) + " nodes");
    const auto journey = min_hop_journey(g_, s_, d_, mask);
    if (!journey) return true;
    if (budget == 0) return false;
    if (budget > 1) {
      // Pairwise delta-disjoint survivors each need their own removal.
      const auto packing = greedy_packing(g_, s_, d_, delta_, useful_contacts(g_, s_, d_, mask));
      if (static_cast<int>(packing.size()) > budget) return false;
    }

    std::set<DeltaRemoval> heads;
    for (const Contact& hop : journey->hops) {
      const auto active = g_.active(hop.edge);
      auto it = std::lower_bound(active.begin(), active.end(), hop.slot - delta_ + 1);
      for (; it != active.end() && *it <= hop.slot; ++it) heads.insert({hop.edge, *it, delta_});
    }
    const std::size_t forbidden_mark = forbidden_.size();
    bool found = false;
    for (const DeltaRemoval& r : heads) {
      if (std::find(forbidden_.begin(), forbidden_.end(), r) != forbidden_.end()) continue;
      ContactMask next = mask;
      clear_footprint(g_, r, next);
      chosen_.push_back(r);
      if (search(next, budget - 1)) {
        found = true;
        break;
      }
      chosen_.pop_back();
      // Every cut containing r has been ruled out for this subtree.
      forbidden_.push_back(r);
    }
    forbidden_.resize(forbidden_mark);
    return found;
  }

  const TimeVaryingGraph& g_;
  NodeId s_, d_;
  int delta_;
  std::size_t cap_;
  std::size_t expanded_ = 0;
  std::vector<DeltaRemoval> chosen_;
  std::vector<DeltaRemoval> forbidden_;
};

}  // namespace

ContactWeights WeightMap::weights() const {
  ContactWeights out;
  for (const auto& [c, k] : densest) out.emplace(c, Rational(1, k));
  return out;
}

Rational WeightMap::total(const std::vector<Contact>& cs) const {
  Rational sum(0);
  for (const Contact& c : cs) sum += weight(c);
  return sum;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kSurvivable:
      return "survivable";
    case Verdict::kNotSurvivable:
      return "not-survivable";
    case Verdict::kUnknown:
      break;
  }
  return "unknown";
}

WeightMap set_weights(const TimeVaryingGraph& g, int delta) {
  const int limit = std::min(g.horizon(), kMaxWeightedDelta);
  if (delta < 1 || delta > limit) {
    throw InputError("delta must lie in [1, " + std::to_string(limit) + "] for weighting");
  }
  WeightMap w;
  w.delta = delta;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto active = g.active(e);
    for (Slot t : active) {
      int best = 0;
      for (Slot start = t - delta + 1; start <= t; ++start) {
        const auto lo = std::lower_bound(active.begin(), active.end(), start);
        const auto hi = std::lower_bound(active.begin(), active.end(), start + delta);
        best = std::max(best, static_cast<int>(hi - lo));
      }
      w.densest.emplace(Contact{e, t}, best);
    }
  }
  return w;
}

std::vector<Contact> weighted_mincut_1(const TimeVaryingGraph& g, const WeightMap& w, NodeId s,
                                       NodeId d) {
  const LineGraph lg = build_line_graph(g, s, d);
  return node_disjoint_maxflow(lg, w.weights()).cut;
}

std::vector<DeltaRemoval> delta_cover(std::vector<Contact> cs, int delta) {
  std::sort(cs.begin(), cs.end());
  std::vector<DeltaRemoval> out;
  for (const Contact& c : cs) {
    const bool covered = !out.empty() && out.back().edge == c.edge &&
                         c.slot < out.back().head + delta;
    if (!covered) out.push_back({c.edge, c.slot, delta});
  }
  return out;
}

CutResult minweight_mincut_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta) {
  check_query(g, s, d, delta, std::min(g.horizon(), kMaxWeightedDelta));
  CutResult result;
  result.delta = delta;
  const WeightMap w = set_weights(g, delta);
  result.removals = delta_cover(weighted_mincut_1(g, w, s, d), delta);
  if (!verify_cut(g, result, s, d)) throw std::logic_error("min-weight cut left the pair connected");
  return result;
}

CutResult exact_mincut_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                             std::size_t head_cap, std::size_t search_cap) {
  check_query(g, s, d, delta, g.horizon());
  if (static_cast<std::size_t>(g.contact_count()) > head_cap) {
    throw CapacityError(std::to_string(g.contact_count()) + " candidate heads exceed cap " +
                        std::to_string(head_cap));
  }
  CutResult result;
  result.delta = delta;
  result.exact = true;
  if (!reachable(g, s, d)) return result;

  CutResult upper;
  if (delta <= kMaxWeightedDelta) {
    upper = minweight_mincut_delta(g, s, d, delta);
  } else {
    // Covering every contact leaving s is always a cut.
    std::vector<Contact> out_of_s;
    for (EdgeId e : g.out_edges(s)) {
      for (Slot t : g.active(e)) out_of_s.push_back({e, t});
    }
    upper.removals = delta_cover(out_of_s, delta);
  }
  const ContactMask all(g.contact_count(), 1);
  const int lower = static_cast<int>(
      greedy_packing(g, s, d, delta, useful_contacts(g, s, d, all)).size());

  HittingSearch search(g, s, d, delta, search_cap);
  for (int k = std::max(lower, 1); k < upper.count(); ++k) {
    if (search.cut_within(k, result.removals)) return result;
  }
  result.removals = upper.removals;
  return result;
}

bool verify_cut(const TimeVaryingGraph& g, const CutResult& cut, NodeId s, NodeId d) {
  return !reachable(apply_removals(g, cut.removals), s, d);
}

SurvivabilityVerdict survivability_bounds(const TimeVaryingGraph& g, NodeId s, NodeId d, int n,
                                          int delta, bool exact, std::size_t cap) {
  if (n < 0) throw InputError("failure count n must be nonnegative");
  SurvivabilityVerdict v;
  v.n = n;
  v.delta = delta;
  if (exact) {
    v.lower = exact_maxflow_delta(g, s, d, delta, cap).count();
    v.upper = exact_mincut_delta(g, s, d, delta, 20'000, cap).count();
    v.verdict = v.upper > n ? Verdict::kSurvivable : Verdict::kNotSurvivable;
    return v;
  }
  v.lower = greedy_maxflow_delta(g, s, d, delta).count();
  v.upper = minweight_mincut_delta(g, s, d, delta).count();
  if (v.lower > n) {
    v.verdict = Verdict::kSurvivable;
  } else if (v.upper <= n) {
    v.verdict = Verdict::kNotSurvivable;
  } else {
    v.verdict = Verdict::kUnknown;
  }
  return v;
}

bool cover_sandwich_holds(const TimeVaryingGraph& g, const std::vector<Contact>& c,
                          const WeightMap& w, int delta) {
  (void)g;
  const Rational sum = w.total(c);
  const Rational cover(static_cast<std::int64_t>(delta_cover(c, delta).size()));
  return sum <= cover && cover <= sum * delta;
}

}  // namespace tempocut
