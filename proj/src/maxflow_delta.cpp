#include "tempocut/maxflow_delta.hpp"

#include <algorithm>
#include <cmath>

#include "tempocut/flow_network.hpp"
#include "tempocut/journey_search.hpp"
#include "tempocut/line_graph.hpp"

namespace tempocut {

namespace {

void check_query(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta) {
  if (!g.has_node(s) || !g.has_node(d)) throw InputError("unknown source or destination");
  if (s == d) throw InputError("source and destination must differ");
  if (delta < 1 || delta > g.horizon()) {
    throw InputError("delta must lie in [1, T], got " + std::to_string(delta));
  }
}

// Contact-disjoint journeys in the time-expanded graph; node (v, t) means
// "at v after slot t".
int time_expanded_bound(const TimeVaryingGraph& g, NodeId s, NodeId d, const ContactMask& mask) {
  const int T = g.horizon();
  auto at = [T](NodeId v, int t) { return v * (T + 1) + t; };
  FlowNetwork net(g.node_count() * (T + 1));
  for (NodeId v = 0; v < g.node_count(); ++v) {
    for (int t = 0; t < T; ++t) net.add_arc(at(v, t), at(v, t + 1), FlowNetwork::kInfinite);
  }
  for (std::size_t ci = 0; ci < mask.size(); ++ci) {
    if (!mask[ci]) continue;
    const Contact c = g.contact_at(static_cast<int>(ci));
    const Edge& ed = g.edge(c.edge);
    net.add_arc(at(ed.from, c.slot - 1), at(ed.to, c.slot), 1);
  }
  return static_cast<int>(net.max_flow(at(s, 0), at(d, T)));
}

// Static s-d cut with each edge weighted by how many of its masked contacts
// can be pairwise delta apart.
int static_packing_bound(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                         const ContactMask& mask) {
  FlowNetwork net(g.node_count());
  std::vector<Slot> slots;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    slots.clear();
    const auto active = g.active(e);
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (mask[g.contact_begin(e) + i]) slots.push_back(active[i]);
    }
    if (slots.empty()) continue;
    net.add_arc(g.edge(e).from, g.edge(e).to, window_packing(slots, delta));
  }
  return static_cast<int>(net.max_flow(s, d));
}

class PackingSearch {
 public:
  PackingSearch(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta, std::size_t cap)
      : g_(g), s_(s), d_(d), delta_(delta), cap_(cap), on_path_(g.node_count(), 0) {}

  std::vector<Journey> run(std::vector<Journey> incumbent) {
    best_ = std::move(incumbent);
    solve(useful_contacts(g_, s_, d_, ContactMask(g_.contact_count(), 1)));
    return best_;
  }

 private:
  void tick() {
    if (++expanded_ > cap_) {
      throw CapacityError("search exceeded " + std::to_string(cap_) + " nodes");
    }
  }

  int bound(const ContactMask& mask) const {
    return maxflow_delta_upper_bound(g_, s_, d_, delta_, mask);
  }

  void solve(const ContactMask& mask) {
    tick();
    const int room = bound(mask);
    const auto have = static_cast<int>(chosen_.size());
    if (room == 0) {
      if (have > static_cast<int>(best_.size())) best_ = chosen_;
      return;
    }
    if (have + room <= static_cast<int>(best_.size())) return;

    const auto probe = min_hop_journey(g_, s_, d_, mask);
    const Contact first = probe->hops.front();

    // Some chosen journey starts with `first`.
    {
      ContactMask rest = mask;
      Journey prefix{{first}};
      clear_interfering(g_, prefix, delta_, rest);
      on_path_[s_] = 1;
      extend(prefix, rest);
      on_path_[s_] = 0;
    }
    // No chosen journey uses `first`.
    ContactMask without = mask;
    without[g_.contact_index(first)] = 0;
    solve(useful_contacts(g_, s_, d_, without));
  }

  // `rest` excludes everything interfering with `prefix`; a node-simple
  // journey never reuses an edge, so its continuation lives in `rest` too.
  void extend(Journey& prefix, const ContactMask& rest) {
    tick();
    const Contact last = prefix.hops.back();
    const NodeId at = end_node(g_, last);
    if (at == d_) {
      chosen_.push_back(prefix);
      std::vector<char> outer(g_.node_count(), 0);
      on_path_.swap(outer);
      solve(useful_contacts(g_, s_, d_, rest));
      on_path_.swap(outer);
      chosen_.pop_back();
      return;
    }
    const auto have = static_cast<int>(chosen_.size());
    if (have + 1 + bound(useful_contacts(g_, s_, d_, rest)) <= static_cast<int>(best_.size())) return;

    on_path_[at] = 1;
    std::vector<Contact> next;
    for (EdgeId e : g_.out_edges(at)) {
      if (on_path_[g_.edge(e).to]) continue;
      const auto active = g_.active(e);
      for (auto it = std::upper_bound(active.begin(), active.end(), last.slot); it != active.end(); ++it) {
        if (rest[g_.contact_begin(e) + (it - active.begin())]) next.push_back({e, *it});
      }
    }
    std::sort(next.begin(), next.end(), [](const Contact& a, const Contact& b) {
      return std::pair(a.slot, a.edge) < std::pair(b.slot, b.edge);
    });
    for (const Contact& c : next) {
      ContactMask deeper = rest;
      prefix.hops.push_back(c);
      clear_interfering(g_, Journey{{c}}, delta_, deeper);
      extend(prefix, deeper);
      prefix.hops.pop_back();
    }
    on_path_[at] = 0;
  }

  const TimeVaryingGraph& g_;
  NodeId s_, d_;
  int delta_;
  std::size_t cap_;
  std::size_t expanded_ = 0;
  std::vector<char> on_path_;
  std::vector<Journey> chosen_;
  std::vector<Journey> best_;
};

}  // namespace

int maxflow_delta_upper_bound(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                              const ContactMask& mask) {
  if (std::none_of(mask.begin(), mask.end(), [](char c) { return c != 0; })) return 0;
  const int by_edges = static_packing_bound(g, s, d, delta, mask);
  if (by_edges == 0) return 0;
  return std::min(by_edges, time_expanded_bound(g, s, d, mask));
}

FlowResult greedy_maxflow_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                                int limit) {
  check_query(g, s, d, delta);
  FlowResult result;
  result.delta = delta;
  TimeVaryingGraph remaining = g;
  while (limit < 0 || result.count() < limit) {
    const LineGraph lg = build_line_graph(remaining, s, d);
    auto journey = min_hop_path(lg);
    if (!journey) break;
    ContactMask keep(remaining.contact_count(), 1);
    for (const Contact& c : interfering_contacts(remaining, *journey, delta)) {
      keep[remaining.contact_index(c)] = 0;
    }
    remaining = restrict_contacts(remaining, keep);
    result.journeys.push_back(std::move(*journey));
  }
  return result;
}

FlowResult exact_maxflow_delta(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                               std::size_t cap) {
  check_query(g, s, d, delta);
  FlowResult result;
  result.delta = delta;
  result.exact = true;
  PackingSearch search(g, s, d, delta, cap);
  result.journeys = search.run(greedy_maxflow_delta(g, s, d, delta).journeys);
  return result;
}

double greedy_ratio_bound(int edge_count, int horizon, int delta) {
  return 3.0 * std::sqrt(static_cast<double>(edge_count) *
                         (static_cast<double>(horizon) / delta + 1.0)) + 2.0;
}

bool greedy_bound_certificate(int alg_count, int opt_count, int edge_count, int horizon, int delta) {
  if (alg_count > opt_count) return false;
  return opt_count <= greedy_ratio_bound(edge_count, horizon, delta) * std::max(alg_count, 1);
}

}  // namespace tempocut
