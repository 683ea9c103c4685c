#include "tempocut/journey_search.hpp"

#include <algorithm>
#include <limits>

namespace tempocut {

namespace {
constexpr int kNever = std::numeric_limits<int>::max();
}

std::optional<Journey> min_hop_journey(const TimeVaryingGraph& g, NodeId s, NodeId d,
                                       const ContactMask& mask) {
  if (!g.has_node(s) || !g.has_node(d)) throw InputError("journey query names an unknown node id");
  if (s == d) return std::nullopt;
  const int n = g.node_count();
  // arrival[k][v]: earliest slot at which v is reached with at most k hops.
  std::vector<std::vector<int>> arrival{std::vector<int>(n, kNever)};
  std::vector<std::vector<int>> via{std::vector<int>(n, -1)};
  arrival[0][s] = 0;
  for (int k = 1; k <= g.horizon(); ++k) {
    const auto& prev = arrival.back();
    std::vector<int> cur = prev;
    std::vector<int> cur_via(n, -1);
    bool changed = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (prev[ed.from] == kNever) continue;
      const auto active = g.active(e);
      auto it = std::upper_bound(active.begin(), active.end(), prev[ed.from]);
      for (; it != active.end(); ++it) {
        const int ci = g.contact_begin(e) + static_cast<int>(it - active.begin());
        if (!mask[ci]) continue;
        if (*it < cur[ed.to]) {
          cur[ed.to] = *it;
          cur_via[ed.to] = ci;
          changed = true;
        }
        break;
      }
    }
    arrival.push_back(std::move(cur));
    via.push_back(std::move(cur_via));
    if (arrival.back()[d] != kNever) {
      Journey j;
      NodeId v = d;
      for (int level = k; level > 0; --level) {
        const int ci = via[level][v];
        if (ci < 0) continue;
        const Contact c = g.contact_at(ci);
        j.hops.push_back(c);
        v = g.edge(c.edge).from;
      }
      std::reverse(j.hops.begin(), j.hops.end());
      return j;
    }
    if (!changed) break;
  }
  return std::nullopt;
}

ContactMask useful_contacts(const TimeVaryingGraph& g, NodeId s, NodeId d, const ContactMask& mask) {
  const int n = g.node_count();
  const int T = g.horizon();
  ContactMask out(mask.size(), 0);
  if (s == d) return out;
  // Earliest arrival from s; s counts as reached at slot 0.
  std::vector<int> earliest(n, kNever);
  earliest[s] = 0;
  for (Slot t = 1; t <= T; ++t) {
    for (int ci : g.contacts_in_slot(t)) {
      if (!mask[ci]) continue;
      const Edge& ed = g.edge(g.contact_at(ci).edge);
      if (earliest[ed.from] < t && t < earliest[ed.to]) earliest[ed.to] = t;
    }
  }
  // Latest slot at which a contact may enter v and still continue to d.
  std::vector<int> latest(n, std::numeric_limits<int>::min());
  latest[d] = T + 1;
  for (Slot t = T; t >= 1; --t) {
    for (int ci : g.contacts_in_slot(t)) {
      if (!mask[ci]) continue;
      const Edge& ed = g.edge(g.contact_at(ci).edge);
      if (t < latest[ed.to] && t > latest[ed.from]) latest[ed.from] = t;
    }
  }
  latest[d] = T + 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto active = g.active(e);
    for (std::size_t i = 0; i < active.size(); ++i) {
      const int ci = g.contact_begin(e) + static_cast<int>(i);
      if (mask[ci] && earliest[ed.from] < active[i] && active[i] < latest[ed.to]) out[ci] = 1;
    }
  }
  return out;
}

void clear_interfering(const TimeVaryingGraph& g, const Journey& j, int delta, ContactMask& mask) {
  for (const Contact& h : j.hops) {
    const auto active = g.active(h.edge);
    auto it = std::lower_bound(active.begin(), active.end(), h.slot - delta + 1);
    for (; it != active.end() && *it <= h.slot + delta - 1; ++it) {
      mask[g.contact_begin(h.edge) + (it - active.begin())] = 0;
    }
  }
}

void clear_footprint(const TimeVaryingGraph& g, const DeltaRemoval& r, ContactMask& mask) {
  if (r.delta <= 0) return;
  const auto active = g.active(r.edge);
  auto it = std::lower_bound(active.begin(), active.end(), r.head);
  for (; it != active.end() && *it < r.head + r.delta; ++it) {
    mask[g.contact_begin(r.edge) + (it - active.begin())] = 0;
  }
}

std::vector<Journey> greedy_packing(const TimeVaryingGraph& g, NodeId s, NodeId d, int delta,
                                    ContactMask mask) {
  std::vector<Journey> out;
  while (auto j = min_hop_journey(g, s, d, mask)) {
    clear_interfering(g, *j, delta, mask);
    out.push_back(std::move(*j));
  }
  return out;
}

int window_packing(std::span<const Slot> sorted_slots, int delta) {
  int count = 0;
  long long last = std::numeric_limits<long long>::min() / 2;
  for (Slot t : sorted_slots) {
    if (t - last >= delta) {
      ++count;
      last = t;
    }
  }
  return count;
}

}  // namespace tempocut
