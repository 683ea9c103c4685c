#include "tempocut/tvg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tempocut {

TimeVaryingGraph::TimeVaryingGraph(int horizon) : horizon_(horizon) {
  rebuild_slot_index();
}

NodeId TimeVaryingGraph::add_node(std::string name) {
  names_.push_back(std::move(name));
  out_.emplace_back();
  return node_count() - 1;
}

EdgeId TimeVaryingGraph::add_edge(NodeId from, NodeId to, std::vector<Slot> active) {
  const EdgeId e = edge_count();
  edges_.push_back({from, to});
  if (has_node(from)) out_[from].push_back(e);
  offsets_.push_back(offsets_.back() + static_cast<int>(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i) {
    const Slot t = active[i];
    if (t >= 1 && t <= horizon_) by_slot_[t].push_back(offsets_[e] + static_cast<int>(i));
  }
  active_.push_back(std::move(active));
  return e;
}

void TimeVaryingGraph::rebuild_slot_index() {
  by_slot_.assign(static_cast<std::size_t>(std::max(horizon_, 0)) + 1, {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    for (std::size_t i = 0; i < active_[e].size(); ++i) {
      const Slot t = active_[e][i];
      if (t >= 1 && t <= horizon_) by_slot_[t].push_back(offsets_[e] + static_cast<int>(i));
    }
  }
}

std::optional<NodeId> TimeVaryingGraph::find_node(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<NodeId>(it - names_.begin());
}

NodeId TimeVaryingGraph::node(const std::string& name) const {
  if (auto v = find_node(name)) return *v;
  throw InputError("unknown node '" + name + "'");
}

std::optional<EdgeId> TimeVaryingGraph::find_edge(NodeId from, NodeId to) const {
  if (!has_node(from)) return std::nullopt;
  for (EdgeId e : out_[from]) {
    if (edges_[e].to == to) return e;
  }
  return std::nullopt;
}

bool TimeVaryingGraph::is_active(EdgeId e, Slot t) const {
  if (e < 0 || e >= edge_count()) return false;
  const auto& a = active_[e];
  return std::binary_search(a.begin(), a.end(), t);
}

int TimeVaryingGraph::contact_index(Contact c) const {
  if (c.edge < 0 || c.edge >= edge_count()) return -1;
  const auto& a = active_[c.edge];
  auto it = std::lower_bound(a.begin(), a.end(), c.slot);
  if (it == a.end() || *it != c.slot) return -1;
  return offsets_[c.edge] + static_cast<int>(it - a.begin());
}

Contact TimeVaryingGraph::contact_at(int index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const EdgeId e = static_cast<EdgeId>(it - offsets_.begin()) - 1;
  return {e, active_[e][index - offsets_[e]]};
}

std::span<const int> TimeVaryingGraph::contacts_in_slot(Slot t) const {
  if (t < 1 || t > horizon_) return {};
  return by_slot_[t];
}

bool TimeVaryingGraph::operator==(const TimeVaryingGraph& other) const {
  if (horizon_ != other.horizon_ || names_ != other.names_ || active_ != other.active_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].from != other.edges_[i].from || edges_[i].to != other.edges_[i].to) return false;
  }
  return true;
}

ValidationReport validate_graph(const TimeVaryingGraph& g) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  if (g.horizon() < 1) fail("horizon T must be positive, got " + std::to_string(g.horizon()));
  std::set<std::string> names;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!names.insert(g.node_name(v)).second) fail("duplicate node '" + g.node_name(v) + "'");
  }
  std::set<std::pair<NodeId, NodeId>> pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const std::string label = TimeVaryingGraph::edge_label(e);
    const bool ends_ok = g.has_node(ed.from) && g.has_node(ed.to);
    if (!ends_ok) fail(label + ": endpoint is not a member of the node set");
    if (ends_ok && !pairs.insert({ed.from, ed.to}).second) {
      fail(label + ": duplicate edge " + g.node_name(ed.from) + "->" + g.node_name(ed.to));
    }
    const auto active = g.active(e);
    for (std::size_t i = 0; i < active.size(); ++i) {
      const Slot t = active[i];
      if (t < 1 || t > g.horizon()) {
        fail(label + ": active slot " + std::to_string(t) + " outside [1, " +
             std::to_string(g.horizon()) + "]");
      }
      if (i > 0 && active[i - 1] == t) fail(label + ": slot " + std::to_string(t) + " listed twice");
      if (i > 0 && active[i - 1] > t) fail(label + ": active slots not sorted");
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::vector<Contact> contacts(const TimeVaryingGraph& g) {
  std::vector<Contact> out;
  out.reserve(g.contact_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (Slot t : g.active(e)) out.push_back({e, t});
  }
  return out;
}

NodeId start_node(const TimeVaryingGraph& g, const Contact& c) { return g.edge(c.edge).from; }
NodeId end_node(const TimeVaryingGraph& g, const Contact& c) { return g.edge(c.edge).to; }

bool is_valid_journey(const TimeVaryingGraph& g, const Journey& j, NodeId s, NodeId d) {
  if (j.hops.empty()) return false;
  for (std::size_t i = 0; i < j.hops.size(); ++i) {
    const Contact& c = j.hops[i];
    if (c.edge < 0 || c.edge >= g.edge_count()) return false;
    if (c.slot < 1 || c.slot > g.horizon() || !g.is_active(c.edge, c.slot)) return false;
    if (i > 0) {
      const Contact& prev = j.hops[i - 1];
      if (end_node(g, prev) != start_node(g, c)) return false;
      if (c.slot <= prev.slot) return false;
    }
  }
  return start_node(g, j.hops.front()) == s && end_node(g, j.hops.back()) == d;
}

std::vector<Contact> removal_footprint(const TimeVaryingGraph& g, const DeltaRemoval& r) {
  std::vector<Contact> out;
  if (r.edge < 0 || r.edge >= g.edge_count() || r.delta <= 0) return out;
  const auto active = g.active(r.edge);
  auto it = std::lower_bound(active.begin(), active.end(), r.head);
  for (; it != active.end() && *it < r.head + r.delta; ++it) out.push_back({r.edge, *it});
  return out;
}

TimeVaryingGraph restrict_contacts(const TimeVaryingGraph& g, const ContactMask& mask) {
  TimeVaryingGraph out(g.horizon());
  for (NodeId v = 0; v < g.node_count(); ++v) out.add_node(g.node_name(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<Slot> keep;
    const auto active = g.active(e);
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (mask[g.contact_begin(e) + i]) keep.push_back(active[i]);
    }
    out.add_edge(g.edge(e).from, g.edge(e).to, std::move(keep));
  }
  return out;
}

TimeVaryingGraph apply_removals(const TimeVaryingGraph& g, std::span<const DeltaRemoval> rs) {
  ContactMask mask(g.contact_count(), 1);
  for (const DeltaRemoval& r : rs) {
    for (const Contact& c : removal_footprint(g, r)) mask[g.contact_index(c)] = 0;
  }
  return restrict_contacts(g, mask);
}

namespace {

void check_nodes(const TimeVaryingGraph& g, NodeId s, NodeId d) {
  if (!g.has_node(s) || !g.has_node(d)) {
    throw InputError("reachability query names an unknown node id");
  }
}

}  // namespace

bool reachable(const TimeVaryingGraph& g, NodeId s, NodeId d) {
  return reachable(g, s, d, ContactMask(g.contact_count(), 1));
}

bool reachable(const TimeVaryingGraph& g, NodeId s, NodeId d, const ContactMask& mask) {
  check_nodes(g, s, d);
  if (s == d) return true;
  // reached[v]: v was reached strictly before the slot being scanned.
  std::vector<char> reached(g.node_count(), 0);
  reached[s] = 1;
  std::vector<NodeId> fresh;
  for (Slot t = 1; t <= g.horizon(); ++t) {
    fresh.clear();
    for (int ci : g.contacts_in_slot(t)) {
      if (!mask[ci]) continue;
      const Edge& ed = g.edge(g.contact_at(ci).edge);
      if (reached[ed.from] && !reached[ed.to]) fresh.push_back(ed.to);
    }
    for (NodeId v : fresh) {
      if (v == d) return true;
      reached[v] = 1;
    }
  }
  return false;
}

std::vector<Journey> enumerate_journeys(const TimeVaryingGraph& g, NodeId s, NodeId d,
                                        std::size_t cap) {
  check_nodes(g, s, d);
  std::vector<Journey> out;
  if (s == d) return out;
  // Successor contacts of node v after slot t, ordered by (slot, edge-id).
  std::vector<std::vector<Contact>> leaving(g.node_count());
  for (const Contact& c : contacts(g)) leaving[start_node(g, c)].push_back(c);
  for (auto& list : leaving) {
    std::sort(list.begin(), list.end(), [](const Contact& a, const Contact& b) {
      return std::pair(a.slot, a.edge) < std::pair(b.slot, b.edge);
    });
  }
  Journey current;
  auto dfs = [&](auto&& self, NodeId at, Slot after) -> void {
    for (const Contact& c : leaving[at]) {
      if (c.slot <= after) continue;
      current.hops.push_back(c);
      const NodeId next = end_node(g, c);
      if (next == d) {
        if (out.size() == cap) {
          throw CapacityError("more than " + std::to_string(cap) + " journeys");
        }
        out.push_back(current);
      }
      // A journey may pass through d and return to it later.
      self(self, next, c.slot);
      current.hops.pop_back();
    }
  };
  dfs(dfs, s, 0);
  return out;
}

bool interferes(const Journey& a, const Journey& b, int delta) {
  for (const Contact& x : a.hops) {
    for (const Contact& y : b.hops) {
      if (x.edge == y.edge && std::abs(x.slot - y.slot) < delta) return true;
    }
  }
  return false;
}

std::vector<Contact> interfering_contacts(const TimeVaryingGraph& g, const Journey& j, int delta) {
  std::set<Contact> hit;
  for (const Contact& h : j.hops) {
    const auto active = g.active(h.edge);
    auto it = std::lower_bound(active.begin(), active.end(), h.slot - delta + 1);
    for (; it != active.end() && *it <= h.slot + delta - 1; ++it) hit.insert({h.edge, *it});
  }
  return {hit.begin(), hit.end()};
}

}  // namespace tempocut
