#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tempocut {

using NodeId = int;
using EdgeId = int;
using Slot = int;

/// Bad input: malformed documents, unknown node names, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact oracle refused an instance because it exceeds the configured cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what)
      : std::runtime_error("instance too large for exact oracle: " + what) {}
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
};

/// One activation of an edge in one slot.
struct Contact {
  EdgeId edge = 0;
  Slot slot = 0;
  auto operator<=>(const Contact&) const = default;
};

/// Time-respecting contact sequence.
struct Journey {
  std::vector<Contact> hops;
  bool operator==(const Journey&) const = default;
};

/// Failure of one edge for `delta` consecutive slots starting at `head`.
/// A zero duration is allowed and disables nothing.
struct DeltaRemoval {
  EdgeId edge = 0;
  Slot head = 1;
  int delta = 1;
  auto operator<=>(const DeltaRemoval&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Discrete time-varying graph over slots 1..T with unit traversal delay.
///
/// The graph stores whatever it is given; `validate_graph` reports breaches of
/// the model (slot range, duplicate edges, dangling endpoints, repeated slots).
/// Every other operation assumes a valid graph. Edge ids follow insertion
/// order and contacts are indexed densely in (edge, slot) order.
class TimeVaryingGraph {
 public:
  explicit TimeVaryingGraph(int horizon = 1);

  NodeId add_node(std::string name);
  EdgeId add_edge(NodeId from, NodeId to, std::vector<Slot> active);

  int horizon() const { return horizon_; }
  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int contact_count() const { return offsets_.back(); }

  const std::string& node_name(NodeId v) const { return names_.at(v); }
  std::optional<NodeId> find_node(const std::string& name) const;
  /// Throws InputError for unknown names.
  NodeId node(const std::string& name) const;
  bool has_node(NodeId v) const { return v >= 0 && v < node_count(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Slot> active(EdgeId e) const { return active_.at(e); }
  std::span<const EdgeId> out_edges(NodeId v) const { return out_.at(v); }
  std::optional<EdgeId> find_edge(NodeId from, NodeId to) const;
  /// "e1", "e2", ... by insertion order.
  static std::string edge_label(EdgeId e) { return "e" + std::to_string(e + 1); }

  bool is_active(EdgeId e, Slot t) const;
  /// Dense index of an active contact, or -1.
  int contact_index(Contact c) const;
  Contact contact_at(int index) const;
  /// First contact index of edge e; contacts of e occupy [begin, begin + |active(e)|).
  int contact_begin(EdgeId e) const { return offsets_.at(e); }
  /// Contact indices active in slot t (ascending edge id).
  std::span<const int> contacts_in_slot(Slot t) const;

  bool operator==(const TimeVaryingGraph& other) const;

 private:
  void rebuild_slot_index();

  int horizon_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Slot>> active_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<int> offsets_{0};
  std::vector<std::vector<int>> by_slot_;
};

/// Per-contact flag over a graph's dense contact indices; nonzero means present.
using ContactMask = std::vector<char>;

ValidationReport validate_graph(const TimeVaryingGraph& g);

std::vector<Contact> contacts(const TimeVaryingGraph& g);

NodeId start_node(const TimeVaryingGraph& g, const Contact& c);
NodeId end_node(const TimeVaryingGraph& g, const Contact& c);

bool is_valid_journey(const TimeVaryingGraph& g, const Journey& j, NodeId s, NodeId d);

/// Active contacts (r.edge, t) with r.head <= t < r.head + r.delta.
std::vector<Contact> removal_footprint(const TimeVaryingGraph& g, const DeltaRemoval& r);

/// Copy of g with the union of all footprints deactivated.
TimeVaryingGraph apply_removals(const TimeVaryingGraph& g, std::span<const DeltaRemoval> rs);

/// Copy of g keeping only contacts flagged in `mask`.
TimeVaryingGraph restrict_contacts(const TimeVaryingGraph& g, const ContactMask& mask);

/// Throws InputError on unknown nodes.
bool reachable(const TimeVaryingGraph& g, NodeId s, NodeId d);
bool reachable(const TimeVaryingGraph& g, NodeId s, NodeId d, const ContactMask& mask);

/// All s-d journeys in depth-first Line-Graph order. Throws CapacityError
/// instead of returning more than `cap` journeys.
std::vector<Journey> enumerate_journeys(const TimeVaryingGraph& g, NodeId s, NodeId d,
                                        std::size_t cap);

bool interferes(const Journey& a, const Journey& b, int delta);

/// Active contacts within delta slots (same edge) of some hop of j, hops included.
std::vector<Contact> interfering_contacts(const TimeVaryingGraph& g, const Journey& j, int delta);

}  // namespace tempocut
