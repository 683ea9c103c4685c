#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "tempocut/rational.hpp"
#include "tempocut/tvg.hpp"

namespace tempocut {

/// Static digraph with one node per contact plus source and sink terminals.
///
/// Node 0 is the source terminal, node 1 the sink terminal and node i + 2
/// stands for contacts()[i]. Arc v(e1,t1) -> v(e2,t2) exists iff
/// end(e1) = start(e2) and t2 > t1; arcs leave every node in (slot, edge-id)
/// order with the sink arc first.
class LineGraph {
 public:
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  int node_count() const { return static_cast<int>(contact_of_.size()) + 2; }
  std::size_t arc_count() const;
  const Contact& contact(int node) const { return contact_of_.at(node - 2); }
  const std::vector<Contact>& contacts() const { return contact_of_; }
  /// Line node of a contact, or -1 if absent.
  int node_of(const Contact& c) const;
  const std::vector<int>& successors(int node) const { return out_.at(node); }

 private:
  friend LineGraph build_line_graph(const TimeVaryingGraph& g, NodeId s, NodeId d);

  std::vector<Contact> contact_of_;
  std::vector<std::vector<int>> out_;
};

using ContactWeights = std::map<Contact, Rational>;

struct NodeCutResult {
  Rational value;
  std::vector<Contact> cut;
  /// Internally node-disjoint s-d paths; filled for all-ones capacities only.
  std::vector<Journey> paths;
};

/// Throws InputError if s == d or either is unknown.
LineGraph build_line_graph(const TimeVaryingGraph& g, NodeId s, NodeId d);

/// Journey of a breadth-first shortest s-d path, if any.
std::optional<Journey> min_hop_path(const LineGraph& lg);

/// Maximum s-d flow with node capacities given by `weights` (terminals
/// uncapacitated) and a minimum-weight interior node cut. Weights are scaled
/// to integers by the lcm of their denominators; nonpositive or missing
/// weights throw InputError.
NodeCutResult node_disjoint_maxflow(const LineGraph& lg, const ContactWeights& weights);

/// Unit capacity on every contact.
NodeCutResult node_disjoint_maxflow(const LineGraph& lg);

/// Graphviz rendering with "e@t" labels, for debugging.
void write_dot(std::ostream& out, const LineGraph& lg);

}  // namespace tempocut
