#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace tempocut {

/// Directed network with 64-bit integer capacities solved by Dinic's algorithm.
/// Augmentation order is fixed by arc insertion order, so results are
/// deterministic.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

  explicit FlowNetwork(int node_count) : head_(node_count, -1) {}

  int node_count() const { return static_cast<int>(head_.size()); }
  int arc_count() const { return static_cast<int>(to_.size()); }

  /// Returns the arc id; its reverse arc is id ^ 1.
  int add_arc(int from, int to, Capacity capacity);

  Capacity max_flow(int source, int sink);

  Capacity flow_on(int arc) const { return cap_[arc ^ 1]; }
  int arc_from(int arc) const { return to_[arc ^ 1]; }
  int arc_to(int arc) const { return to_[arc]; }
  Capacity residual(int arc) const { return cap_[arc]; }

  /// Nodes reachable from `source` in the residual network after max_flow.
  std::vector<char> source_side(int source) const;

 private:
  bool build_levels(int source, int sink);
  Capacity push(int v, int sink, Capacity limit);

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<Capacity> cap_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace tempocut
