#include "tempocut/flow_network.hpp"

#include <algorithm>
#include <queue>

namespace tempocut {

int FlowNetwork::add_arc(int from, int to, Capacity capacity) {
  const int id = static_cast<int>(to_.size());
  to_.push_back(to);
  cap_.push_back(capacity);
  next_.push_back(head_[from]);
  head_[from] = id;
  to_.push_back(from);
  cap_.push_back(0);
  next_.push_back(head_[to]);
  head_[to] = id + 1;
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int a = head_[v]; a != -1; a = next_[a]) {
      if (cap_[a] > 0 && level_[to_[a]] < 0) {
        level_[to_[a]] = level_[v] + 1;
        q.push(to_[a]);
      }
    }
  }
  return level_[sink] >= 0;
}

FlowNetwork::Capacity FlowNetwork::push(int v, int sink, Capacity limit) {
  if (v == sink) return limit;
  for (int& a = iter_[v]; a != -1; a = next_[a]) {
    const int w = to_[a];
    if (cap_[a] <= 0 || level_[w] != level_[v] + 1) continue;
    const Capacity got = push(w, sink, std::min(limit, cap_[a]));
    if (got > 0) {
      cap_[a] -= got;
      cap_[a ^ 1] += got;
      return got;
    }
  }
  return 0;
}

FlowNetwork::Capacity FlowNetwork::max_flow(int source, int sink) {
  if (source == sink) return 0;
  Capacity total = 0;
  while (build_levels(source, sink)) {
    iter_ = head_;
    while (Capacity f = push(source, sink, kInfinite)) total += f;
  }
  return total;
}

std::vector<char> FlowNetwork::source_side(int source) const {
  std::vector<char> seen(head_.size(), 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int a = head_[v]; a != -1; a = next_[a]) {
      if (cap_[a] > 0 && !seen[to_[a]]) {
        seen[to_[a]] = 1;
        stack.push_back(to_[a]);
      }
    }
  }
  return seen;
}

}  // namespace tempocut
