#include "tempocut/line_graph.hpp"

#include <algorithm>
#include <queue>

#include "tempocut/flow_network.hpp"

namespace tempocut {

std::size_t LineGraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& succ : out_) n += succ.size();
  return n;
}

int LineGraph::node_of(const Contact& c) const {
  auto it = std::lower_bound(contact_of_.begin(), contact_of_.end(), c);
  if (it == contact_of_.end() || *it != c) return -1;
  return static_cast<int>(it - contact_of_.begin()) + 2;
}

LineGraph build_line_graph(const TimeVaryingGraph& g, NodeId s, NodeId d) {
  if (!g.has_node(s) || !g.has_node(d)) throw InputError("line graph terminals must be graph nodes");
  if (s == d) throw InputError("line graph needs distinct source and destination");
  LineGraph lg;
  lg.contact_of_ = contacts(g);
  const int n = lg.node_count();
  lg.out_.assign(n, {});

  std::vector<std::vector<int>> leaving(g.node_count());
  for (int i = 0; i + 2 < n; ++i) leaving[start_node(g, lg.contact_of_[i])].push_back(i + 2);
  for (auto& list : leaving) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      const Contact& x = lg.contact_of_[a - 2];
      const Contact& y = lg.contact_of_[b - 2];
      return std::pair(x.slot, x.edge) < std::pair(y.slot, y.edge);
    });
  }

  lg.out_[LineGraph::kSource] = leaving[s];
  for (int v = 2; v < n; ++v) {
    const Contact& c = lg.contact_of_[v - 2];
    auto& succ = lg.out_[v];
    const NodeId end = end_node(g, c);
    if (end == d) succ.push_back(LineGraph::kSink);
    const auto& next = leaving[end];
    auto it = std::partition_point(next.begin(), next.end(),
                                   [&](int w) { return lg.contact_of_[w - 2].slot <= c.slot; });
    succ.insert(succ.end(), it, next.end());
  }
  return lg;
}

std::optional<Journey> min_hop_path(const LineGraph& lg) {
  std::vector<int> parent(lg.node_count(), -1);
  std::vector<char> seen(lg.node_count(), 0);
  std::queue<int> q;
  q.push(LineGraph::kSource);
  seen[LineGraph::kSource] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : lg.successors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = v;
      if (w == LineGraph::kSink) {
        Journey j;
        for (int x = v; x != LineGraph::kSource; x = parent[x]) j.hops.push_back(lg.contact(x));
        std::reverse(j.hops.begin(), j.hops.end());
        return j;
      }
      q.push(w);
    }
  }
  return std::nullopt;
}

NodeCutResult node_disjoint_maxflow(const LineGraph& lg, const ContactWeights& weights) {
  const auto& cs = lg.contacts();
  std::vector<Rational> w(cs.size());
  std::int64_t scale = 1;
  bool unit = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto it = weights.find(cs[i]);
    if (it == weights.end()) throw InputError("missing weight for a contact");
    if (it->second.num <= 0) throw InputError("contact weights must be positive");
    w[i] = it->second;
    unit = unit && w[i] == Rational(1);
    if (__builtin_mul_overflow(scale / std::gcd(scale, w[i].den), w[i].den, &scale)) {
      throw std::overflow_error("weight scale overflow");
    }
  }

  // Split each contact into in/out halves carrying its capacity.
  const int k = static_cast<int>(cs.size());
  auto in_node = [](int line) { return line == LineGraph::kSink ? 1 : 2 * (line - 2) + 2; };
  auto out_node = [](int line) { return line == LineGraph::kSource ? 0 : 2 * (line - 2) + 3; };
  FlowNetwork net(2 * k + 2);
  for (int i = 0; i < k; ++i) net.add_arc(in_node(i + 2), out_node(i + 2), (w[i] * scale).num);
  std::vector<std::vector<int>> arcs_from(2 * k + 2);
  for (int v = 0; v < lg.node_count(); ++v) {
    if (v == LineGraph::kSink) continue;
    for (int x : lg.successors(v)) {
      arcs_from[out_node(v)].push_back(net.add_arc(out_node(v), in_node(x), FlowNetwork::kInfinite));
    }
  }
  const auto flow = net.max_flow(0, 1);

  NodeCutResult result;
  result.value = Rational(flow, scale);
  const auto side = net.source_side(0);
  for (int i = 0; i < k; ++i) {
    if (side[in_node(i + 2)] && !side[out_node(i + 2)]) result.cut.push_back(cs[i]);
  }

  if (unit) {
    std::vector<FlowNetwork::Capacity> left(net.arc_count());
    for (int a = 0; a < net.arc_count(); a += 2) left[a] = net.flow_on(a);
    for (FlowNetwork::Capacity p = 0; p < flow; ++p) {
      Journey j;
      int at = 0;
      while (at != 1) {
        int next_in = -1;
        for (int arc : arcs_from[at]) {
          if (left[arc] > 0) {
            --left[arc];
            next_in = net.arc_to(arc);
            break;
          }
        }
        if (next_in < 0) throw std::logic_error("flow decomposition failed");
        if (next_in == 1) break;
        const int i = (next_in - 2) / 2;
        j.hops.push_back(cs[i]);
        at = out_node(i + 2);
      }
      result.paths.push_back(std::move(j));
    }
  }
  return result;
}

NodeCutResult node_disjoint_maxflow(const LineGraph& lg) {
  ContactWeights ones;
  for (const Contact& c : lg.contacts()) ones.emplace(c, Rational(1));
  return node_disjoint_maxflow(lg, ones);
}

void write_dot(std::ostream& out, const LineGraph& lg) {
  auto label = [&](int v) -> std::string {
    if (v == LineGraph::kSource) return "s";
    if (v == LineGraph::kSink) return "d";
    const Contact& c = lg.contact(v);
    return TimeVaryingGraph::edge_label(c.edge) + "@" + std::to_string(c.slot);
  };
  out << "digraph line_graph {\n";
  for (int v = 0; v < lg.node_count(); ++v) {
    for (int w : lg.successors(v)) out << "  \"" << label(v) << "\" -> \"" << label(w) << "\";\n";
  }
  out << "}\n";
}

}  // namespace tempocut
