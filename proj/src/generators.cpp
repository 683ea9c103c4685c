#include "tempocut/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tempocut/maxflow_delta.hpp"
#include "tempocut/mincut_delta.hpp"

namespace tempocut {

TimeVaryingGraph gen_random_tvg(int nodes, int horizon, double p, std::uint64_t seed) {
  if (nodes < 2) throw InputError("random graph needs at least 2 nodes");
  if (horizon < 1) throw InputError("horizon must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("activation probability must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> links{{1, 0}};
  std::vector<double> degree(nodes, 0.0);
  degree[0] = degree[1] = 1;
  for (int v = 2; v < nodes; ++v) {
    std::set<int> targets;
    if (v == 2) {
      targets = {0, 1};
    } else {
      std::discrete_distribution<int> pick(degree.begin(), degree.begin() + v);
      while (targets.size() < 2) targets.insert(pick(rng));
    }
    for (int u : targets) {
      links.emplace_back(v, u);
      degree[u] += 1;
      degree[v] += 1;
    }
  }

  TimeVaryingGraph g(horizon);
  for (int v = 0; v < nodes; ++v) g.add_node("v" + std::to_string(v));
  std::bernoulli_distribution on(p);
  auto draw = [&] {
    std::vector<Slot> active;
    for (Slot t = 1; t <= horizon; ++t) {
      if (on(rng)) active.push_back(t);
    }
    return active;
  };
  for (const auto& [a, b] : links) {
    g.add_edge(a, b, draw());
    g.add_edge(b, a, draw());
  }
  return g;
}

namespace {

// Level j hangs off d_{j-1} (last used slot B) through nodes v_{j,1..2j-1}.
// Direct descent: s -> v_{j,1} -> ... -> v_{j,2j-1} -> d_j in slots B+2 ...
// B+2j. Bypass i leaves d_{j-1} at slot B+1 for v_{j,2i-1}, takes the
// direct edge out of it one slot early and then the shortcut
// v_{j,2i} -> d_j; the last bypass shares the final edge with the descent.
Instance build_counterexample(int k) {
  Instance inst;
  std::vector<std::tuple<NodeId, NodeId, std::vector<Slot>>> edges;
  std::vector<std::string> names{"s", "d1"};
  edges.push_back({0, 1, {2}});
  NodeId prev_dest = 1;
  int last = 2;
  for (int j = 2; j <= k; ++j) {
    const int base = last;
    std::vector<NodeId> v(2 * j);
    for (int i = 1; i < 2 * j; ++i) {
      names.push_back("v" + std::to_string(j) + "_" + std::to_string(i));
      v[i] = static_cast<NodeId>(names.size() - 1);
    }
    names.push_back("d" + std::to_string(j));
    const NodeId dest = static_cast<NodeId>(names.size() - 1);
    // Slot of the direct descent's hop leaving v_{j,i}.
    auto hop = [&](int i) { return base + 2 + i; };

    edges.push_back({0, v[1], {hop(0)}});
    for (int i = 1; i < j; ++i) {
      const NodeId a = v[2 * i - 1];
      const NodeId b = v[2 * i];
      edges.push_back({a, b, {hop(2 * i - 1) - 1, hop(2 * i - 1)}});
      edges.push_back({b, v[2 * i + 1], {hop(2 * i)}});
      edges.push_back({b, dest, {hop(2 * i - 1)}});
    }
    edges.push_back({v[2 * j - 1], dest, {hop(2 * j - 1)}});
    for (int i = 1; i <= j; ++i) edges.push_back({prev_dest, v[2 * i - 1], {base + 1}});

    prev_dest = dest;
    last = hop(2 * j - 1);
  }

  inst.graph = TimeVaryingGraph(std::max(last, 3));
  for (const auto& name : names) inst.graph.add_node(name);
  for (auto& [from, to, active] : edges) inst.graph.add_edge(from, to, std::move(active));
  inst.source = 0;
  inst.destination = prev_dest;
  return inst;
}

}  // namespace

Instance gen_counterexample(int k) {
  if (k < 1) throw InputError("counterexample index must be at least 1");
  Instance inst = build_counterexample(k);
  if (k <= 3) {
    for (int delta = 2; delta <= 3; ++delta) {
      const int flow = exact_maxflow_delta(inst.graph, inst.source, inst.destination, delta).count();
      const int cut = exact_mincut_delta(inst.graph, inst.source, inst.destination, delta).count();
      if (flow != 1 || cut != k) {
        throw std::logic_error("counterexample " + std::to_string(k) + " has flow " +
                               std::to_string(flow) + " and cut " + std::to_string(cut) +
                               " at delta " + std::to_string(delta));
      }
    }
  }
  return inst;
}

void validate_digraph(const WeightedDigraph& w) {
  std::set<std::string> names;
  for (const auto& n : w.nodes) {
    if (!names.insert(n).second) throw InputError("repeated node name '" + n + "'");
  }
  auto known = [&](const std::string& n) {
    if (!names.contains(n)) throw InputError("unknown node '" + n + "'");
  };
  for (const auto& a : w.arcs) {
    known(a.from);
    known(a.to);
    if (a.len < 1) throw InputError("arc " + a.from + "->" + a.to + " has nonpositive length");
    if (a.from == a.to) throw InputError("self-loop at '" + a.from + "'");
  }
  known(w.s);
  known(w.d);
  if (w.s == w.d) throw InputError("source and destination must differ");
  if (w.L < 1) throw InputError("length budget must be at least 1");
}

Instance bledp_expand(const WeightedDigraph& w) {
  validate_digraph(w);
  Instance inst;
  TimeVaryingGraph& g = inst.graph;
  g = TimeVaryingGraph(w.L);
  for (const auto& n : w.nodes) g.add_node(n);
  std::vector<Slot> always(w.L);
  for (int t = 1; t <= w.L; ++t) always[t - 1] = t;

  for (std::size_t i = 0; i < w.arcs.size(); ++i) {
    const auto& a = w.arcs[i];
    NodeId at = g.node(a.from);
    for (int step = 1; step < a.len; ++step) {
      const NodeId mid = g.add_node("_" + std::to_string(i + 1) + "_" + std::to_string(step));
      g.add_edge(at, mid, always);
      at = mid;
    }
    const NodeId to = g.node(a.to);
    if (g.find_edge(at, to)) {
      throw InputError("parallel unit-length arcs " + a.from + "->" + a.to + " are not supported");
    }
    g.add_edge(at, to, always);
  }
  inst.source = g.node(w.s);
  inst.destination = g.node(w.d);
  return inst;
}

int bledp_exact(const WeightedDigraph& w, int max_arcs) {
  validate_digraph(w);
  const int m = static_cast<int>(w.arcs.size());
  if (m > std::min(max_arcs, 63)) {
    throw CapacityError(std::to_string(m) + " arcs exceed cap " + std::to_string(max_arcs));
  }
  std::map<std::string, std::vector<int>> out;
  for (int i = 0; i < m; ++i) out[w.arcs[i].from].push_back(i);

  std::vector<std::uint64_t> paths;
  std::set<std::string> on_path{w.s};
  std::function<void(const std::string&, int, std::uint64_t)> walk =
      [&](const std::string& at, int used, std::uint64_t arcs) {
        if (at == w.d) {
          paths.push_back(arcs);
          return;
        }
        for (int i : out[at]) {
          const auto& a = w.arcs[i];
          if (used + a.len > w.L || on_path.contains(a.to)) continue;
          on_path.insert(a.to);
          walk(a.to, used + a.len, arcs | (std::uint64_t{1} << i));
          on_path.erase(a.to);
        }
      };
  walk(w.s, 0, 0);

  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> pack = [&](std::size_t i, std::uint64_t taken,
                                                                  int count) {
    best = std::max(best, count);
    if (i == paths.size() || count + static_cast<int>(paths.size() - i) <= best) return;
    if ((paths[i] & taken) == 0) pack(i + 1, taken | paths[i], count + 1);
    pack(i + 1, taken, count);
  };
  pack(0, 0, 0);
  return best;
}

WeightedDigraph gen_random_digraph(int nodes, double arc_p, int max_len, int L,
                                   std::uint64_t seed) {
  if (nodes < 2) throw InputError("digraph needs at least 2 nodes");
  if (max_len < 1) throw InputError("max_len must be at least 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution has(arc_p);
  std::uniform_int_distribution<int> len(1, max_len);
  WeightedDigraph w;
  for (int v = 0; v < nodes; ++v) w.nodes.push_back("u" + std::to_string(v));
  for (int i = 0; i < nodes; ++i) {
    for (int j = 0; j < nodes; ++j) {
      if (i == j || !has(rng)) continue;
      w.arcs.push_back({w.nodes[i], w.nodes[j], len(rng)});
    }
  }
  w.s = w.nodes.front();
  w.d = w.nodes.back();
  w.L = L;
  return w;
}

}  // namespace tempocut
