#include "tempocut/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "tempocut/maxflow_delta.hpp"
#include "tempocut/mincut_delta.hpp"
#include "tempocut/sim.hpp"

namespace tempocut {

namespace {

std::string describe(int index, int delta) {
  return "instance " + std::to_string(index) + " delta " + std::to_string(delta);
}

void tally(SuiteResult& r, bool ok, const std::string& what) {
  ++r.total;
  if (ok) {
    ++r.passed;
  } else {
    r.notes.push_back("failed: " + what);
  }
}

SuiteResult menger1(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "menger1";
  for (int i = 0; i < count; ++i) {
    const Instance in = corpus_instance(i, seed);
    const int flow = exact_maxflow_delta(in.graph, in.source, in.destination, 1).count();
    const int cut = exact_mincut_delta(in.graph, in.source, in.destination, 1).count();
    tally(r, flow == cut, describe(i, 1) + ": " + std::to_string(flow) + " vs " + std::to_string(cut));
  }
  return r;
}

SuiteResult duality(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "duality";
  for (int i = 0; i < count; ++i) {
    const Instance in = corpus_instance(i, seed);
    for (int delta : {1, 2, 3, 5}) {
      const int flow = exact_maxflow_delta(in.graph, in.source, in.destination, delta).count();
      const int cut = exact_mincut_delta(in.graph, in.source, in.destination, delta).count();
      tally(r, flow <= cut, describe(i, delta));
    }
  }
  return r;
}

SuiteResult sandwich(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "sandwich";
  std::mt19937_64 rng(seed);
  const int deltas[] = {2, 3, 5};
  for (int i = 0; i < count; ++i) {
    const Instance in = corpus_instance(i, seed);
    const int delta = deltas[i % 3];
    const WeightMap w = set_weights(in.graph, delta);
    std::vector<Contact> cut;
    if (reachable(in.graph, in.source, in.destination)) {
      cut = weighted_mincut_1(in.graph, w, in.source, in.destination);
    }
    std::bernoulli_distribution extra(0.2);
    for (const Contact& c : contacts(in.graph)) {
      if (extra(rng) && std::find(cut.begin(), cut.end(), c) == cut.end()) cut.push_back(c);
    }
    const bool disconnects = !reachable(apply_removals(in.graph, delta_cover(cut, delta)), in.source,
                                        in.destination);
    tally(r, disconnects && cover_sandwich_holds(in.graph, cut, w, delta), describe(i, delta));
  }
  return r;
}

SuiteResult certificates(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "certificates";
  for (int i = 0; i < count; ++i) {
    const Instance in = corpus_instance(i, seed);
    const TimeVaryingGraph& g = in.graph;
    for (int delta : {1, 2, 3, 5}) {
      const int alg = greedy_maxflow_delta(g, in.source, in.destination, delta).count();
      const int opt = exact_maxflow_delta(g, in.source, in.destination, delta).count();
      tally(r, greedy_bound_certificate(alg, opt, g.edge_count(), g.horizon(), delta),
            describe(i, delta) + " flow " + std::to_string(alg) + "/" + std::to_string(opt));
      const int approx = minweight_mincut_delta(g, in.source, in.destination, delta).count();
      const int best = exact_mincut_delta(g, in.source, in.destination, delta).count();
      const bool ok = best <= approx && approx <= delta * best && (delta > 1 || approx == best);
      tally(r, ok, describe(i, delta) + " cut " + std::to_string(approx) + "/" + std::to_string(best));
    }
  }
  return r;
}

SuiteResult reduction(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "reduction";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count;) {
    std::uniform_int_distribution<int> nodes(3, 6), budget(1, 5);
    const WeightedDigraph w = gen_random_digraph(nodes(rng), 0.35, 3, budget(rng), rng());
    if (w.arcs.size() > 10) continue;
    const Instance in = bledp_expand(w);
    const int direct = bledp_exact(w);
    const int flow = exact_maxflow_delta(in.graph, in.source, in.destination, w.L).count();
    tally(r, direct == flow, "digraph " + std::to_string(i) + ": " + std::to_string(direct) + " vs " +
                                 std::to_string(flow));
    ++i;
  }
  return r;
}

SuiteResult gapfamily() {
  SuiteResult r;
  r.name = "gapfamily";
  for (int k = 1; k <= 3; ++k) {
    const Instance in = gen_counterexample(k);
    for (int delta : {2, 3}) {
      const int flow = exact_maxflow_delta(in.graph, in.source, in.destination, delta).count();
      const int cut = exact_mincut_delta(in.graph, in.source, in.destination, delta).count();
      tally(r, flow == 1 && cut == k, "k " + std::to_string(k) + " delta " + std::to_string(delta));
      r.notes.push_back("k " + std::to_string(k) + " delta " + std::to_string(delta) + ": ratio " +
                        std::to_string(cut / std::max(flow, 1)));
    }
  }
  return r;
}

SuiteResult cover(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "cover";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int delta = std::uniform_int_distribution<int>(1, 5)(rng);
    const int edges = std::uniform_int_distribution<int>(1, 2)(rng);
    std::vector<Contact> cs;
    std::bernoulli_distribution on(0.45);
    for (EdgeId e = 0; e < edges; ++e) {
      for (Slot t = 1; t <= 12; ++t) {
        if (on(rng)) cs.push_back({e, t});
      }
    }
    const int greedy = static_cast<int>(delta_cover(cs, delta).size());
    tally(r, greedy == brute_force_cover(cs, delta), "set " + std::to_string(i));
  }
  return r;
}

SuiteResult protection(int count, std::uint64_t seed) {
  SuiteResult r;
  r.name = "protection";
  std::mt19937_64 rng(seed);
  for (int attempt = 0; r.total < count; ++attempt) {
    if (attempt > 100 * count) throw std::logic_error("protection suite found too few routable cases");
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    const int delta = std::uniform_int_distribution<int>(1, 4)(rng);
    const TimeVaryingGraph g = gen_random_tvg(8, 16, 0.5, rng());
    const auto routes = djr_route(g, 0, g.node_count() - 1, n, delta);
    if (static_cast<int>(routes.size()) < n) continue;
    std::vector<DeltaRemoval> failures;
    for (int f = 0; f < n - 1; ++f) {
      const Journey& j = routes[std::uniform_int_distribution<std::size_t>(0, routes.size() - 1)(rng)];
      const Contact hop = j.hops[std::uniform_int_distribution<std::size_t>(0, j.hops.size() - 1)(rng)];
      const int length = std::uniform_int_distribution<int>(1, delta)(rng);
      const Slot head =
          std::uniform_int_distribution<Slot>(std::max(1, hop.slot - length + 1), hop.slot)(rng);
      failures.push_back({hop.edge, head, length});
    }
    tally(r, delivery_slot(g, routes, failures).has_value(), "case " + std::to_string(r.total));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"menger1", "duality", "sandwich",  "certificates",
                                              "reduction", "gapfamily", "cover", "protection"};
  return names;
}

SuiteResult run_suite(const std::string& name, int count, std::uint64_t seed) {
  auto pick = [count](int fallback) { return count > 0 ? count : fallback; };
  if (name == "menger1") return menger1(pick(200), seed);
  if (name == "duality") return duality(pick(200), seed);
  if (name == "sandwich") return sandwich(pick(200), seed);
  if (name == "certificates") return certificates(pick(100), seed);
  if (name == "reduction") return reduction(pick(50), seed);
  if (name == "gapfamily") return gapfamily();
  if (name == "cover") return cover(pick(100), seed);
  if (name == "protection") return protection(pick(50), seed);
  throw InputError("unknown suite '" + name + "'");
}

Instance corpus_instance(int index, std::uint64_t seed) {
  const int nodes = 8 + index % 5;
  Instance in;
  in.graph = gen_random_tvg(nodes, 10, 0.5, seed * 1'000'003 + static_cast<std::uint64_t>(index));
  in.source = 0;
  in.destination = nodes - 1;
  return in;
}

int brute_force_cover(const std::vector<Contact>& cs, int delta) {
  std::set<DeltaRemoval> candidates;
  for (const Contact& c : cs) {
    for (Slot h = c.slot - delta + 1; h <= c.slot; ++h) candidates.insert({c.edge, h, delta});
  }
  const std::vector<DeltaRemoval> heads(candidates.begin(), candidates.end());
  auto covers = [&](const std::vector<int>& pick) {
    return std::all_of(cs.begin(), cs.end(), [&](const Contact& c) {
      return std::any_of(pick.begin(), pick.end(), [&](int i) {
        const DeltaRemoval& r = heads[i];
        return r.edge == c.edge && r.head <= c.slot && c.slot < r.head + r.delta;
      });
    });
  };
  std::vector<int> pick;
  std::function<bool(int, int)> choose = [&](int from, int left) {
    if (left == 0) return covers(pick);
    for (int i = from; i < static_cast<int>(heads.size()); ++i) {
      pick.push_back(i);
      if (choose(i + 1, left - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 0;; ++k) {
    pick.clear();
    if (choose(0, k)) return k;
  }
}

}  // namespace tempocut
