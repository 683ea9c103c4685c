#include "tempocut/sim.hpp"

#include <cstdio>
#include <future>
#include <map>
#include <random>
#include <tuple>

#include "tempocut/maxflow_delta.hpp"

namespace tempocut {

namespace {

std::mt19937_64 packet_rng(std::uint64_t master, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

void check_model(double p, int d_max) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("failure probability must lie in [0, 1]");
  if (d_max < 0) throw InputError("maximum failure duration must be nonnegative");
}

}  // namespace

std::vector<DeltaRemoval> sample_failures(const TimeVaryingGraph& g, const FailureModel& fm) {
  check_model(fm.p, fm.d_max);
  std::mt19937_64 rng(fm.seed);
  std::bernoulli_distribution onset(fm.p);
  std::uniform_int_distribution<int> duration(0, fm.d_max);
  std::vector<DeltaRemoval> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (Slot t = 1; t <= g.horizon(); ++t) {
      if (onset(rng)) out.push_back({e, t, duration(rng)});
    }
  }
  return out;
}

std::vector<Journey> djr_route(const TimeVaryingGraph& g, NodeId s, NodeId d, int n, int delta) {
  if (n < 1) throw InputError("copy count n must be at least 1");
  return greedy_maxflow_delta(g, s, d, delta, n).journeys;
}

TimeVaryingGraph carve_window(const TimeVaryingGraph& g, Slot start, int length) {
  if (length < 1) throw InputError("window length must be at least 1");
  const int T = g.horizon();
  TimeVaryingGraph w(length);
  for (NodeId v = 0; v < g.node_count(); ++v) w.add_node(g.node_name(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<Slot> active;
    for (Slot k = 1; k <= length; ++k) {
      const Slot abs = ((start - 1 + k - 1) % T + T) % T + 1;
      if (g.is_active(e, abs)) active.push_back(k);
    }
    w.add_edge(g.edge(e).from, g.edge(e).to, std::move(active));
  }
  return w;
}

std::optional<Slot> delivery_slot(const TimeVaryingGraph& g, const std::vector<Journey>& routes,
                                  const std::vector<DeltaRemoval>& failures) {
  ContactMask alive(g.contact_count(), 1);
  for (const DeltaRemoval& r : failures) {
    for (const Contact& c : removal_footprint(g, r)) alive[g.contact_index(c)] = 0;
  }
  std::optional<Slot> best;
  for (const Journey& j : routes) {
    bool ok = !j.hops.empty();
    for (const Contact& c : j.hops) ok = ok && alive[g.contact_index(c)];
    if (ok && (!best || j.hops.back().slot < *best)) best = j.hops.back().slot;
  }
  return best;
}

SimReport run_simulation(const SimConfig& cfg) {
  check_model(cfg.p, cfg.d_max);
  if (cfg.n < 1) throw InputError("copy count n must be at least 1");
  if (cfg.deadline < 1) throw InputError("deadline must be at least 1");
  if (cfg.delta < 1 || cfg.delta > cfg.deadline) throw InputError("delta must lie in [1, deadline]");
  if (cfg.packet_count < 0) throw InputError("packet count must be nonnegative");
  if (cfg.graph.node_count() < 2) throw InputError("simulation needs at least 2 nodes");

  SimReport report;
  report.n = cfg.n;
  report.delta = cfg.delta;
  report.deadline = cfg.deadline;
  report.p = cfg.p;
  report.d_max = cfg.d_max;
  report.seed = cfg.seed;
  report.packets = cfg.packet_count;

  const int T = cfg.graph.horizon();
  const int nodes = cfg.graph.node_count();
  std::map<Slot, TimeVaryingGraph> windows;
  std::map<std::tuple<Slot, NodeId, NodeId>, std::vector<Journey>> routes;
  Slot clock = 1;
  for (int i = 0; i < cfg.packet_count; ++i) {
    auto rng = packet_rng(cfg.seed, static_cast<std::uint64_t>(i));
    PacketRecord rec;
    rec.source = std::uniform_int_distribution<NodeId>(0, nodes - 1)(rng);
    rec.destination = std::uniform_int_distribution<NodeId>(0, nodes - 2)(rng);
    if (rec.destination >= rec.source) ++rec.destination;
    rec.start = clock;
    const std::uint64_t failure_seed = rng();

    auto win = windows.find(clock);
    if (win == windows.end()) win = windows.emplace(clock, carve_window(cfg.graph, clock, cfg.deadline)).first;
    const auto key = std::tuple(clock, rec.source, rec.destination);
    auto route = routes.find(key);
    if (route == routes.end()) {
      route = routes.emplace(key, djr_route(win->second, rec.source, rec.destination, cfg.n, cfg.delta)).first;
    }
    rec.copies = static_cast<int>(route->second.size());

    const auto failures = sample_failures(win->second, {cfg.p, cfg.d_max, failure_seed});
    const auto arrival = delivery_slot(win->second, route->second, failures);
    rec.delivered = arrival.has_value();
    rec.finish = arrival.value_or(cfg.deadline);
    if (!rec.delivered) ++report.lost;
    clock = (clock - 1 + rec.finish) % T + 1;
    report.records.push_back(rec);
  }
  return report;
}

std::vector<SimReport> sweep(const SimConfig& base, const SweepSpec& spec) {
  std::vector<std::future<SimReport>> jobs;
  for (int n : spec.n_values) {
    for (int delta : spec.delta_values) {
      for (int deadline : spec.deadlines) {
        SimConfig cfg = base;
        cfg.n = n;
        cfg.delta = delta;
        cfg.deadline = deadline;
        jobs.push_back(std::async(std::launch::async, [cfg = std::move(cfg)] { return run_simulation(cfg); }));
      }
    }
  }
  std::vector<SimReport> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

std::string sweep_csv(const std::vector<SimReport>& reports) {
  std::string out = "n,delta,deadline,p,d_max,seed,packets,loss_rate\n";
  char buf[256];
  for (const SimReport& r : reports) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%.6g,%d,%llu,%d,%.6f\n", r.n, r.delta, r.deadline, r.p,
                  r.d_max, static_cast<unsigned long long>(r.seed), r.packets, r.loss_rate());
    out += buf;
  }
  return out;
}

std::string packet_json_lines(const SimReport& report) {
  std::string out;
  char buf[256];
  for (const PacketRecord& r : report.records) {
    std::snprintf(buf, sizeof buf,
                  "{\"source\":%d,\"destination\":%d,\"start\":%d,\"copies\":%d,\"delivered\":%s,"
                  "\"finish\":%d}\n",
                  r.source, r.destination, r.start, r.copies, r.delivered ? "true" : "false",
                  r.finish);
    out += buf;
  }
  return out;
}

}  // namespace tempocut
