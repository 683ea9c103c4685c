#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tempocut/generators.hpp"
#include "tempocut/io.hpp"
#include "tempocut/maxflow_delta.hpp"
#include "tempocut/mincut_delta.hpp"
#include "tempocut/sim.hpp"
#include "tempocut/trace.hpp"
#include "tempocut/verify.hpp"

using namespace tempocut;

namespace {

enum Exit { kOk = 0, kInput = 2, kCapacity = 3, kInternal = 4 };

std::size_t default_cap() {
  if (const char* env = std::getenv("TEMPOCUT_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("TEMPOCUT_CAP must be a positive integer, got '") + env + "'");
  }
  return kDefaultSearchCap;
}

// "1,2,5" or "1..40"; both forms may be mixed: "1..3,8".
std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw InputError(std::string(what) + ": '" + s + "' is not an integer");
    }
  };
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(num(part));
      continue;
    }
    const int lo = num(part.substr(0, dots));
    const int hi = num(part.substr(dots + 2));
    if (hi < lo) throw InputError(std::string(what) + ": empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw InputError(std::string(what) + " is empty");
  return out;
}

struct Query {
  GraphDocument doc;
  NodeId s = 0;
  NodeId d = 0;
};

Query load_query(const std::string& path, const std::string& src, const std::string& dst) {
  Query q{parse_graph(read_file(path))};
  const std::string s = !src.empty() ? src : q.doc.source.value_or("");
  const std::string d = !dst.empty() ? dst : q.doc.destination.value_or("");
  if (s.empty() || d.empty()) throw InputError("give --src and --dst (the graph names no default pair)");
  q.s = q.doc.graph.node(s);
  q.d = q.doc.graph.node(d);
  return q;
}

struct Options {
  std::string input;
  std::string output;
  std::string src;
  std::string dst;
  bool pretty = false;
  bool exact = false;
  std::optional<std::size_t> cap;
  int delta = 1;
  int n = 1;
  int nodes = 10;
  int horizon = 12;
  double p = 0.5;
  int k = 2;
  std::uint64_t seed = 1;
  std::string n_list = "1";
  std::string delta_list = "1";
  std::string ddl_list = "60";
  int d_max = 0;
  int packets = 1000;
  std::string trace;
  long long window_start = 0;
  std::string packets_out;
  std::string histogram_out;
  std::string intervals_out;
  std::string suite;
  int count = 0;
  int core = 5;
  int periphery = 5;
  int uplinks = 1;
  long long length = 720;
  int burst = 12;
  int period = 72;
};

void add_output(CLI::App* app, Options& o) {
  app->add_option("-o,--output", o.output, "Output file (default stdout)");
  app->add_flag("--pretty", o.pretty, "Indent JSON output");
}

void add_pair(CLI::App* app, Options& o) {
  app->add_option("--src", o.src, "Source node name");
  app->add_option("--dst", o.dst, "Destination node name");
}

int run_analyze(const Options& o) {
  const Query q = load_query(o.input, o.src, o.dst);
  const TimeVaryingGraph& g = q.doc.graph;
  const std::size_t cap = o.cap.value_or(default_cap());
  Json out{{"source", g.node_name(q.s)}, {"destination", g.node_name(q.d)}, {"delta", o.delta}};
  if (!o.exact) {
    out["maxflow"] = flow_json(greedy_maxflow_delta(g, q.s, q.d, o.delta));
    out["mincut"] = cut_json(minweight_mincut_delta(g, q.s, q.d, o.delta));
  } else {
    const FlowResult flow = exact_maxflow_delta(g, q.s, q.d, o.delta, cap);
    const CutResult cut = exact_mincut_delta(g, q.s, q.d, o.delta, 20'000, cap);
    out["maxflow"] = flow_json(flow);
    out["mincut"] = cut_json(cut);
    const int alg = greedy_maxflow_delta(g, q.s, q.d, o.delta).count();
    Json cert{{"greedy_maxflow", alg},
              {"greedy_ratio_bound", greedy_ratio_bound(g.edge_count(), g.horizon(), o.delta)},
              {"greedy_within_bound",
               greedy_bound_certificate(alg, flow.count(), g.edge_count(), g.horizon(), o.delta)}};
    if (o.delta <= std::min(g.horizon(), kMaxWeightedDelta)) {
      const int approx = minweight_mincut_delta(g, q.s, q.d, o.delta).count();
      cert["minweight_mincut"] = approx;
      cert["minweight_within_delta"] = cut.count() <= approx && approx <= o.delta * cut.count();
    }
    out["certificates"] = cert;
  }
  write_output(o.output, render(out, o.pretty));
  return kOk;
}

int run_survivable(const Options& o) {
  const Query q = load_query(o.input, o.src, o.dst);
  const auto v = survivability_bounds(q.doc.graph, q.s, q.d, o.n, o.delta, o.exact,
                                      o.cap.value_or(default_cap()));
  write_output(o.output, dump_verdict(v, o.pretty));
  return kOk;
}

int run_simulate(const Options& o) {
  SimConfig cfg;
  if (!o.trace.empty()) {
    if (o.horizon < 1) throw InputError("--t must be at least 1");
    cfg.graph = discretize(parse_contact_trace(read_file(o.trace)), o.window_start, o.horizon);
  } else if (!o.input.empty()) {
    cfg.graph = parse_graph(read_file(o.input)).graph;
  } else {
    throw InputError("give a TVG JSON file or --trace");
  }
  cfg.p = o.p;
  cfg.d_max = o.d_max;
  cfg.packet_count = o.packets;
  cfg.seed = o.seed;
  SweepSpec spec{int_list(o.n_list, "--n"), int_list(o.delta_list, "--delta"),
                 int_list(o.ddl_list, "--ddl")};
  const auto reports = sweep(cfg, spec);
  write_output(o.output, sweep_csv(reports));
  if (!o.packets_out.empty()) {
    std::string lines;
    for (const auto& r : reports) lines += packet_json_lines(r);
    write_output(o.packets_out, lines);
  }
  return kOk;
}

int run_verify(const Options& o) {
  std::vector<std::string> names = suite_names();
  if (!o.suite.empty()) names = {o.suite};
  bool all = true;
  Json report = Json::array();
  for (const auto& name : names) {
    const SuiteResult r = run_suite(name, o.count, o.seed);
    all = all && r.ok();
    if (o.pretty) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " " << r.passed << "/" << r.total << "\n";
      for (const auto& note : r.notes) std::cout << "  " << note << "\n";
    } else {
      report.push_back({{"suite", r.name}, {"passed", r.passed}, {"total", r.total}, {"notes", r.notes}});
    }
  }
  if (!o.pretty) write_output(o.output, render(report, false));
  return all ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Survivability analysis for time-varying graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate graphs and traces");
  gen->require_subcommand(1);
  auto* gen_random = gen->add_subcommand("random", "Scale-free graph with random activations");
  gen_random->add_option("--nodes", o.nodes, "Node count")->check(CLI::Range(2, 100000));
  gen_random->add_option("--t", o.horizon, "Horizon T")->check(CLI::PositiveNumber);
  gen_random->add_option("--p", o.p, "Activation probability")->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", o.seed, "Random seed");
  add_output(gen_random, o);
  auto* gen_gap = gen->add_subcommand("counterexample", "Member k of the flow/cut gap family");
  gen_gap->add_option("--k", o.k, "Family index")->check(CLI::Range(1, 50));
  add_output(gen_gap, o);
  auto* gen_bledp = gen->add_subcommand("bledp-expand", "Expand a weighted digraph into a TVG");
  gen_bledp->add_option("input", o.input, "Weighted digraph JSON")->required();
  add_output(gen_bledp, o);
  auto* gen_trace = gen->add_subcommand("trace", "Synthetic contact trace CSV");
  gen_trace->add_option("--core", o.core, "Always-on core nodes");
  gen_trace->add_option("--periphery", o.periphery, "Bursty peripheral nodes");
  gen_trace->add_option("--uplinks", o.uplinks, "Core links per peripheral node");
  gen_trace->add_option("--length", o.length, "Trace length in seconds");
  gen_trace->add_option("--burst", o.burst, "Burst length in seconds");
  gen_trace->add_option("--period", o.period, "Burst period in seconds");
  gen_trace->add_option("--seed", o.seed, "Random seed");
  gen_trace->add_option("-o,--output", o.output, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "MaxFlow and MinCut of an s-d pair");
  analyze->add_option("input", o.input, "TVG JSON")->required();
  analyze->add_option("--delta", o.delta, "Failure duration")->check(CLI::PositiveNumber);
  analyze->add_flag("--exact", o.exact, "Use the exact oracles");
  analyze->add_option("--cap", o.cap, "Search-node cap of the exact oracles");
  add_pair(analyze, o);
  add_output(analyze, o);

  auto* surv = app.add_subcommand("survivable", "Decide (n, delta)-survivability");
  surv->add_option("input", o.input, "TVG JSON")->required();
  surv->add_option("--n", o.n, "Number of failures")->check(CLI::NonNegativeNumber);
  surv->add_option("--delta", o.delta, "Failure duration")->check(CLI::PositiveNumber);
  surv->add_flag("--exact", o.exact, "Use the exact oracles");
  surv->add_option("--cap", o.cap, "Search-node cap of the exact oracles");
  add_pair(surv, o);
  add_output(surv, o);

  auto* sim = app.add_subcommand("simulate", "Packet loss under random failures");
  sim->add_option("input", o.input, "TVG JSON (or use --trace)");
  sim->add_option("--trace", o.trace, "Contact trace CSV");
  sim->add_option("--window-start", o.window_start, "First trace second used");
  sim->add_option("--t", o.horizon, "Trace seconds used");
  sim->add_option("--n", o.n_list, "Copy counts, e.g. 1,2,3");
  sim->add_option("--delta", o.delta_list, "Deltas, e.g. 1..40");
  sim->add_option("--ddl", o.ddl_list, "Deadlines in slots");
  sim->add_option("--p", o.p, "Failure onset probability")->check(CLI::Range(0.0, 1.0));
  sim->add_option("--dmax", o.d_max, "Maximum failure duration")->check(CLI::NonNegativeNumber);
  sim->add_option("--packets", o.packets, "Packets per sweep point")->check(CLI::NonNegativeNumber);
  sim->add_option("--seed", o.seed, "Master seed");
  sim->add_option("--packets-out", o.packets_out, "Per-packet JSON lines file");
  sim->add_option("-o,--output", o.output, "CSV output (default stdout)");

  auto* ingest = app.add_subcommand("ingest", "Discretize a contact trace into a TVG");
  ingest->add_option("input", o.input, "Contact trace CSV")->required();
  ingest->add_option("--window-start", o.window_start, "Second mapped to slot 1");
  ingest->add_option("--t", o.horizon, "Horizon in slots")->check(CLI::PositiveNumber);
  add_output(ingest, o);

  auto* stats = app.add_subcommand("stats", "Contact duration histogram and per-pair intervals");
  stats->add_option("input", o.input, "Contact trace CSV")->required();
  stats->add_option("--histogram", o.histogram_out, "duration,count CSV (default stdout)");
  stats->add_option("--intervals", o.intervals_out, "Sorted intervals CSV");

  auto* verify = app.add_subcommand("verify", "Run the invariant suites");
  verify->add_option("--suite", o.suite, "Single suite to run");
  verify->add_option("--count", o.count, "Instances per suite (0 = default)");
  verify->add_option("--seed", o.seed, "Corpus seed");
  verify->add_flag("--pretty", o.pretty, "Human-readable summary");
  verify->add_option("-o,--output", o.output, "JSON output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (gen_random->parsed()) {
      write_output(o.output, dump_graph(gen_random_tvg(o.nodes, o.horizon, o.p, o.seed), {}, {}, o.pretty));
    } else if (gen_gap->parsed()) {
      write_output(o.output, dump_instance(gen_counterexample(o.k), o.pretty));
    } else if (gen_bledp->parsed()) {
      write_output(o.output, dump_instance(bledp_expand(parse_digraph(read_file(o.input))), o.pretty));
    } else if (gen_trace->parsed()) {
      write_output(o.output, trace_csv(synthetic_trace(o.core, o.periphery, o.uplinks, o.length,
                                                       o.burst, o.period, o.seed)));
    } else if (analyze->parsed()) {
      return run_analyze(o);
    } else if (surv->parsed()) {
      return run_survivable(o);
    } else if (sim->parsed()) {
      return run_simulate(o);
    } else if (ingest->parsed()) {
      const auto g = discretize(parse_contact_trace(read_file(o.input)), o.window_start, o.horizon);
      write_output(o.output, dump_graph(g, {}, {}, o.pretty));
    } else if (stats->parsed()) {
      const ContactStats st = contact_stats(parse_contact_trace(read_file(o.input)));
      write_output(o.histogram_out, histogram_csv(st));
      if (!o.intervals_out.empty()) write_output(o.intervals_out, intervals_csv(st));
    } else if (verify->parsed()) {
      return run_verify(o);
    }
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
