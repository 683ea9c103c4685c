#include "tempocut/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace tempocut {

namespace {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("field \"") + key + "\": " + e.what());
  }
}

Json contact_json(const Contact& c) { return Json::array({TimeVaryingGraph::edge_label(c.edge), c.slot}); }

}  // namespace

GraphDocument parse_graph(const std::string& text) {
  const Json j = parse_json(text);
  GraphDocument doc;
  TimeVaryingGraph& g = doc.graph;
  g = TimeVaryingGraph(field<int>(j, "T"));
  std::vector<std::string> problems;
  for (const auto& name : field<std::vector<std::string>>(j, "nodes")) g.add_node(name);
  const Json edges = field<Json>(j, "edges");
  if (!edges.is_array()) throw InputError("field \"edges\" must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto from = g.find_node(field<std::string>(edges[i], "from"));
    const auto to = g.find_node(field<std::string>(edges[i], "to"));
    if (!from || !to) {
      problems.push_back("edge " + std::to_string(i + 1) + " names an unknown node");
      continue;
    }
    g.add_edge(*from, *to, field<std::vector<Slot>>(edges[i], "active"));
  }
  for (const char* key : {"source", "destination"}) {
    if (!j.contains(key)) continue;
    const auto name = field<std::string>(j, key);
    if (!g.find_node(name)) problems.push_back(std::string(key) + " '" + name + "' is not a node");
    (key[0] == 's' ? doc.source : doc.destination) = name;
  }
  const ValidationReport report = validate_graph(g);
  problems.insert(problems.end(), report.violations.begin(), report.violations.end());
  if (!problems.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InputError(msg);
  }
  return doc;
}

std::string dump_graph(const TimeVaryingGraph& g, const std::optional<std::string>& source,
                       const std::optional<std::string>& destination, bool pretty) {
  Json j;
  j["T"] = g.horizon();
  Json nodes = Json::array();
  for (NodeId v = 0; v < g.node_count(); ++v) nodes.push_back(g.node_name(v));
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto active = g.active(e);
    edges.push_back({{"from", g.node_name(g.edge(e).from)},
                     {"to", g.node_name(g.edge(e).to)},
                     {"active", std::vector<Slot>(active.begin(), active.end())}});
  }
  j["edges"] = edges;
  if (source) j["source"] = *source;
  if (destination) j["destination"] = *destination;
  return render(j, pretty);
}

std::string dump_instance(const Instance& inst, bool pretty) {
  return dump_graph(inst.graph, inst.graph.node_name(inst.source),
                    inst.graph.node_name(inst.destination), pretty);
}

std::string render(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

Json flow_json(const FlowResult& r) {
  Json journeys = Json::array();
  for (const Journey& jr : r.journeys) {
    Json hops = Json::array();
    for (const Contact& c : jr.hops) hops.push_back(contact_json(c));
    journeys.push_back(hops);
  }
  return Json{{"delta", r.delta}, {"count", r.count()}, {"exact", r.exact}, {"journeys", journeys}};
}

std::string dump_flow(const FlowResult& r, bool pretty) { return render(flow_json(r), pretty); }

Json cut_json(const CutResult& r) {
  Json removals = Json::array();
  for (const DeltaRemoval& x : r.removals) {
    removals.push_back({{"edge", TimeVaryingGraph::edge_label(x.edge)}, {"head", x.head}});
  }
  return Json{{"delta", r.delta}, {"count", r.count()}, {"exact", r.exact}, {"removals", removals}};
}

std::string dump_cut(const CutResult& r, bool pretty) { return render(cut_json(r), pretty); }

Json verdict_json(const SurvivabilityVerdict& v) {
  return Json{{"n", v.n},
              {"delta", v.delta},
              {"verdict", to_string(v.verdict)},
              {"lower", v.lower},
              {"upper", v.upper}};
}

std::string dump_verdict(const SurvivabilityVerdict& v, bool pretty) {
  return render(verdict_json(v), pretty);
}

WeightedDigraph parse_digraph(const std::string& text) {
  const Json j = parse_json(text);
  WeightedDigraph w;
  w.nodes = field<std::vector<std::string>>(j, "nodes");
  const Json arcs = field<Json>(j, "arcs");
  if (!arcs.is_array()) throw InputError("field \"arcs\" must be an array");
  for (const Json& a : arcs) {
    w.arcs.push_back({field<std::string>(a, "from"), field<std::string>(a, "to"), field<int>(a, "len")});
  }
  w.s = field<std::string>(j, "s");
  w.d = field<std::string>(j, "d");
  w.L = field<int>(j, "L");
  validate_digraph(w);
  return w;
}

std::string dump_digraph(const WeightedDigraph& w, bool pretty) {
  Json arcs = Json::array();
  for (const auto& a : w.arcs) arcs.push_back({{"from", a.from}, {"to", a.to}, {"len", a.len}});
  Json j{{"nodes", w.nodes}, {"arcs", arcs}, {"s", w.s}, {"d", w.d}, {"L", w.L}};
  return render(j, pretty);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace tempocut
