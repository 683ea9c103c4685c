#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tempocut/generators.hpp"
#include "tempocut/maxflow_delta.hpp"
#include "tempocut/mincut_delta.hpp"
#include "tempocut/tvg.hpp"

namespace tempocut {

/// TVG document: {"T", "nodes", "edges": [{"from", "to", "active"}]}, with
/// optional "source" and "destination" node names.
struct GraphDocument {
  TimeVaryingGraph graph;
  std::optional<std::string> source;
  std::optional<std::string> destination;
};

/// Parses and validates; any violation is an InputError listing all of them.
GraphDocument parse_graph(const std::string& text);
std::string dump_graph(const TimeVaryingGraph& g, const std::optional<std::string>& source = {},
                       const std::optional<std::string>& destination = {}, bool pretty = false);
std::string dump_instance(const Instance& inst, bool pretty = false);

using Json = nlohmann::ordered_json;

Json flow_json(const FlowResult& r);
Json cut_json(const CutResult& r);
Json verdict_json(const SurvivabilityVerdict& v);
std::string render(const Json& j, bool pretty);

std::string dump_flow(const FlowResult& r, bool pretty = false);
std::string dump_cut(const CutResult& r, bool pretty = false);
std::string dump_verdict(const SurvivabilityVerdict& v, bool pretty = false);

WeightedDigraph parse_digraph(const std::string& text);
std::string dump_digraph(const WeightedDigraph& w, bool pretty = false);

/// Whole file as a string; InputError if it cannot be opened.
std::string read_file(const std::string& path);
/// Writes `text` to path, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

}  // namespace tempocut
