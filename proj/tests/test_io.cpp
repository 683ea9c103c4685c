#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "oracles.hpp"
#include "tempocut/generators.hpp"
#include "tempocut/io.hpp"

using namespace tempocut;

namespace {

const char* kEx1 = R"({"T":3,"nodes":["s","a","d"],"edges":[
  {"from":"s","to":"a","active":[1,2]},
  {"from":"a","to":"d","active":[2,3]}],"source":"s","destination":"d"})";

std::string error_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_graph") {
  const auto doc = parse_graph(kEx1);
  CHECK(doc.graph == oracle::ex1());
  CHECK(doc.source == "s");
  CHECK(doc.destination == "d");
  CHECK_FALSE(parse_graph(R"({"T":1,"nodes":[],"edges":[]})").source.has_value());
}

TEST_CASE("parse_graph rejects invalid documents") {
  CHECK(error_of("{").find("malformed JSON") != std::string::npos);
  CHECK(error_of(R"({"nodes":[],"edges":[]})").find("\"T\"") != std::string::npos);
  CHECK(error_of(R"({"T":"x","nodes":[],"edges":[]})").find("\"T\"") != std::string::npos);
  CHECK(error_of(R"({"T":2,"nodes":["a"],"edges":[{"from":"a","to":"b","active":[1]}]})")
            .find("unknown node") != std::string::npos);
  const auto both = error_of(
      R"({"T":2,"nodes":["a","b"],"edges":[{"from":"a","to":"b","active":[3]},{"from":"a","to":"b","active":[1]}]})");
  CHECK(both.find("outside") != std::string::npos);
  CHECK(both.find("duplicate edge") != std::string::npos);
  CHECK(error_of(R"({"T":2,"nodes":["a","b"],"edges":[],"source":"z"})").find("'z'") != std::string::npos);
}

TEST_CASE("graph round trip") {
  const auto g = oracle::ex1();
  const std::string text = dump_graph(g, std::string("s"), std::string("d"));
  CHECK(text == R"({"T":3,"nodes":["s","a","d"],"edges":[{"from":"s","to":"a","active":[1,2]},)"
                R"({"from":"a","to":"d","active":[2,3]}],"source":"s","destination":"d"})"
                "\n");
  CHECK(parse_graph(text).graph == g);
  CHECK(parse_graph(dump_graph(g, {}, {}, true)).graph == g);
}

TEST_CASE("property: random graphs survive a round trip") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = gen_random_tvg(9, 7, 0.4, seed);
    const auto text = dump_graph(g);
    CHECK(parse_graph(text).graph == g);
    CHECK(dump_graph(parse_graph(text).graph) == text);
  }
  const auto inst = gen_counterexample(3);
  const auto doc = parse_graph(dump_instance(inst));
  CHECK(doc.graph == inst.graph);
  CHECK(doc.source == inst.graph.node_name(inst.source));
  CHECK(doc.destination == inst.graph.node_name(inst.destination));
}

TEST_CASE("result documents") {
  FlowResult f;
  f.delta = 1;
  f.exact = true;
  f.journeys = {Journey{{{0, 1}, {1, 2}}}};
  CHECK(flow_json(f)["count"] == 1);
  CHECK(flow_json(f)["journeys"].size() == 1);

  CutResult c{{{0, 1, 2}}, 2, false};
  CHECK(dump_cut(c) == R"({"delta":2,"count":1,"exact":false,"removals":[{"edge":"e1","head":1}]})"
                       "\n");

  const SurvivabilityVerdict v{1, 2, Verdict::kNotSurvivable, 1, 1};
  CHECK(verdict_json(v)["verdict"] == "not-survivable");
}

TEST_CASE("digraph round trip") {
  WeightedDigraph w;
  w.nodes = {"s", "a", "d"};
  w.arcs = {{"s", "a", 2}, {"a", "d", 1}};
  w.s = "s";
  w.d = "d";
  w.L = 3;
  const auto back = parse_digraph(dump_digraph(w));
  CHECK(back.nodes == w.nodes);
  CHECK(back.arcs.size() == 2);
  CHECK(back.arcs[0].len == 2);
  CHECK(back.L == 3);
  CHECK_THROWS_AS(parse_digraph(R"({"nodes":["s"],"arcs":[]})"), InputError);
}

TEST_CASE("files") {
  const auto path = std::filesystem::temp_directory_path() / "tempocut_io_test.json";
  write_output(path.string(), "hello\n");
  CHECK(read_file(path.string()) == "hello\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path.string()), InputError);
}
