#include <doctest.h>

#include "oracles.hpp"
#include "tempocut/generators.hpp"
#include "tempocut/maxflow_delta.hpp"
#include "tempocut/mincut_delta.hpp"

using namespace tempocut;

TEST_CASE("gen_random_tvg") {
  const auto full = gen_random_tvg(2, 3, 1.0, 9);
  CHECK(full.node_count() == 2);
  CHECK(full.edge_count() == 2);
  CHECK(full.contact_count() == 6);
  CHECK(full.node_name(0) == "v0");

  const auto none = gen_random_tvg(12, 9, 0.0, 9);
  CHECK(none.contact_count() == 0);
  CHECK(validate_graph(none).ok);

  CHECK(gen_random_tvg(15, 10, 0.4, 77) == gen_random_tvg(15, 10, 0.4, 77));
  CHECK_FALSE(gen_random_tvg(15, 10, 0.4, 77) == gen_random_tvg(15, 10, 0.4, 78));

  CHECK_THROWS_AS(gen_random_tvg(1, 3, 0.5, 1), InputError);
  CHECK_THROWS_AS(gen_random_tvg(5, 0, 0.5, 1), InputError);
  CHECK_THROWS_AS(gen_random_tvg(5, 3, 1.5, 1), InputError);
}

TEST_CASE("property: random graphs are valid and symmetric in topology") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = gen_random_tvg(3 + static_cast<int>(seed % 10), 6, 0.5, seed);
    CHECK(validate_graph(g).ok);
    for (const Edge& e : g.edges()) CHECK(g.find_edge(e.to, e.from).has_value());
  }
}

TEST_CASE("gap family") {
  for (int k = 1; k <= 3; ++k) {
    const auto inst = gen_counterexample(k);
    CHECK(validate_graph(inst.graph).ok);
    for (int delta : {2, 3}) {
      CHECK(exact_maxflow_delta(inst.graph, inst.source, inst.destination, delta).count() == 1);
      CHECK(exact_mincut_delta(inst.graph, inst.source, inst.destination, delta).count() == k);
    }
  }
  CHECK(gen_counterexample(2).graph.horizon() == 7);
  CHECK_THROWS_AS(gen_counterexample(0), InputError);
}

TEST_CASE("bledp_expand") {
  WeightedDigraph w;
  w.nodes = {"s", "d"};
  w.arcs = {{"s", "d", 2}};
  w.s = "s";
  w.d = "d";
  w.L = 3;
  const auto inst = bledp_expand(w);
  CHECK(inst.graph.horizon() == 3);
  CHECK(inst.graph.node_count() == 3);
  CHECK(inst.graph.edge_count() == 2);
  for (EdgeId e = 0; e < 2; ++e) CHECK(inst.graph.active(e).size() == 3);
  CHECK(exact_maxflow_delta(inst.graph, inst.source, inst.destination, 3).count() == 1);

  w.arcs = {{"s", "d", 1}};
  const auto plain = bledp_expand(w);
  CHECK(plain.graph.node_count() == 2);
  CHECK(plain.graph.edge_count() == 1);

  w.arcs = {{"s", "d", 1}, {"s", "d", 1}};
  CHECK_THROWS_AS(bledp_expand(w), InputError);
}

TEST_CASE("validate_digraph") {
  WeightedDigraph w;
  w.nodes = {"s", "d"};
  w.arcs = {{"s", "d", 1}};
  w.s = "s";
  w.d = "d";
  CHECK_NOTHROW(validate_digraph(w));
  auto bad = w;
  bad.arcs[0].len = 0;
  CHECK_THROWS_AS(validate_digraph(bad), InputError);
  bad = w;
  bad.arcs[0].to = "x";
  CHECK_THROWS_AS(validate_digraph(bad), InputError);
  bad = w;
  bad.L = 0;
  CHECK_THROWS_AS(validate_digraph(bad), InputError);
  bad = w;
  bad.d = "s";
  CHECK_THROWS_AS(validate_digraph(bad), InputError);
  bad = w;
  bad.nodes.push_back("s");
  CHECK_THROWS_AS(validate_digraph(bad), InputError);
  bad = w;
  bad.arcs.push_back({"d", "d", 1});
  CHECK_THROWS_AS(validate_digraph(bad), InputError);
}

TEST_CASE("bledp_exact") {
  WeightedDigraph tri;
  tri.nodes = {"s", "a", "d"};
  tri.arcs = {{"s", "a", 2}, {"a", "d", 1}, {"s", "d", 3}};
  tri.s = "s";
  tri.d = "d";
  tri.L = 3;
  CHECK(bledp_exact(tri) == 2);
  const auto inst = bledp_expand(tri);
  CHECK(exact_maxflow_delta(inst.graph, inst.source, inst.destination, 3).count() == 2);

  tri.L = 2;
  tri.arcs = {{"s", "a", 2}, {"a", "d", 1}};
  CHECK(bledp_exact(tri) == 0);

  WeightedDigraph par;
  par.nodes = {"s", "d"};
  par.s = "s";
  par.d = "d";
  for (int i = 0; i < 5; ++i) par.arcs.push_back({"s", "d", 1});
  CHECK(bledp_exact(par) == 5);

  const auto big = gen_random_digraph(12, 0.5, 3, 6, 1);
  REQUIRE(big.arcs.size() > 24);
  CHECK_THROWS_AS(bledp_exact(big), CapacityError);
}

TEST_CASE("property: reduction preserves the optimum") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto w = gen_random_digraph(6, 0.35, 3, 4, seed);
    const auto inst = bledp_expand(w);
    CHECK(inst.graph.horizon() == w.L);
    CHECK(exact_maxflow_delta(inst.graph, inst.source, inst.destination, w.L).count() ==
          bledp_exact(w));
  }
}
