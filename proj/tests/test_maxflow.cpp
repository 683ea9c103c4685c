#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tempocut/generators.hpp"
#include "tempocut/journey_search.hpp"
#include "tempocut/line_graph.hpp"
#include "tempocut/maxflow_delta.hpp"

using namespace tempocut;

namespace {

bool pairwise_disjoint(const FlowResult& f) {
  for (std::size_t i = 0; i < f.journeys.size(); ++i) {
    for (std::size_t j = i + 1; j < f.journeys.size(); ++j) {
      if (interferes(f.journeys[i], f.journeys[j], f.delta)) return false;
    }
  }
  return true;
}

TimeVaryingGraph empty_pair() {
  TimeVaryingGraph g(4);
  g.add_node("s");
  g.add_node("d");
  g.add_edge(0, 1, {});
  return g;
}

}  // namespace

TEST_CASE("greedy on the two-hop example") {
  const auto g = oracle::ex1();
  const auto one = greedy_maxflow_delta(g, 0, 2, 1);
  CHECK(one.count() == 2);
  CHECK_FALSE(one.exact);
  CHECK(pairwise_disjoint(one));
  CHECK(greedy_maxflow_delta(g, 0, 2, 2).count() == 1);
  CHECK(greedy_maxflow_delta(g, 2, 0, 1).count() == 0);
  CHECK(greedy_maxflow_delta(g, 0, 2, 1, 1).count() == 1);
  CHECK_THROWS_AS(greedy_maxflow_delta(g, 0, 2, 0), InputError);
  CHECK_THROWS_AS(greedy_maxflow_delta(g, 0, 2, 4), InputError);
  CHECK_THROWS_AS(greedy_maxflow_delta(g, 0, 0, 1), InputError);
}

TEST_CASE("exact on the two-hop example") {
  const auto g = oracle::ex1();
  CHECK(exact_maxflow_delta(g, 0, 2, 1).count() == 2);
  CHECK(exact_maxflow_delta(g, 0, 2, 2).count() == 1);
  CHECK(exact_maxflow_delta(g, 0, 2, 3).count() == 1);
  CHECK(exact_maxflow_delta(g, 0, 2, 1).exact);
  CHECK(exact_maxflow_delta(empty_pair(), 0, 1, 1).count() == 0);
}

TEST_CASE("exact on the second gap-family member") {
  const auto inst = gen_counterexample(2);
  const auto f = exact_maxflow_delta(inst.graph, inst.source, inst.destination, 2);
  CHECK(f.count() == 1);
}

TEST_CASE("greedy_bound_certificate") {
  CHECK(greedy_bound_certificate(2, 2, 2, 3, 1));
  CHECK(greedy_bound_certificate(0, 0, 5, 9, 2));
  CHECK(greedy_bound_certificate(1, 1, 1, 1, 1));
  CHECK_FALSE(greedy_bound_certificate(3, 2, 2, 3, 1));
  CHECK(greedy_ratio_bound(2, 3, 1) == doctest::Approx(3 * std::sqrt(8.0) + 2));
  const int huge = static_cast<int>(greedy_ratio_bound(1, 1, 1)) + 2;
  CHECK_FALSE(greedy_bound_certificate(1, huge * 10, 1, 1, 1));
}

TEST_CASE("search cap") {
  // Greedy finds 1 here while the bounds allow more, so the search must run.
  const auto inst = gen_counterexample(3);
  CHECK_THROWS_AS(exact_maxflow_delta(inst.graph, inst.source, inst.destination, 2, 1), CapacityError);
}

TEST_CASE("window_packing") {
  const std::vector<Slot> slots{1, 2, 3, 5, 8};
  CHECK(window_packing(slots, 1) == 5);
  CHECK(window_packing(slots, 2) == 4);
  CHECK(window_packing(slots, 3) == 3);
  CHECK(window_packing(slots, 8) == 1);
  CHECK(window_packing(std::vector<Slot>{}, 3) == 0);
}

TEST_CASE("property: exact agrees with the enumeration oracle") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const auto g = oracle::small_random_graph(5, 5, 0.45, 0.4, seed);
    for (int delta : {1, 2, 3}) {
      const auto f = exact_maxflow_delta(g, 0, 4, delta);
      CHECK(f.count() == oracle::max_disjoint_journeys(g, 0, 4, delta));
      CHECK(pairwise_disjoint(f));
      for (const auto& j : f.journeys) CHECK(is_valid_journey(g, j, 0, 4));
    }
  }
}

TEST_CASE("property: greedy is a valid packing no larger than exact") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = gen_random_tvg(8, 10, 0.5, seed);
    for (int delta : {1, 2, 3, 5}) {
      const auto alg = greedy_maxflow_delta(g, 0, 7, delta);
      const auto opt = exact_maxflow_delta(g, 0, 7, delta);
      CHECK(pairwise_disjoint(alg));
      for (const auto& j : alg.journeys) CHECK(is_valid_journey(g, j, 0, 7));
      CHECK(alg.count() <= opt.count());
      CHECK(greedy_bound_certificate(alg.count(), opt.count(), g.edge_count(), g.horizon(), delta));
      const ContactMask all(g.contact_count(), 1);
      CHECK(opt.count() <= maxflow_delta_upper_bound(g, 0, 7, delta, all));
    }
  }
}

TEST_CASE("property: exact is anti-monotone in delta") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = gen_random_tvg(8, 8, 0.5, seed);
    int last = exact_maxflow_delta(g, 0, 7, 1).count();
    for (int delta = 2; delta <= 8; ++delta) {
      const int now = exact_maxflow_delta(g, 0, 7, delta).count();
      CHECK(now <= last);
      last = now;
    }
  }
}

TEST_CASE("property: delta = T is edge-disjoint flow") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto g = oracle::small_random_graph(5, 4, 0.5, 0.5, seed);
    CHECK(exact_maxflow_delta(g, 0, 4, 4).count() == oracle::max_edge_disjoint_journeys(g, 0, 4));
  }
}

TEST_CASE("property: delta = 1 is unit node flow on the line graph") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = gen_random_tvg(9, 10, 0.5, seed);
    const auto unit = node_disjoint_maxflow(build_line_graph(g, 0, 8));
    CHECK(Rational(exact_maxflow_delta(g, 0, 8, 1).count()) == unit.value);
  }
}
