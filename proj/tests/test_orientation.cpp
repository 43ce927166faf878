#include "bigraph/orientation.hpp"
#include "bigraph/polynomial.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

using namespace bigraph;

namespace {

// The five-vertex example: (v1,v2), (v5,v2), (v2,v3) oriented; {v1,v5},
// {v3,v4}, {v4,v5} blank.
SimpleGraph pentagon_house() { return build_graph(5, {{1, 2}, {1, 5}, {3, 4}, {4, 5}, {2, 5}, {2, 3}}); }

PartialOrientation pentagon_orientation(const SimpleGraph& g) {
  return PartialOrientation::from_steps(g, {{1, 2}, {5, 2}, {2, 3}});
}

std::vector<ParameterList> parameter_family(const SimpleGraph& g) {
  std::vector<long long> lengths;
  for (int i = 1; i <= g.vertex_count(); ++i) lengths.push_back(1 + i % 3);
  return {semi_parameters(g), shi_parameters(g), interval_parameters(g, lengths), sample_generic(g, 1)};
}

}  // namespace

TEST_CASE("partial orientation encoding") {
  SimpleGraph k3 = complete_graph(3);
  PartialOrientation o = PartialOrientation::from_steps(k3, {{2, 1}, {2, 3}});
  CHECK(o.size() == 2);
  CHECK(contains_step(k3, o, {2, 1}));
  CHECK_FALSE(contains_step(k3, o, {1, 2}));
  CHECK(is_compatible(k3, o, {2, 1}));
  CHECK_FALSE(is_compatible(k3, o, {1, 2}));
  CHECK(is_compatible(k3, o, {3, 1}));
  CHECK(indegree(k3, o) == ChipConfig{1, 0, 1});
  CHECK(PartialOrientation::from_code(3, o.code()) == o);
  CHECK(to_string(k3, o) == "{(2,1),(2,3)}");
  CHECK_THROWS_AS(PartialOrientation::from_steps(k3, {{1, 2}, {2, 1}}), PreconditionError);
  CHECK_THROWS_AS(PartialOrientation::from_steps(path_graph(3), {{1, 3}}), InputError);

  PartialOrientation walk(2);
  int states = 1;
  while (walk.advance()) ++states;
  CHECK(states == 9);
  CHECK(walk == PartialOrientation(2));
}

TEST_CASE("parameter presets") {
  SimpleGraph k3 = complete_graph(3);
  ParameterList semi = semi_parameters(k3);
  for (const Edge& e : k3.edges()) {
    CHECK(semi(e.u, e.v) == 1);
    CHECK(semi(e.v, e.u) == 1);
  }
  ParameterList shi = shi_parameters(k3);
  CHECK(shi(1, 2) == 1);
  CHECK(shi(1, 3) == 1);
  CHECK(shi(2, 3) == 1);
  CHECK(shi(2, 1) == 0);
  CHECK(shi(3, 1) == 0);
  CHECK(shi(3, 2) == 0);

  std::vector<long long> lengths{2, 1, 3};
  ParameterList interval = interval_parameters(path_graph(3), lengths);
  CHECK(interval(1, 2) == 2);
  CHECK(interval(2, 1) == 1);
  CHECK(interval(2, 3) == 1);
  CHECK(interval(3, 2) == 3);
  std::vector<long long> bad{2, 0, 3};
  CHECK_THROWS_AS(interval_parameters(path_graph(3), bad), InputError);
  CHECK_THROWS_AS(shi(1, 1), InputError);
}

TEST_CASE("generic samples are certified, bounded and reproducible") {
  SimpleGraph k3 = complete_graph(3);
  ParameterList a = sample_generic(k3, 1);
  CHECK(a == sample_generic(k3, 1));
  CHECK_FALSE(a == sample_generic(k3, 2));
  CHECK(is_certified_generic(k3, a));
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    CHECK(a.forward(e) > Rational(1, 2));
    CHECK(a.forward(e) < Rational(3, 2));
    CHECK(a.backward(e) > Rational(1, 2));
    CHECK(a.backward(e) < Rational(3, 2));
  }
  CHECK(census(k3, a).regions == 19);
  CHECK(census(cycle_graph(4), sample_generic(cycle_graph(4), 7)).regions == 65);
  CHECK(census(path_graph(3), sample_generic(path_graph(3), 5)).regions == 9);
  CHECK(is_certified_generic(path_graph(3), semi_parameters(path_graph(3))));
  // Odd cycles of +-1 never sum to zero; even ones can.
  CHECK(is_certified_generic(k3, semi_parameters(k3)));
  CHECK_FALSE(is_certified_generic(k3, shi_parameters(k3)));
  CHECK_FALSE(is_certified_generic(cycle_graph(4), semi_parameters(cycle_graph(4))));
}

TEST_CASE("central region validation") {
  SimpleGraph k3 = complete_graph(3);
  CHECK_NOTHROW(validate_parameters(k3, semi_parameters(k3)));
  CHECK_NOTHROW(validate_parameters(k3, shi_parameters(k3)));
  ParameterList degenerate = semi_parameters(k3);
  degenerate.set(1, 2, 0);
  degenerate.set(2, 1, 0);
  try {
    validate_parameters(k3, degenerate);
    FAIL("expected a parameter error");
  } catch (const ParameterError& e) {
    CHECK(e.witness().score == 0);
    CHECK(e.witness().steps.size() == 2);
  }
  // Coinciding hyperplanes x1 - x2 = 1 and x2 - x1 = -1 leave no central region.
  ParameterList coincide = semi_parameters(k3);
  coincide.set(2, 1, -1);
  CHECK_THROWS_AS(validate_parameters(k3, coincide), ParameterError);
}

TEST_CASE("step scores") {
  SimpleGraph g = pentagon_house();
  PartialOrientation o = pentagon_orientation(g);
  ParameterList semi = semi_parameters(g);
  ParameterList shi = shi_parameters(g);
  CHECK(step_score(g, {3, 4}, o, semi) == 1);
  CHECK(step_score(g, {5, 2}, o, semi) == -1);
  CHECK(step_score(g, {2, 3}, o, shi) == 0);
  CHECK_THROWS_AS(step_score(g, {2, 5}, o, semi), PreconditionError);
  CHECK_THROWS_AS(step_score(g, {1, 3}, o, semi), PreconditionError);

  // The highlighted cycle scores zero under SEMI.
  Rational total = 0;
  for (Step s : std::vector<Step>{{5, 2}, {2, 3}, {3, 4}, {4, 5}}) total += step_score(g, s, o, semi);
  CHECK(total == 0);
}

TEST_CASE("classification") {
  SimpleGraph g = pentagon_house();
  PartialOrientation o = pentagon_orientation(g);
  CHECK(classify(g, o, semi_parameters(g)) == Admissibility::Almost);
  CHECK(classify(g, o, shi_parameters(g)) == Admissibility::Admissible);
  SimpleGraph k3 = complete_graph(3);
  PartialOrientation triangle = PartialOrientation::from_steps(k3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(classify(k3, triangle, semi_parameters(k3)) == Admissibility::Far);
  auto bad = find_bad_cycle(k3, triangle, semi_parameters(k3));
  REQUIRE(bad);
  CHECK(bad->score < 0);
}

TEST_CASE("classification agrees with cycle enumeration") {
  for (const SimpleGraph& g : oracle::all_graphs(5)) {
    for (const ParameterList& a : parameter_family(g)) {
      Classifier classifier(g, a);
      PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
      do {
        Admissibility c = classifier(o);
        REQUIRE(c == oracle::classify(g, o, a));
        REQUIRE(c == classifier.classify_rational(o));
        if (c == Admissibility::Admissible) REQUIRE(is_acyclic(g, o));
      } while (o.advance());
    }
  }
}

TEST_CASE("score digraph cycle weights are step-score sums") {
  for (const SimpleGraph& g : oracle::connected_graphs(5)) {
    ParameterList a = sample_generic(g, 3);
    PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
    do {
      ScoreDigraph d = score_digraph(g, o, a);
      for (const ScoreArc& arc : d.arcs) REQUIRE(arc.weight == step_score(g, arc.step, o, a));
      for (const auto& cycle : simple_cycles(g)) {
        // Traverse the undirected cycle forwards when every step is compatible.
        std::vector<Step> walk;
        for (std::size_t i = 0; i < cycle.size(); ++i) walk.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
        bool compatible = std::all_of(walk.begin(), walk.end(), [&](Step s) { return is_compatible(g, o, s); });
        if (!compatible) continue;
        Rational via_arcs = 0;
        Rational via_scores = 0;
        for (Step s : walk) {
          via_arcs += d.arcs[*d.arc_index(s)].weight;
          via_scores += step_score(g, s, o, a);
        }
        REQUIRE(via_arcs == via_scores);
      }
    } while (o.advance());
  }
}

TEST_CASE("relative boundedness") {
  SimpleGraph k3 = complete_graph(3);
  CHECK(is_relatively_bounded(k3, PartialOrientation(3), semi_parameters(k3)));
  CHECK(is_relatively_bounded(k3, PartialOrientation::from_steps(k3, {{1, 2}}), semi_parameters(k3)));
  SimpleGraph p3 = path_graph(3);
  CHECK_FALSE(is_relatively_bounded(p3, PartialOrientation::from_steps(p3, {{1, 2}}), semi_parameters(p3)));
  PartialOrientation triangle = PartialOrientation::from_steps(k3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_THROWS_AS(is_relatively_bounded(k3, triangle, semi_parameters(k3)), PreconditionError);
}

TEST_CASE("region census") {
  SimpleGraph k3 = complete_graph(3);
  RegionCensus semi = census(k3, semi_parameters(k3));
  CHECK(semi.regions == 19);
  CHECK(semi.by_size == std::vector<std::uint64_t>{1, 6, 6, 6});
  CHECK(census(k3, shi_parameters(k3)).regions == 16);
  RegionCensus c4 = census(cycle_graph(4), shi_parameters(cycle_graph(4)));
  CHECK(c4.regions == 61);
  CHECK(c4.bounded == 11);
  RegionCensus p3 = census(path_graph(3), semi_parameters(path_graph(3)));
  CHECK(p3.regions == 9);
  CHECK(p3.bounded == 1);

  CHECK_THROWS_AS(census(complete_graph(6), semi_parameters(complete_graph(6))), CapError);
  CHECK_THROWS_AS(census(complete_graph(5), semi_parameters(complete_graph(5)), 9), CapError);

  for (const SimpleGraph& g : oracle::all_graphs(4)) {
    for (const ParameterList& a : parameter_family(g)) {
      RegionCensus c = census(g, a);
      std::uint64_t total = 1;
      for (int i = 0; i < g.edge_count(); ++i) total *= 3;
      CHECK(c.regions + c.almost + c.far == total);
      CHECK(std::accumulate(c.by_size.begin(), c.by_size.end(), std::uint64_t{0}) == c.regions);
      CHECK(c.bounded <= c.regions);
      CHECK(c.regions == oracle::region_count(g, a));
    }
  }
}

TEST_CASE("census never exceeds the generic count, and meets it for generic parameters") {
  for (const SimpleGraph& g : oracle::connected_graphs(5)) {
    RegionCounts generic = generic_region_counts(g);
    for (const ParameterList& a : parameter_family(g)) {
      RegionCensus c = census(g, a);
      CHECK(Integer(c.regions) <= generic.regions);
      if (is_certified_generic(g, a)) {
        CHECK(Integer(c.regions) == generic.regions);
        CHECK(Integer(c.bounded) == generic.bounded);
      }
    }
  }
}

TEST_CASE("zero-cycle statistics") {
  SimpleGraph c4 = cycle_graph(4);
  ZeroCycleStats semi = zero_cycle_stats(c4, PartialOrientation::from_steps(c4, {{1, 2}, {2, 3}}), semi_parameters(c4));
  CHECK(semi.w == 4);
  CHECK(semi.z == 1);
  ZeroCycleStats shi = zero_cycle_stats(c4, PartialOrientation::from_steps(c4, {{1, 4}}), shi_parameters(c4));
  CHECK(shi.w == 4);
  CHECK(shi.z == 1);

  SimpleGraph c3 = cycle_graph(3);
  RegionCensus odd = census(c3, semi_parameters(c3));
  CHECK(odd.almost == 0);
  CHECK_THROWS_AS(zero_cycle_stats(c3, PartialOrientation(3), semi_parameters(c3)), PreconditionError);

  // Two 4-cycles sharing a vertex, each half oriented: two disjoint zero cycles.
  SimpleGraph twin = build_graph(7, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}, {6, 7}, {1, 7}});
  ParameterList a = semi_parameters(twin);
  PartialOrientation o = PartialOrientation::from_steps(twin, {{1, 2}, {2, 3}, {1, 5}, {5, 6}});
  REQUIRE(classify(twin, o, a) == Admissibility::Almost);
  ZeroCycleStats two = zero_cycle_stats(twin, o, a);
  CHECK(two.z == 2);
  CHECK(two.w == 8);
}

TEST_CASE("region count bounds") {
  SimpleGraph c4 = cycle_graph(4);
  RegionBounds semi = region_count_bounds(c4, semi_parameters(c4));
  CHECK(semi.lower == Rational(3, 4));
  CHECK(semi.upper == 6);
  CHECK(semi.almost == 12);
  RegionBounds shi = region_count_bounds(c4, shi_parameters(c4));
  CHECK(shi.upper == 4);
  CHECK(shi.almost == 8);
  RegionBounds generic = region_count_bounds(c4, sample_generic(c4, 4));
  CHECK(generic.lower == 0);
  CHECK(generic.upper == 0);

  for (const SimpleGraph& g : oracle::connected_graphs(5)) {
    Integer r_generic = generic_region_counts(g).regions;
    for (const ParameterList& a : parameter_family(g)) {
      RegionBounds b = region_count_bounds(g, a);
      Rational gap(r_generic - Integer(census(g, a).regions));
      CHECK(b.lower <= gap);
      CHECK(gap <= b.upper);
    }
  }
}

TEST_CASE("indegree realization") {
  SimpleGraph k3 = complete_graph(3);
  ParameterList shi = shi_parameters(k3);
  PartialOrientation target = PartialOrientation::from_steps(k3, {{2, 1}});
  CHECK(classify(k3, target, shi) == Admissibility::Almost);
  PartialOrientation out = realize_indegree(k3, shi, target);
  CHECK(classify(k3, out, shi) == Admissibility::Admissible);
  CHECK(indegree(k3, out) == ChipConfig{1, 0, 0});

  ParameterList semi = semi_parameters(k3);
  PartialOrientation fixed = PartialOrientation::from_steps(k3, {{1, 2}});
  CHECK(realize_indegree(k3, semi, fixed) == fixed);
  CHECK(realize_indegree(k3, semi, PartialOrientation(3)) == PartialOrientation(3));
  PartialOrientation cyclic = PartialOrientation::from_steps(k3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_THROWS_AS(realize_indegree(k3, semi, cyclic), PreconditionError);

  for (const SimpleGraph& g : oracle::connected_graphs(5)) {
    for (const ParameterList& a : parameter_family(g)) {
      PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
      do {
        if (!is_acyclic(g, o)) continue;
        PartialOrientation r = realize_indegree(g, a, o);
        REQUIRE(classify(g, r, a) == Admissibility::Admissible);
        REQUIRE(indegree(g, r) == indegree(g, o));
      } while (o.advance());
    }
  }
}

TEST_CASE("parameter files and selectors") {
  SimpleGraph p3 = path_graph(3);
  std::istringstream in("# a\n1 2 1/2\n2 1 3\n2 3 -1/4\n3 2 2/3\n");
  ParameterList a = read_parameters(in, p3);
  CHECK(a(1, 2) == Rational(1, 2));
  CHECK(a(2, 3) == Rational(-1, 4));
  std::istringstream round(format_parameters(a));
  CHECK(read_parameters(round, p3) == a);

  std::istringstream missing("1 2 1\n2 1 1\n2 3 1\n");
  try {
    read_parameters(missing, p3);
    FAIL("expected missing parameter");
  } catch (const InputError& e) {
    CHECK(e.kind() == InputErrorKind::MissingParameter);
  }
  std::istringstream unknown("1 3 1\n");
  try {
    read_parameters(unknown, p3);
    FAIL("expected unknown parameter");
  } catch (const InputError& e) {
    CHECK(e.kind() == InputErrorKind::UnknownParameter);
  }

  CHECK(select_parameters(p3, "semi").parameters == semi_parameters(p3));
  CHECK(select_parameters(p3, "shi").parameters == shi_parameters(p3));
  std::vector<long long> lengths{2, 1, 3};
  CHECK(select_parameters(p3, "interval:2,1,3").parameters == interval_parameters(p3, lengths));
  ParameterChoice generic = select_parameters(p3, "generic:42");
  CHECK(generic.seed == 42U);
  CHECK(generic.parameters == sample_generic(p3, 42));
  CHECK_THROWS_AS(select_parameters(p3, "semiorder"), InputError);
  CHECK_THROWS_AS(select_parameters(p3, "interval:1,2"), InputError);
  CHECK_THROWS_AS(select_parameters(p3, "generic:x"), InputError);
}
