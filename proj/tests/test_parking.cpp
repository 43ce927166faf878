#include "bigraph/parking.hpp"
#include "bigraph/polynomial.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace bigraph;

namespace {

ChipSet k3_parking() {
  return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 2}, {0, 2, 0}, {2, 0, 0}, {0, 1, 1},
          {1, 0, 1}, {1, 1, 0}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

// 0, v1, v2, v3, v1+v2, v1+v3, 2v2, v2+v3.
ChipSet p3_parking() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}};
}

// Every c in the degree box of G•.
template <typename F>
void for_each_in_box(const SinkedGraph& s, int n, F&& visit) {
  ChipConfig c(std::vector<int>(static_cast<std::size_t>(n), 0));
  while (true) {
    visit(c);
    int i = 1;
    for (; i <= n; ++i) {
      if (c(i) + 1 < s.degree(i)) {
        ++c(i);
        break;
      }
      c(i) = 0;
    }
    if (i > n) return;
  }
}

}  // namespace

TEST_CASE("parking definition") {
  SinkedGraph p3 = sink_extension(path_graph(3));
  CHECK(is_parking(p3, ChipConfig{0, 2, 0}));
  CHECK_FALSE(is_parking(p3, ChipConfig{1, 1, 1}));
  CHECK(is_parking(p3, ChipConfig{0, 0, 0}));
  CHECK(burning_check(p3, ChipConfig{0, 2, 0}));
  SinkedGraph k3 = sink_extension(complete_graph(3));
  CHECK_FALSE(is_parking(k3, ChipConfig{1, 1, 1}));
  CHECK_FALSE(burning_check(k3, ChipConfig{1, 1, 1}));
  CHECK_FALSE(is_parking(k3, ChipConfig{-1, 0, 0}));
  CHECK_FALSE(burning_check(k3, ChipConfig{-1, 0, 0}));
  CHECK_THROWS_AS(is_parking(sink_extension(edgeless_graph(21)), ChipConfig(std::vector<int>(21, 0))), CapError);
}

TEST_CASE("burning agrees with the definition and with an independent reading") {
  for (const SimpleGraph& g : oracle::all_graphs(6)) {
    SinkedGraph s = sink_extension(g);
    for_each_in_box(s, g.vertex_count(), [&](const ChipConfig& c) {
      bool definition = is_parking(s, c);
      REQUIRE(definition == burning_check(s, c));
      REQUIRE(definition == oracle::is_parking(g, c));
    });
  }
}

TEST_CASE("enumerated parking sets") {
  CHECK(enumerate_parking(sink_extension(path_graph(3))) == p3_parking());
  CHECK(enumerate_parking(sink_extension(complete_graph(3))) == k3_parking());
  CHECK(enumerate_parking(sink_extension(complete_graph(3)), ParkingTest::Definition) == k3_parking());
  CHECK(enumerate_parking(sink_extension(edgeless_graph(1))) == ChipSet{ChipConfig{0}});
  CHECK_THROWS_AS(enumerate_parking(sink_extension(complete_graph(6)), ParkingTest::Burning, 1000), CapError);

  CHECK(h_vector(sink_extension(complete_graph(3))) == HVector{1, 3, 6, 6});
  CHECK(h_vector(sink_extension(path_graph(3))) == HVector{1, 3, 4});
  CHECK(h_vector(sink_extension(edgeless_graph(1))) == HVector{1});
}

TEST_CASE("parking functions are counted by spanning trees and closed downwards") {
  for (const SimpleGraph& g : oracle::all_graphs(6)) {
    SinkedGraph s = sink_extension(g);
    ChipSet parking = enumerate_parking(s);
    CHECK(Integer(parking.size()) == spanning_tree_count(s));
    CHECK(parking == enumerate_parking(s, ParkingTest::Definition));

    HVector h = h_vector(s);
    REQUIRE(h.size() == static_cast<std::size_t>(g.edge_count() + 1));
    CHECK(h.front() == 1);
    CHECK(h.back() == oracle::acyclic_orientations(g));
    CHECK(Integer(h.back()) == numerator(tutte(g)(Rational(2), Rational(0))));

    for (const ChipConfig& top : maximal_elements(parking)) {
      for_each_in_box(s, g.vertex_count(), [&](const ChipConfig& c) {
        if (c.dominated_by(top)) REQUIRE(parking.count(c) == 1);
      });
    }
  }
}

TEST_CASE("acyclic indegree sets") {
  CHECK(acyclic_indeg_set(complete_graph(3)) == k3_parking());
  CHECK(acyclic_indeg_set(path_graph(3)) == p3_parking());
  CHECK(acyclic_indeg_set(edgeless_graph(3)) == ChipSet{ChipConfig{0, 0, 0}});
}

TEST_CASE("Pak-Stanley labels") {
  SimpleGraph k3 = complete_graph(3);
  LabelReport shi = pak_stanley_report(k3, shi_parameters(k3));
  CHECK(shi.labels == k3_parking());
  for (const auto& [label, count] : shi.multiplicity) CHECK(count == 1);

  LabelReport semi = pak_stanley_report(k3, semi_parameters(k3));
  CHECK(semi.labels == k3_parking());
  std::uint64_t regions = 0;
  for (const auto& [label, count] : semi.multiplicity) {
    regions += count;
    bool doubled = label == ChipConfig{0, 0, 1} || label == ChipConfig{0, 1, 0} || label == ChipConfig{1, 0, 0};
    CHECK(count == (doubled ? 2U : 1U));
  }
  CHECK(regions == 19);

  SimpleGraph p3 = path_graph(3);
  LabelReport path = pak_stanley_report(p3, semi_parameters(p3));
  CHECK(path.labels == p3_parking());
  CHECK(path.multiplicity.at(ChipConfig{0, 1, 0}) == 2);
  CHECK(pak_stanley_labels(p3, semi_parameters(p3)) == p3_parking());
}

TEST_CASE("h-vector is dominated by the orientation-size profile") {
  for (const SimpleGraph& g : oracle::connected_graphs(5)) {
    HVector h = h_vector(sink_extension(g));
    for (const ParameterList& a : {semi_parameters(g), shi_parameters(g), sample_generic(g, 2)}) {
      RegionCensus c = census(g, a);
      REQUIRE(c.by_size.size() == h.size());
      for (std::size_t i = 0; i < h.size(); ++i) CHECK(h[i] <= c.by_size[i]);
    }
  }
}

TEST_CASE("parking functions with respect to a vertex") {
  SimpleGraph k3 = complete_graph(3);
  CHECK(parking_wrt_vertex(k3, 1) == ChipSet{{-1, 0, 0}, {-1, 0, 1}, {-1, 1, 0}});
  CHECK(parking_wrt_vertex(path_graph(3), 2) == ChipSet{{0, -1, 0}});
  CHECK(parking_wrt_vertex(edgeless_graph(2), 1).empty());
  CHECK(parking_wrt_vertex(edgeless_graph(1), 1) == ChipSet{ChipConfig{-1}});
  for (const SimpleGraph& g : oracle::connected_graphs(5)) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      CHECK(Integer(parking_wrt_vertex(g, v).size()) == spanning_tree_count(g));
    }
  }
}

TEST_CASE("maximal parking functions and unique-source orientations") {
  BctReport k3 = bct_maximal(complete_graph(3));
  CHECK(k3.maximal == ChipSet{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
  CHECK(k3.orientations == 6);
  CHECK(k3.bijective);

  BctReport p3 = bct_maximal(path_graph(3));
  CHECK(p3.maximal.size() == 4);
  for (const ChipConfig& c : p3.maximal) CHECK(c.degree() == 2);
  CHECK(p3.orientations == 4);
  CHECK(p3.bijective);

  BctReport single = bct_maximal(edgeless_graph(1));
  CHECK(single.maximal == ChipSet{ChipConfig{0}});
  CHECK(single.orientations == 1);

  for (const SimpleGraph& g : oracle::all_graphs(5)) {
    BctReport r = bct_maximal(g);
    CHECK(r.bijective);
    CHECK(r.maximal.size() == r.orientations);
    CHECK(r.orientations == oracle::acyclic_orientations(g));
  }
}

TEST_CASE("burning agrees with the definition on random graphs up to eight edges") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 15; ++i) {
    SimpleGraph g = oracle::random_connected(rng, 7, 8);
    SinkedGraph s = sink_extension(g);
    for_each_in_box(s, g.vertex_count(), [&](const ChipConfig& c) { REQUIRE(is_parking(s, c) == burning_check(s, c)); });
  }
}
