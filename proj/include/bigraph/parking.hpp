#pragma once

#include "bigraph/graph.hpp"
#include "bigraph/orientation.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace bigraph {

/// h_i = number of parking functions of degree i, i = 0..genus.
using HVector = std::vector<std::uint64_t>;

/// Subset enumeration in is_parking is 2^n.
inline constexpr int kMaxSubsetVertices = 20;
/// Cap on the product of box sides in enumerate_parking.
inline constexpr std::uint64_t kDefaultMaxBox = 5'000'000;

/// The definition, literally: every nonempty W has some v_i in W with
/// 0 <= c_i < d_W(v_i). CapError past kMaxSubsetVertices.
bool is_parking(const SinkedGraph& g, const ChipConfig& c);

/// Burning algorithm: fire spreads from the sink and burns v once c_v is
/// below the number of burnt neighbours. Same answer as is_parking.
bool burning_check(const SinkedGraph& g, const ChipConfig& c);

enum class ParkingTest { Burning, Definition };

/// Every parking function. Candidates come from the box 0 <= c_i <= deg(v_i) - 1
/// in G•; W = {v_i} rules out anything larger.
ChipSet enumerate_parking(const SinkedGraph& g, ParkingTest test = ParkingTest::Burning,
                          std::uint64_t max_box = kDefaultMaxBox);

HVector h_vector(const SinkedGraph& g, std::uint64_t max_box = kDefaultMaxBox);

/// {indeg(O) : O an acyclic partial orientation of G}.
ChipSet acyclic_indeg_set(const SimpleGraph& g, int max_edges = kDefaultMaxEdges);

struct LabelReport {
  ChipSet labels;
  std::map<ChipConfig, std::uint64_t> multiplicity;  ///< regions per label
};

/// Labels indeg(O) over A-admissible O, with the per-label region counts.
LabelReport pak_stanley_report(const SimpleGraph& g, const ParameterList& a, int max_edges = kDefaultMaxEdges);
ChipSet pak_stanley_labels(const SimpleGraph& g, const ParameterList& a, int max_edges = kDefaultMaxEdges);

/// {indeg(O) - (1,...,1) : O acyclic, entry i is -1, the rest >= 0}.
ChipSet parking_wrt_vertex(const SimpleGraph& g, Vertex i, int max_edges = kDefaultMaxEdges);

/// Maximal elements of a set under the componentwise order.
ChipSet maximal_elements(const ChipSet& set);

struct BctReport {
  ChipSet maximal;               ///< maximal parking functions of G•
  std::uint64_t orientations = 0;  ///< acyclic total orientations of G• with unique source v_0
  bool bijective = false;        ///< O -> indeg(O) - sum v_i is a bijection onto `maximal`
};

BctReport bct_maximal(const SimpleGraph& g, int max_edges = kDefaultMaxEdges);

}  // namespace bigraph
