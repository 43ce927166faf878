#pragma once

#include "bigraph/graph.hpp"
#include "bigraph/scalar.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bigraph {

/// Ordered pair (from, to) over an edge of G.
struct Step {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Step&) const = default;
};

/// Per-edge state. For the stored pair (u, v) with u < v, Forward is u -> v
/// and Backward is v -> u.
enum class EdgeState : std::uint8_t { Blank = 0, Forward = 1, Backward = 2 };

class PartialOrientation {
 public:
  PartialOrientation() = default;
  explicit PartialOrientation(std::size_t edge_count) : states_(edge_count, EdgeState::Blank) {}

  /// Throws InputError for a step over a non-edge and PreconditionError when
  /// both directions of an edge are present.
  static PartialOrientation from_steps(const SimpleGraph& g, std::span<const Step> steps);
  static PartialOrientation from_steps(const SimpleGraph& g, std::initializer_list<Step> steps);

  /// Base-3 digits, edge 0 least significant; digit values follow EdgeState.
  static PartialOrientation from_code(std::size_t edge_count, std::uint64_t code);
  std::uint64_t code() const;

  std::size_t edge_count() const { return states_.size(); }
  EdgeState state(std::size_t edge) const { return states_[edge]; }
  void set(std::size_t edge, EdgeState s) { states_[edge] = s; }
  bool is_blank(std::size_t edge) const { return states_[edge] == EdgeState::Blank; }

  /// |O|, the number of oriented edges.
  int size() const;

  /// Odometer step through all 3^m states; false after the last one wraps.
  bool advance();

  auto operator<=>(const PartialOrientation&) const = default;

 private:
  std::vector<EdgeState> states_;
};

/// Step carried by an oriented edge, nothing for a blank one.
std::optional<Step> oriented_step(const SimpleGraph& g, const PartialOrientation& o, std::size_t edge);
std::vector<Step> steps(const SimpleGraph& g, const PartialOrientation& o);
bool contains_step(const SimpleGraph& g, const PartialOrientation& o, Step s);
/// (u, v) is compatible with O unless (v, u) is in O.
bool is_compatible(const SimpleGraph& g, const PartialOrientation& o, Step s);
ChipConfig indegree(const SimpleGraph& g, const PartialOrientation& o);
bool is_acyclic(const SimpleGraph& g, const PartialOrientation& o);
std::string to_string(const SimpleGraph& g, const PartialOrientation& o);

inline constexpr int kDefaultMaxEdges = 14;

/// 3^m, or CapError when m exceeds `max_edges`.
std::uint64_t orientation_count(const SimpleGraph& g, int max_edges = kDefaultMaxEdges);

/// Exact parameters a_ij, two per edge.
class ParameterList {
 public:
  ParameterList() = default;
  /// All parameters zero.
  explicit ParameterList(const SimpleGraph& g);

  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  /// a_ij for the step (i, j). Throws InputError for a non-edge.
  const Rational& operator()(Vertex i, Vertex j) const;
  void set(Vertex i, Vertex j, Rational value);

  /// a_uv for the stored pair (u, v), u < v.
  const Rational& forward(std::size_t edge) const { return forward_[edge]; }
  /// a_vu for the stored pair (u, v), u < v.
  const Rational& backward(std::size_t edge) const { return backward_[edge]; }

  bool operator==(const ParameterList&) const = default;

 private:
  std::size_t index_of(Vertex i, Vertex j) const;

  std::vector<Edge> edges_;
  std::vector<Rational> forward_;
  std::vector<Rational> backward_;
};

/// a_ij = 1 everywhere.
ParameterList semi_parameters(const SimpleGraph& g);
/// a_ij = 1 if i < j, else 0.
ParameterList shi_parameters(const SimpleGraph& g);
/// a_ij = lengths[i-1]. Lengths must be positive and one per vertex.
ParameterList interval_parameters(const SimpleGraph& g, std::span<const long long> lengths);

/// True when no signed cycle sum vanishes: for every simple cycle and every
/// per-step choice of +a_ij or -a_ji along a traversal, the total is nonzero.
/// Such a list has no zero-score potential cycles for any orientation.
bool is_certified_generic(const SimpleGraph& g, const ParameterList& a,
                          std::size_t max_cycles = kDefaultMaxCycles);

/// Deterministic given `seed`: parameters are k / 2^20 with k drawn from
/// mt19937_64 in (2^19, 3 * 2^19), resampled until certified generic.
ParameterList sample_generic(const SimpleGraph& g, std::uint64_t seed,
                             std::size_t max_cycles = kDefaultMaxCycles);

/// Closed walk of steps with its total score.
struct ScoredCycle {
  std::vector<Step> steps;
  Rational score;
};

/// Raised when the central region is empty.
class ParameterError : public Error {
 public:
  ParameterError(const std::string& what, ScoredCycle witness) : Error(what), witness_(std::move(witness)) {}
  const ScoredCycle& witness() const { return witness_; }

 private:
  ScoredCycle witness_;
};

/// Throws ParameterError with a nonpositive cycle of the empty orientation
/// when the central region is empty.
void validate_parameters(const SimpleGraph& g, const ParameterList& a);

struct ScoreArc {
  Step step;
  Rational weight;
  std::size_t edge = 0;
  bool oriented = false;
};

/// Compatible steps of O as arcs weighted by their scores. Directed cycles are
/// exactly the potential cycles of O.
struct ScoreDigraph {
  int vertex_count = 0;  ///< n; vertex indices 1..n
  std::vector<ScoreArc> arcs;

  std::optional<std::size_t> arc_index(Step s) const;
};

ScoreDigraph score_digraph(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a);

/// a_ij for a blank edge, -a_ji when (i, j) is in O. Throws
/// PreconditionError for an incompatible step or a non-edge.
Rational step_score(const SimpleGraph& g, Step e, const PartialOrientation& o, const ParameterList& a);

enum class Admissibility { Admissible, Almost, Far };
std::string_view to_string(Admissibility c);

/// Classifies orientations against one parameter list. When the parameters
/// share a small common denominator the work happens on scaled 64-bit
/// integers, otherwise on rationals; both are exact.
class Classifier {
 public:
  Classifier(const SimpleGraph& g, const ParameterList& a);

  Admissibility operator()(const PartialOrientation& o) const;
  /// Same answer computed on rationals regardless of the scaling.
  Admissibility classify_rational(const PartialOrientation& o) const;
  bool uses_integer_weights() const { return !scaled_forward_.empty() || edges_.empty(); }

 private:
  std::vector<Edge> edges_;
  int vertex_count_ = 0;
  std::vector<std::int64_t> scaled_forward_;
  std::vector<std::int64_t> scaled_backward_;
  std::vector<Rational> forward_;
  std::vector<Rational> backward_;
};

Admissibility classify(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a);

/// Some potential cycle with nonpositive score, if any.
std::optional<ScoredCycle> find_bad_cycle(const SimpleGraph& g, const PartialOrientation& o,
                                          const ParameterList& a);

/// Every oriented step lies on a potential cycle. Weights play no role.
bool every_oriented_step_on_cycle(const SimpleGraph& g, const PartialOrientation& o);

/// Relatively bounded test for the region of an admissible O. Throws
/// PreconditionError when O is not admissible.
bool is_relatively_bounded(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a);

struct RegionCensus {
  std::uint64_t regions = 0;  ///< r
  std::uint64_t bounded = 0;  ///< b, relatively bounded regions
  std::uint64_t almost = 0;
  std::uint64_t far = 0;
  std::vector<std::uint64_t> by_size;  ///< p_i, admissible orientations with i oriented edges

  bool operator==(const RegionCensus&) const = default;
};

/// Exhaustive classification of all 3^|E| orientations.
RegionCensus census(const SimpleGraph& g, const ParameterList& a, int max_edges = kDefaultMaxEdges);

struct ZeroCycleStats {
  int w = 0;  ///< steps lying on some zero-score potential cycle
  int z = 0;  ///< most step-disjoint zero-score potential cycles
};

/// Precondition: O is almost admissible.
ZeroCycleStats zero_cycle_stats(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a,
                                std::size_t max_cycles = kDefaultMaxCycles);

struct RegionBounds {
  Rational lower;  ///< sum of 2^-w over almost-admissible O
  Rational upper;  ///< sum of 2^-z over almost-admissible O
  std::uint64_t almost = 0;
};

/// Brackets r(GEN) - r(A).
RegionBounds region_count_bounds(const SimpleGraph& g, const ParameterList& a, int max_edges = kDefaultMaxEdges,
                                 std::size_t max_cycles = kDefaultMaxCycles);

/// Builds an A-admissible orientation with the same indegree sequence as the
/// acyclic `target`, one step at a time: each round orients a blank edge into
/// the set of vertices still short of their target indegree, hopping along
/// bad-cycle witnesses until the extension stays admissible.
PartialOrientation realize_indegree(const SimpleGraph& g, const ParameterList& a, const PartialOrientation& target);

// Parameter file: one line "i j p/q" per ordered step, both orders required.
ParameterList read_parameters(std::istream& in, const SimpleGraph& g);
ParameterList read_parameters_file(const std::string& path, const SimpleGraph& g);
std::string format_parameters(const ParameterList& a);

struct ParameterChoice {
  ParameterList parameters;
  std::string selector;
  std::optional<std::uint64_t> seed;
};

/// Resolves "semi", "shi", "interval:l1,...,ln", "generic:SEED" or
/// "file:PATH" and validates the result.
ParameterChoice select_parameters(const SimpleGraph& g, const std::string& selector,
                                  std::size_t max_cycles = kDefaultMaxCycles);

}  // namespace bigraph
