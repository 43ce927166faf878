#pragma once

#include "bigraph/error.hpp"
#include "bigraph/orientation.hpp"
#include "bigraph/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bigraph {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalPoint = Vector<Rational>;

enum class Relation { Less, Equal };

/// coefficients . x  (< or =)  rhs
template <typename Scalar>
struct LinearConstraint {
  Vector<Scalar> coefficients;
  Scalar rhs{};
  Relation relation = Relation::Less;

  bool satisfied_by(const Vector<Scalar>& x) const {
    Scalar lhs = coefficients.dot(x);
    return relation == Relation::Less ? lhs < rhs : lhs == rhs;
  }
};

template <typename Scalar>
struct ConstraintSystem {
  int variable_count = 0;
  std::vector<LinearConstraint<Scalar>> constraints;

  void add(Vector<Scalar> coefficients, Scalar rhs, Relation relation) {
    constraints.push_back({std::move(coefficients), std::move(rhs), relation});
  }
  bool satisfied_by(const Vector<Scalar>& x) const {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const LinearConstraint<Scalar>& c) { return c.satisfied_by(x); });
  }
};

inline constexpr std::size_t kDefaultMaxConstraints = 20000;

namespace detail {

template <typename Scalar>
struct Row {
  Vector<Scalar> a;
  Scalar rhs;
  bool strict = true;
};

/// Bounds on one eliminated variable in terms of those eliminated after it.
template <typename Scalar>
struct EliminationStep {
  int variable = 0;
  bool by_equality = false;
  Row<Scalar> equality;                 ///< a . x = rhs with a[variable] != 0
  std::vector<Row<Scalar>> bounds;      ///< rows mentioning `variable`
};

template <typename Scalar>
std::vector<Scalar> key_of(const Vector<Scalar>& a) {
  return std::vector<Scalar>(a.data(), a.data() + a.size());
}

/// Scales by a positive factor so the first nonzero coefficient is +-1, then
/// keeps one row per coefficient vector: the smallest rhs, strict on ties.
template <typename Scalar>
std::vector<Row<Scalar>> normalize(std::vector<Row<Scalar>> rows) {
  std::map<std::vector<Scalar>, Row<Scalar>> best;
  std::vector<Row<Scalar>> zero_rows;
  for (Row<Scalar>& row : rows) {
    Eigen::Index lead = 0;
    while (lead < row.a.size() && row.a(lead) == Scalar(0)) ++lead;
    if (lead == row.a.size()) {
      zero_rows.push_back(std::move(row));
      continue;
    }
    Scalar scale = row.a(lead) < Scalar(0) ? Scalar(-row.a(lead)) : row.a(lead);
    if (scale != Scalar(1)) {
      row.a /= scale;
      row.rhs /= scale;
    }
    auto key = key_of(row.a);
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), std::move(row));
    } else if (row.rhs < it->second.rhs || (row.rhs == it->second.rhs && row.strict)) {
      it->second = std::move(row);
    }
  }
  std::vector<Row<Scalar>> out = std::move(zero_rows);
  for (auto& [key, row] : best) out.push_back(std::move(row));
  return out;
}

template <typename Scalar>
Scalar floor_of(const Scalar& value) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return Scalar(floor(value));
  } else {
    return value;  // integral scalars
  }
}

/// Value for a variable that must lie strictly between the bounds: 0 when
/// allowed, else the integer nearest the open end, else the midpoint.
template <typename Scalar>
Scalar pick_inside(const std::optional<Scalar>& low, const std::optional<Scalar>& high) {
  auto inside = [&](const Scalar& v) { return (!low || *low < v) && (!high || v < *high); };
  if (inside(Scalar(0))) return Scalar(0);
  if (low) {
    Scalar candidate = floor_of(*low) + Scalar(1);
    if (inside(candidate)) return candidate;
  } else {
    Scalar candidate = floor_of(*high);
    if (candidate == *high) candidate -= Scalar(1);
    if (inside(candidate)) return candidate;
  }
  return (*low + *high) / Scalar(2);
}

}  // namespace detail

/// Fourier-Motzkin elimination honouring strictness. Equalities are used
/// first to substitute variables away; a combined row is strict when either
/// parent is. On success a witness is rebuilt by back-substitution and checked
/// against every original constraint (InternalError if it fails). CapError
/// when the working system grows past `max_constraints`.
template <typename Scalar>
std::optional<Vector<Scalar>> strict_feasible(const ConstraintSystem<Scalar>& system,
                                              std::size_t max_constraints = kDefaultMaxConstraints) {
  using Row = detail::Row<Scalar>;
  const int n = system.variable_count;
  std::vector<Row> rows;
  std::vector<Row> equalities;
  for (const auto& c : system.constraints) {
    if (c.coefficients.size() != n) throw PreconditionError("constraint length differs from the variable count");
    Row row{c.coefficients, c.rhs, c.relation == Relation::Less};
    (c.relation == Relation::Equal ? equalities : rows).push_back(std::move(row));
  }

  std::vector<detail::EliminationStep<Scalar>> steps;
  std::vector<bool> eliminated(static_cast<std::size_t>(n), false);

  // Substitute equalities.
  while (!equalities.empty()) {
    Row eq = std::move(equalities.back());
    equalities.pop_back();
    Eigen::Index k = 0;
    while (k < n && eq.a(k) == Scalar(0)) ++k;
    if (k == n) {
      if (eq.rhs != Scalar(0)) return std::nullopt;
      continue;
    }
    auto substitute = [&](Row& row) {
      if (row.a(k) == Scalar(0)) return;
      Scalar factor = row.a(k) / eq.a(k);
      row.a -= factor * eq.a;
      row.rhs -= factor * eq.rhs;
    };
    for (Row& row : rows) substitute(row);
    for (Row& row : equalities) substitute(row);
    eliminated[static_cast<std::size_t>(k)] = true;
    steps.push_back({static_cast<int>(k), true, std::move(eq), {}});
  }

  rows = detail::normalize(std::move(rows));
  while (true) {
    // Zero rows decide feasibility on their own: 0 < rhs.
    std::vector<Row> live;
    for (Row& row : rows) {
      if ((row.a.array() == Scalar(0)).all()) {
        if (!(Scalar(0) < row.rhs)) return std::nullopt;
      } else {
        live.push_back(std::move(row));
      }
    }
    rows = std::move(live);
    if (rows.empty()) break;

    // Eliminate the variable with the fewest generated rows.
    int best = -1;
    std::size_t best_cost = 0;
    for (int k = 0; k < n; ++k) {
      if (eliminated[static_cast<std::size_t>(k)]) continue;
      std::size_t pos = 0;
      std::size_t neg = 0;
      for (const Row& row : rows) {
        if (row.a(k) > Scalar(0)) ++pos;
        if (row.a(k) < Scalar(0)) ++neg;
      }
      if (pos + neg == 0) continue;
      std::size_t cost = pos * neg;
      if (best < 0 || cost < best_cost) {
        best = k;
        best_cost = cost;
      }
    }
    const int k = best;
    detail::EliminationStep<Scalar> step{k, false, {}, {}};
    std::vector<Row> next;
    std::vector<const Row*> upper;
    std::vector<const Row*> lower;
    for (const Row& row : rows) {
      if (row.a(k) > Scalar(0)) {
        upper.push_back(&row);
      } else if (row.a(k) < Scalar(0)) {
        lower.push_back(&row);
      } else {
        next.push_back(row);
      }
    }
    for (const Row* up : upper) {
      for (const Row* lo : lower) {
        Scalar su = up->a(k);
        Scalar sl = -lo->a(k);
        Row combined{up->a / su + lo->a / sl, up->rhs / su + lo->rhs / sl, up->strict || lo->strict};
        combined.a(k) = Scalar(0);
        next.push_back(std::move(combined));
      }
    }
    if (next.size() > max_constraints) {
      throw CapError("Fourier-Motzkin elimination exceeds " + std::to_string(max_constraints) + " constraints");
    }
    for (const Row* up : upper) step.bounds.push_back(*up);
    for (const Row* lo : lower) step.bounds.push_back(*lo);
    eliminated[static_cast<std::size_t>(k)] = true;
    steps.push_back(std::move(step));
    rows = detail::normalize(std::move(next));
  }

  // Back-substitution in reverse elimination order; untouched variables are 0.
  Vector<Scalar> x = Vector<Scalar>::Constant(n, Scalar(0));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const int k = it->variable;
    x(k) = Scalar(0);
    if (it->by_equality) {
      x(k) = (it->equality.rhs - it->equality.a.dot(x)) / it->equality.a(k);
      continue;
    }
    std::optional<Scalar> low;
    std::optional<Scalar> high;
    for (const Row& row : it->bounds) {
      // row.a(k) * x_k < rhs - rest
      Scalar bound = (row.rhs - row.a.dot(x)) / row.a(k);
      if (row.a(k) > Scalar(0)) {
        if (!high || bound < *high) high = bound;
      } else {
        if (!low || *low < bound) low = bound;
      }
    }
    x(k) = detail::pick_inside(low, high);
  }
  if (!system.satisfied_by(x)) {
    throw InternalError("Fourier-Motzkin witness fails the original system");
  }
  return x;
}

/// Strict inequalities cutting out the region of O: per blank edge
/// x_i - x_j < a_ij and x_j - x_i < a_ji; per step (i, j) of O,
/// x_i - x_j < -a_ji. Variable k holds x_(k+1).
ConstraintSystem<Rational> region_system(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a);

/// Regions of O and O2 (differing on one edge, blank in one of them) share a
/// facet: the crossing hyperplane x_j - x_i = a_ji meets the constraints of
/// the other edges in a relatively open set. PreconditionError otherwise.
bool facet_adjacent(const SimpleGraph& g, const PartialOrientation& o, const PartialOrientation& o2,
                    const ParameterList& a);

/// Breadth-first Pak-Stanley labelling over facet-adjacent admissible
/// orientations, starting from the empty one with label 0. A crossing that
/// orients (i, j) adds v_j. With a seed, neighbours are visited in a shuffled
/// order.
std::map<PartialOrientation, ChipConfig> pak_stanley_bfs(const SimpleGraph& g, const ParameterList& a,
                                                         int max_edges = kDefaultMaxEdges,
                                                         std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// SVG drawing of the arrangement of a connected 3-vertex graph in the plane
/// x_1 + x_2 + x_3 = 0, one label per region.
std::string render_svg(const SimpleGraph& g, const ParameterList& a);

}  // namespace bigraph
