#pragma once

#include "bigraph/graph.hpp"
#include "bigraph/scalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bigraph {

/// Integer polynomial in x and y.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;  ///< (x-power, y-power)

  BiPoly() = default;
  static BiPoly constant(Integer c);
  static BiPoly monomial(int x_power, int y_power, Integer c = 1);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  Integer coefficient(int x_power, int y_power) const;
  bool is_zero() const { return terms_.empty(); }

  Rational operator()(const Rational& x, const Rational& y) const;

  /// T(y, x).
  BiPoly swapped() const;

  BiPoly& operator+=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  bool operator==(const BiPoly&) const = default;

 private:
  void add(Exponents e, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

/// "x^2 + x + y", highest x-power first.
std::string to_string(const BiPoly& p);
/// "x^a y^b" key used by the JSON form.
std::string term_key(int x_power, int y_power);

/// Rational polynomial in t; coefficient i multiplies t^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational operator()(const Rational& t) const;
  bool operator==(const UniPoly&) const = default;

 private:
  std::vector<Rational> coefficients_;  ///< trailing zeros trimmed
};

std::string to_string(const UniPoly& p);

inline constexpr int kDefaultTutteEdges = 18;
inline constexpr int kDefaultSubsetEdges = 20;

/// Deletion-contraction with loop and isthmus rules, memoised on the graph
/// relabelled by a degree-refined vertex order.
BiPoly tutte(const Multigraph& g, int max_edges = kDefaultTutteEdges);
BiPoly tutte(const SimpleGraph& g, int max_edges = kDefaultTutteEdges);

/// Characteristic polynomial of the generic bigraphical arrangement of G,
/// (-2)^r t^(n-r) T_G(1 - t/2, 1) with r = n - k(G). Computed once as a sum
/// over spanning forests and once through the Tutte polynomial; a
/// disagreement raises InternalError.
UniPoly char_poly_generic(const SimpleGraph& g, int max_edges = kDefaultTutteEdges);

struct RegionCounts {
  Integer regions;  ///< r
  Integer bounded;  ///< b
  bool operator==(const RegionCounts&) const = default;
};

/// Zaslavsky: r = |chi(-1)|, b = |chi(1)|, cross-checked against
/// 2^r T(3/2, 1) and 2^r T(1/2, 1).
RegionCounts generic_region_counts(const SimpleGraph& g, int max_edges = kDefaultTutteEdges);

/// Probability that G keeps k(G) components when each edge is deleted
/// independently with probability p; sum over surviving edge subsets.
Rational reliability_brute_force(const Multigraph& g, const Rational& p, int max_edges = kDefaultSubsetEdges);
/// (1-p)^(|V|-k) p^(|E|-|V|+k) T(1, 1/p).
Rational reliability_tutte(const Multigraph& g, const Rational& p, int max_edges = kDefaultTutteEdges);
/// Both routes; InternalError when they differ.
Rational reliability(const Multigraph& g, const Rational& p, int max_edges = kDefaultSubsetEdges);

struct DualReport {
  Rational dual_probability;  ///< reliability of the dual at p = 2/3
  Rational region_fraction;   ///< r(GEN) / 3^|E|
  bool agree = false;
};

/// Checks the dual-reliability identity for a connected plane graph and a
/// user-supplied dual. Euler's formula n - |E| + |V*| = 2 and |E*| = |E| are
/// the only consistency checks; violations raise InputError(EulerMismatch).
DualReport dual_check(const SimpleGraph& g, const Multigraph& dual, int max_edges = kDefaultSubsetEdges);

enum class CycleFamily { Semi, Shi };

/// Closed forms for C_n, n >= 3.
RegionCounts cycle_closed_forms(int n, CycleFamily kind);

}  // namespace bigraph
