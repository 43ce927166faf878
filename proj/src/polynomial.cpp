#include "bigraph/polynomial.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <numeric>

namespace bigraph {

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(Integer c) { return monomial(0, 0, std::move(c)); }

BiPoly BiPoly::monomial(int x_power, int y_power, Integer c) {
  BiPoly p;
  p.add({x_power, y_power}, c);
  return p;
}

void BiPoly::add(Exponents e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BiPoly::coefficient(int x_power, int y_power) const {
  auto it = terms_.find({x_power, y_power});
  return it == terms_.end() ? Integer(0) : it->second;
}

namespace {

Rational rational_power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += Rational(c) * rational_power(x, e.first) * rational_power(y, e.second);
  return total;
}

BiPoly BiPoly::swapped() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.add({e.second, e.first}, c);
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

namespace {

std::string power_text(char var, int power) {
  if (power == 0) return "";
  if (power == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(power);
}

// Appends "+ c m" / "- c m" with the coefficient dropped when it is one and a
// monomial is present.
void append_term(std::string& out, const std::string& coefficient_abs, bool negative, const std::string& monomial) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += coefficient_abs;
  } else if (coefficient_abs != "1") {
    out += coefficient_abs + monomial;
  } else {
    out += monomial;
  }
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    append_term(out, to_string(Integer(abs(c))), c < 0, power_text('x', e.first) + power_text('y', e.second));
  }
  return out;
}

std::string term_key(int x_power, int y_power) {
  return "x^" + std::to_string(x_power) + " y^" + std::to_string(y_power);
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational total = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) total = total * t + *it;
  return total;
}

std::string to_string(const UniPoly& p) {
  if (p.coefficients().empty()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string magnitude = to_string(Rational(abs(c)));
    if (denominator(c) != 1 && i > 0) magnitude = "(" + magnitude + ")";
    append_term(out, magnitude, c < 0, power_text('t', i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tutte polynomial

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : rank_(static_cast<std::size_t>(n)), parent_(static_cast<std::size_t>(n)),
                              sets_(rank_.data(), parent_.data()), components_(n) {
    for (int v = 0; v < n; ++v) sets_.make_set(v);
  }
  /// False when a and b were already joined.
  bool join(int a, int b) {
    int ra = sets_.find_set(a);
    int rb = sets_.find_set(b);
    if (ra == rb) return false;
    sets_.link(ra, rb);
    --components_;
    return true;
  }
  int components() const { return components_; }

 private:
  std::vector<int> rank_;
  std::vector<int> parent_;
  boost::disjoint_sets<int*, int*> sets_;
  int components_;
};

Multigraph normalized(int n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return Multigraph{n, std::move(edges)};
}

// Drops isolated vertices and relabels the rest by (degree, sorted neighbour
// degrees, old index). The result is isomorphic to the input, so it is an
// exact memo key.
Multigraph relabelled(const Multigraph& g) {
  std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
  for (const Edge& e : g.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(g.n));
  for (const Edge& e : g.edges) {
    signature[e.u].push_back(degree[e.v]);
    signature[e.v].push_back(degree[e.u]);
  }
  std::vector<int> order;
  for (int v = 0; v < g.n; ++v) {
    if (degree[v] > 0) order.push_back(v);
    std::sort(signature[v].begin(), signature[v].end());
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (degree[a] != degree[b]) return degree[a] < degree[b];
    return signature[a] < signature[b];
  });
  std::vector<int> label(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges) edges.push_back({label[e.u], label[e.v]});
  return normalized(static_cast<int>(order.size()), std::move(edges));
}

Multigraph contracted(const Multigraph& g, std::size_t index) {
  const Vertex keep = g.edges[index].u;
  const Vertex gone = g.edges[index].v;
  auto relabel = [&](Vertex v) {
    if (v == gone) v = keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i != index) edges.push_back({relabel(g.edges[i].u), relabel(g.edges[i].v)});
  }
  return normalized(g.n - 1, std::move(edges));
}

Multigraph deleted(const Multigraph& g, std::size_t index) {
  Multigraph out = g;
  out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

bool is_isthmus(const Multigraph& g, std::size_t index) {
  UnionFind uf(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i != index) uf.join(g.edges[i].u, g.edges[i].v);
  }
  return uf.join(g.edges[index].u, g.edges[index].v);
}

class TutteSolver {
 public:
  BiPoly solve(const Multigraph& input) {
    Multigraph g = relabelled(input);
    if (g.edges.empty()) return BiPoly::constant(1);
    std::vector<int> key{g.n};
    for (const Edge& e : g.edges) {
      key.push_back(e.u);
      key.push_back(e.v);
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BiPoly result;
    auto loop = std::find_if(g.edges.begin(), g.edges.end(), [](const Edge& e) { return e.u == e.v; });
    if (loop != g.edges.end()) {
      auto index = static_cast<std::size_t>(loop - g.edges.begin());
      result = BiPoly::monomial(0, 1) * solve(deleted(g, index));
    } else {
      // Branch on an edge at the highest-degree vertex (last after relabelling).
      const std::size_t index = g.edges.size() - 1;
      if (is_isthmus(g, index)) {
        result = BiPoly::monomial(1, 0) * solve(contracted(g, index));
      } else {
        result = solve(deleted(g, index)) + solve(contracted(g, index));
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::vector<int>, BiPoly> memo_;
};

void check_edges(int m, int max_edges, const char* what) {
  if (m > max_edges) {
    throw CapError(std::string(what) + ": " + std::to_string(m) + " edges exceed the cap of " +
                   std::to_string(max_edges));
  }
}

}  // namespace

BiPoly tutte(const Multigraph& g, int max_edges) {
  check_edges(g.edge_count(), max_edges, "tutte");
  return TutteSolver().solve(g);
}

BiPoly tutte(const SimpleGraph& g, int max_edges) { return tutte(to_multigraph(g), max_edges); }

// ---------------------------------------------------------------------------
// Generic characteristic polynomial

namespace {

std::vector<Rational> poly_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Integer signed_power_of_two(int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= -2;
  return out;
}

UniPoly char_poly_by_forests(const SimpleGraph& g, int max_edges) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  check_edges(m, std::min(max_edges, kDefaultSubsetEdges), "forest enumeration");
  std::vector<Integer> forests(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    UnionFind uf(n + 1);
    bool acyclic = true;
    int size = 0;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!((mask >> e) & 1U)) continue;
      acyclic = uf.join(g.edge(static_cast<std::size_t>(e)).u, g.edge(static_cast<std::size_t>(e)).v);
      ++size;
    }
    if (acyclic) forests[static_cast<std::size_t>(size)] += 1;
  }
  std::vector<Rational> coefficients(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    coefficients[static_cast<std::size_t>(n - i)] += Rational(forests[static_cast<std::size_t>(i)] * signed_power_of_two(i));
  }
  return UniPoly(std::move(coefficients));
}

UniPoly char_poly_by_tutte(const SimpleGraph& g, int max_edges) {
  const int n = g.vertex_count();
  const int rank = n - component_count(to_multigraph(g));
  BiPoly t = tutte(g, max_edges);
  // T(x, 1) with x = 1 - t/2.
  const std::vector<Rational> substitute{Rational(1), Rational(-1, 2)};
  std::vector<Rational> total;
  for (const auto& [e, c] : t.terms()) {
    std::vector<Rational> term{Rational(c)};
    for (int i = 0; i < e.first; ++i) term = poly_multiply(term, substitute);
    if (total.size() < term.size()) total.resize(term.size(), Rational(0));
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  }
  std::vector<Rational> shifted(static_cast<std::size_t>(n - rank), Rational(0));
  const Rational scale(signed_power_of_two(rank));
  for (const Rational& c : total) shifted.push_back(c * scale);
  return UniPoly(std::move(shifted));
}

}  // namespace

UniPoly char_poly_generic(const SimpleGraph& g, int max_edges) {
  UniPoly by_forests = char_poly_by_forests(g, max_edges);
  UniPoly by_tutte = char_poly_by_tutte(g, max_edges);
  if (!(by_forests == by_tutte)) {
    throw InternalError("generic characteristic polynomial: forest sum " + to_string(by_forests) +
                        " differs from the Tutte substitution " + to_string(by_tutte));
  }
  return by_forests;
}

RegionCounts generic_region_counts(const SimpleGraph& g, int max_edges) {
  const UniPoly chi = char_poly_generic(g, max_edges);
  const Rational r = abs(chi(Rational(-1)));
  const Rational b = abs(chi(Rational(1)));
  const int rank = g.vertex_count() - component_count(to_multigraph(g));
  const BiPoly t = tutte(g, max_edges);
  const Rational scale = power_of_two(rank);
  if (r != scale * t(Rational(3, 2), Rational(1)) || b != scale * t(Rational(1, 2), Rational(1))) {
    throw InternalError("generic region counts: Zaslavsky evaluations disagree with the Tutte evaluations");
  }
  return {numerator(r), numerator(b)};
}

// ---------------------------------------------------------------------------
// Reliability

namespace {

void check_probability(const Rational& p) {
  if (p < 0 || p > 1) throw PreconditionError("probability " + to_string(p) + " is outside [0, 1]");
}

}  // namespace

Rational reliability_brute_force(const Multigraph& g, const Rational& p, int max_edges) {
  check_probability(p);
  const int m = g.edge_count();
  check_edges(m, max_edges, "reliability");
  const int k = component_count(g);
  std::vector<Rational> keep(static_cast<std::size_t>(m) + 1, Rational(1));
  std::vector<Rational> drop(static_cast<std::size_t>(m) + 1, Rational(1));
  for (int i = 1; i <= m; ++i) {
    keep[static_cast<std::size_t>(i)] = keep[static_cast<std::size_t>(i - 1)] * (1 - p);
    drop[static_cast<std::size_t>(i)] = drop[static_cast<std::size_t>(i - 1)] * p;
  }
  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    UnionFind uf(g.n);
    int kept = 0;
    for (int e = 0; e < m; ++e) {
      if (!((mask >> e) & 1U)) continue;
      uf.join(g.edges[static_cast<std::size_t>(e)].u, g.edges[static_cast<std::size_t>(e)].v);
      ++kept;
    }
    if (uf.components() == k) {
      total += keep[static_cast<std::size_t>(kept)] * drop[static_cast<std::size_t>(m - kept)];
    }
  }
  return total;
}

Rational reliability_tutte(const Multigraph& g, const Rational& p, int max_edges) {
  check_probability(p);
  // Only the full edge set survives, and it always has k(G) components.
  if (p == 0) return 1;
  const int k = component_count(g);
  const int m = g.edge_count();
  return rational_power(1 - p, g.n - k) * rational_power(p, m - g.n + k) *
         tutte(g, max_edges)(Rational(1), 1 / p);
}

Rational reliability(const Multigraph& g, const Rational& p, int max_edges) {
  Rational brute = reliability_brute_force(g, p, max_edges);
  Rational formula = reliability_tutte(g, p, std::max(max_edges, kDefaultTutteEdges));
  if (brute != formula) {
    throw InternalError("reliability: subset sum " + to_string(brute) + " differs from the Tutte formula " +
                        to_string(formula));
  }
  return brute;
}

DualReport dual_check(const SimpleGraph& g, const Multigraph& dual, int max_edges) {
  if (!is_connected(g)) throw PreconditionError("dual_check needs a connected plane graph");
  if (dual.edge_count() != g.edge_count() || g.vertex_count() - g.edge_count() + dual.n != 2) {
    throw InputError(InputErrorKind::EulerMismatch,
                     "dual is inconsistent with Euler's formula: n - |E| + |V*| = " +
                         std::to_string(g.vertex_count() - g.edge_count() + dual.n) + ", |E*| = " +
                         std::to_string(dual.edge_count()) + ", |E| = " + std::to_string(g.edge_count()));
  }
  DualReport report;
  report.dual_probability = reliability(dual, Rational(2, 3), max_edges);
  Integer orientations = 1;
  for (int i = 0; i < g.edge_count(); ++i) orientations *= 3;
  report.region_fraction = Rational(generic_region_counts(g).regions, orientations);
  report.agree = report.dual_probability == report.region_fraction;
  return report;
}

RegionCounts cycle_closed_forms(int n, CycleFamily kind) {
  if (n < 3) throw PreconditionError("cycle closed forms need n >= 3");
  Integer three = 1;
  Integer two = 1;
  for (int i = 0; i < n; ++i) {
    three *= 3;
    two *= 2;
  }
  if (kind == CycleFamily::Shi) return {three - two - n, two - 1 - n};
  Integer correction = 0;
  if (n % 2 == 0) {
    correction = 1;
    for (int i = 1; i <= n / 2; ++i) correction = correction * (n / 2 + i) / i;
  }
  return {three - two - correction, two - 1 - correction};
}

}  // namespace bigraph
