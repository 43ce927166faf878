#pragma once

#include "bigraph/error.hpp"
#include "bigraph/scalar.hpp"

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bigraph {

/// Vertices of a simple graph are 1..n. Index 0 is reserved for the sink of
/// the sink extension.
using Vertex = int;

inline constexpr Vertex kSink = 0;

/// Unordered pair, stored with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Subset of 1..62 as a bitmask; bit i is vertex i.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
  }

  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  int size() const { return __builtin_popcountll(bits_); }

  /// {1..n}
  static constexpr VertexSet all(int n) {
    return VertexSet(n == 0 ? 0 : (((std::uint64_t{1} << n) - 1) << 1));
  }

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

inline constexpr int kMaxVertices = 62;

class SimpleGraph {
 public:
  SimpleGraph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Edges in insertion order, each normalized to u < v. The position of an
  /// edge in this list is its index everywhere else in the library.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  friend SimpleGraph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_{1};
};

/// Validating constructor. Loops, duplicate edges and indices outside 1..n
/// raise InputError with distinct kinds.
SimpleGraph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list);
SimpleGraph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

/// G plus the sink v_0 joined to every vertex.
class SinkedGraph {
 public:
  explicit SinkedGraph(SimpleGraph base);

  const SimpleGraph& base() const { return base_; }
  int vertex_count() const { return base_.vertex_count() + 1; }
  /// Base edges first (same indices as in `base()`), then {0,i} for i = 1..n.
  std::span<const Edge> edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const { return v == kSink ? base_.vertex_count() : base_.degree(v) + 1; }
  /// |E(G•)| - |V(G•)| + 1, which equals |E(G)|.
  int genus() const { return base_.edge_count(); }

 private:
  SimpleGraph base_;
  std::vector<Edge> edges_;
};

SinkedGraph sink_extension(const SimpleGraph& g);

/// Multigraph on vertices 0..n-1; loops and parallel edges allowed. Arises
/// from contraction and as the planar dual input.
struct Multigraph {
  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator==(const Multigraph&) const = default;
};

/// Vertex i of G becomes vertex i-1.
Multigraph to_multigraph(const SimpleGraph& g);
/// Vertex i of G• (sink included) keeps index i.
Multigraph to_multigraph(const SinkedGraph& g);

int component_count(const Multigraph& g);
bool is_connected(const SimpleGraph& g);
bool is_connected(const Multigraph& g);

/// Integer chip configuration over 1..n; c(i) is the coefficient of v_i.
class ChipConfig {
 public:
  ChipConfig() = default;
  explicit ChipConfig(int n) : entries_(static_cast<std::size_t>(n), 0) {}
  explicit ChipConfig(std::vector<int> entries) : entries_(std::move(entries)) {}
  ChipConfig(std::initializer_list<int> entries) : entries_(entries) {}

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(Vertex i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  int& operator()(Vertex i) { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }

  /// deg(c) = sum of the entries.
  int degree() const;
  /// Componentwise order c <= c'.
  bool dominated_by(const ChipConfig& other) const;

  auto operator<=>(const ChipConfig&) const = default;

 private:
  std::vector<int> entries_;
};

/// Sets are kept in canonical (lexicographic) order.
using ChipSet = std::set<ChipConfig>;

/// "c_1 c_2 ... c_n"
std::string to_string(const ChipConfig& c);
ChipConfig parse_chip_config(const std::string& text);

/// d_W(v): edges of G• from v to V• \ W. The sink edge always counts.
int cut_degree(const SinkedGraph& g, Vertex v, VertexSet w);

inline constexpr std::size_t kDefaultMaxCycles = 100000;

/// Every simple undirected cycle exactly once, each starting at its least
/// vertex and oriented so that the second entry is smaller than the last.
/// The list is sorted. Throws CapError past `max_cycles`.
std::vector<std::vector<Vertex>> simple_cycles(const SimpleGraph& g,
                                               std::size_t max_cycles = kDefaultMaxCycles);

/// Fraction-free (Bareiss) determinant. Every division is exact, so integer
/// scalars stay integral.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  const Eigen::Index size = m.rows();
  if (size == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k < size - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = k + 1;
      while (pivot < size && m(pivot, k) == 0) ++pivot;
      if (pivot == size) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < size; ++i) {
      for (Eigen::Index j = k + 1; j < size; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign * m(size - 1, size - 1);
}

using IntegerMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Laplacian; loops are ignored, parallel edges add up.
IntegerMatrix laplacian(const Multigraph& g);

/// Matrix-Tree theorem on the reduced Laplacian. Disconnected graphs give 0.
Integer spanning_tree_count(const Multigraph& g);
Integer spanning_tree_count(const SinkedGraph& g);
Integer spanning_tree_count(const SimpleGraph& g);

// Families used throughout tests and the CLI.
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);  ///< edges {i,i+1} and {1,n}
SimpleGraph path_graph(int n);
SimpleGraph edgeless_graph(int n);
Multigraph dipole(int k);  ///< two vertices joined by k parallel edges

// Text format: first line "n m", then m lines "i j" (1-based). Blank lines
// and lines starting with '#' are skipped. A multigraph file starts with the
// header line "multigraph"; loops and repeated pairs are then permitted.
SimpleGraph read_graph(std::istream& in);
Multigraph read_multigraph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);
Multigraph read_multigraph_file(const std::string& path);
std::string format_graph(const SimpleGraph& g);

}  // namespace bigraph
