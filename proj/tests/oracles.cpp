#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

using bigraph::Edge;
using bigraph::EdgeState;

int components(int n, const std::vector<Edge>& edges, std::uint64_t mask) {
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if ((mask >> e) & 1U) {
      adjacent[edges[e].u].push_back(edges[e].v);
      adjacent[edges[e].v].push_back(edges[e].u);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adjacent[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

Integer spanning_trees(const Multigraph& g) {
  Integer count = 0;
  const auto m = g.edges.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (__builtin_popcountll(mask) == g.n - 1 && components(g.n, g.edges, mask) == 1) count += 1;
  }
  return count;
}

namespace {

Integer binomial(int n, int k) {
  Integer out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// (x - 1)^a (y - 1)^b
bigraph::BiPoly shifted_monomial(int a, int b) {
  bigraph::BiPoly out;
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      Integer sign = ((a - i) + (b - j)) % 2 == 0 ? 1 : -1;
      out += bigraph::BiPoly::monomial(i, j, sign * binomial(a, i) * binomial(b, j));
    }
  }
  return out;
}

}  // namespace

bigraph::BiPoly tutte_by_subsets(const Multigraph& g) {
  const auto m = g.edges.size();
  const int full_rank = g.n - components(g.n, g.edges, (std::uint64_t{1} << m) - 1);
  bigraph::BiPoly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    int rank = g.n - components(g.n, g.edges, mask);
    int size = __builtin_popcountll(mask);
    out += shifted_monomial(full_rank - rank, size - rank);
  }
  return out;
}

std::vector<Integer> forest_counts(const SimpleGraph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({e.u - 1, e.v - 1});
  std::vector<Integer> f(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    int size = __builtin_popcountll(mask);
    // A forest loses one component per edge.
    if (components(g.vertex_count(), edges, mask) == g.vertex_count() - size) f[static_cast<std::size_t>(size)] += 1;
  }
  return f;
}

Rational reliability(const Multigraph& g, const Rational& p) {
  const auto m = g.edges.size();
  const int k = components(g.n, g.edges, (std::uint64_t{1} << m) - 1);
  Rational total = 0;
  for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << m); ++kept) {
    if (components(g.n, g.edges, kept) != k) continue;
    Rational weight = 1;
    for (std::size_t e = 0; e < m; ++e) weight *= ((kept >> e) & 1U) ? Rational(1 - p) : p;
    total += weight;
  }
  return total;
}

namespace {

// Score of the step (i, j) relative to O, or nothing when (j, i) is in O.
std::optional<Rational> score(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a, int i,
                              int j) {
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!((edge.u == i && edge.v == j) || (edge.u == j && edge.v == i))) continue;
    EdgeState s = o.state(e);
    if (s == EdgeState::Blank) return a(i, j);
    bool toward_j = (s == EdgeState::Forward) == (edge.u == i);
    if (toward_j) return Rational(-a(j, i));
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> min_cycle_score(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a) {
  const int n = g.vertex_count();
  std::optional<Rational> best;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::function<void(int, int, Rational, int)> extend = [&](int start, int at, Rational total, int length) {
    for (int next = 1; next <= n; ++next) {
      auto s = score(g, o, a, at, next);
      if (!s) continue;
      if (next == start && length >= 1) {
        Rational cycle = total + *s;
        if (!best || cycle < *best) best = cycle;
      } else if (next > start && !used[next]) {
        used[next] = true;
        extend(start, next, total + *s, length + 1);
        used[next] = false;
      }
    }
  };
  for (int s = 1; s <= n; ++s) {
    used[s] = true;
    extend(s, s, Rational(0), 0);
    used[s] = false;
  }
  return best;
}

bigraph::Admissibility classify(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a) {
  auto m = min_cycle_score(g, o, a);
  if (!m || *m > 0) return bigraph::Admissibility::Admissible;
  return *m == 0 ? bigraph::Admissibility::Almost : bigraph::Admissibility::Far;
}

bool is_parking(const SimpleGraph& g, const ChipConfig& c) {
  const int n = g.vertex_count();
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    auto in_w = [&](int v) { return (w >> (v - 1)) & 1U; };
    bool some = false;
    for (int v = 1; v <= n && !some; ++v) {
      if (!in_w(v)) continue;
      int d = 1;  // sink edge
      for (const Edge& e : g.edges()) {
        if (e.u == v && !in_w(e.v)) ++d;
        if (e.v == v && !in_w(e.u)) ++d;
      }
      some = c(v) >= 0 && c(v) < d;
    }
    if (!some) return false;
  }
  return true;
}

std::uint64_t acyclic_orientations(const SimpleGraph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1);
    for (int e = 0; e < m; ++e) {
      const Edge& edge = g.edge(static_cast<std::size_t>(e));
      if ((mask >> e) & 1U) {
        out[edge.v].push_back(edge.u);
      } else {
        out[edge.u].push_back(edge.v);
      }
    }
    // 0 unvisited, 1 on stack, 2 done.
    std::vector<int> colour(static_cast<std::size_t>(n) + 1, 0);
    bool cyclic = false;
    std::function<void(int)> visit = [&](int v) {
      colour[v] = 1;
      for (int w : out[v]) {
        if (colour[w] == 1) cyclic = true;
        if (colour[w] == 0) visit(w);
      }
      colour[v] = 2;
    };
    for (int v = 1; v <= n; ++v) {
      if (colour[v] == 0) visit(v);
    }
    if (!cyclic) ++count;
  }
  return count;
}

std::size_t cycle_count(const SimpleGraph& g) {
  // Each cycle is seen 2 * length times as a closed path with distinct vertices.
  const int n = g.vertex_count();
  std::set<std::pair<std::vector<int>, std::vector<Edge>>> cycles;
  std::vector<int> path;
  std::function<void(int)> extend = [&](int at) {
    for (int next : g.neighbors(at)) {
      if (next == path.front() && path.size() >= 3) {
        std::vector<int> vertices = path;
        std::sort(vertices.begin(), vertices.end());
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = path[i];
          int b = path[(i + 1) % path.size()];
          edges.push_back({std::min(a, b), std::max(a, b)});
        }
        std::sort(edges.begin(), edges.end());
        cycles.insert({vertices, edges});
      } else if (std::find(path.begin(), path.end(), next) == path.end()) {
        path.push_back(next);
        extend(next);
        path.pop_back();
      }
    }
  };
  for (int s = 1; s <= n; ++s) {
    path = {s};
    extend(s);
  }
  return cycles.size();
}

std::uint64_t region_count(const SimpleGraph& g, const ParameterList& a) {
  std::uint64_t total = 1;
  for (int i = 0; i < g.edge_count(); ++i) total *= 3;
  std::uint64_t r = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto o = PartialOrientation::from_code(static_cast<std::size_t>(g.edge_count()), code);
    if (oracle::classify(g, o, a) == bigraph::Admissibility::Admissible) ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Graph families

namespace {

struct Small {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

// Upper-triangle adjacency bits under a vertex permutation.
std::uint64_t adjacency_bits(const Small& g, const std::vector<int>& perm) {
  std::uint64_t bits = 0;
  for (auto [u, v] : g.edges) {
    int a = std::min(perm[u], perm[v]);
    int b = std::max(perm[u], perm[v]);
    bits |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
  }
  return bits;
}

std::pair<int, std::uint64_t> canonical(const Small& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, adjacency_bits(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {g.n, best};
}

SimpleGraph to_graph(const Small& g) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) edges.emplace_back(u + 1, v + 1);
  return bigraph::build_graph(g.n, edges);
}

std::vector<std::vector<Small>> connected_by_size(int max_edges) {
  std::vector<std::vector<Small>> by_size(static_cast<std::size_t>(max_edges) + 1);
  if (max_edges < 1) return by_size;
  by_size[1].push_back(Small{2, {{0, 1}}});
  for (int m = 1; m < max_edges; ++m) {
    std::set<std::pair<int, std::uint64_t>> seen;
    for (const Small& g : by_size[m]) {
      std::set<std::pair<int, int>> present(g.edges.begin(), g.edges.end());
      std::vector<Small> grown;
      for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
          if (present.count({u, v})) continue;
          Small h = g;
          h.edges.emplace_back(u, v);
          grown.push_back(h);
        }
        Small h = g;
        h.edges.emplace_back(u, g.n);
        ++h.n;
        grown.push_back(h);
      }
      for (Small& h : grown) {
        if (seen.insert(canonical(h)).second) by_size[static_cast<std::size_t>(m + 1)].push_back(std::move(h));
      }
    }
  }
  return by_size;
}

}  // namespace

std::vector<SimpleGraph> connected_graphs(int max_edges) {
  std::vector<SimpleGraph> out;
  for (const auto& group : connected_by_size(max_edges)) {
    for (const Small& g : group) out.push_back(to_graph(g));
  }
  return out;
}

std::vector<SimpleGraph> all_graphs(int max_edges) {
  std::vector<Small> pieces;
  std::vector<int> sizes;
  auto by_size = connected_by_size(max_edges);
  for (int m = 1; m <= max_edges; ++m) {
    for (const Small& g : by_size[static_cast<std::size_t>(m)]) {
      pieces.push_back(g);
      sizes.push_back(m);
    }
  }
  std::vector<SimpleGraph> out{bigraph::edgeless_graph(1)};
  // Multisets of connected pieces, as nondecreasing index sequences.
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> build = [&](std::size_t from, int budget) {
    if (!chosen.empty()) {
      Small g;
      for (std::size_t i : chosen) {
        for (auto [u, v] : pieces[i].edges) g.edges.emplace_back(u + g.n, v + g.n);
        g.n += pieces[i].n;
      }
      out.push_back(to_graph(g));
    }
    for (std::size_t i = from; i < pieces.size(); ++i) {
      if (sizes[i] > budget) continue;
      chosen.push_back(i);
      build(i, budget - sizes[i]);
      chosen.pop_back();
    }
  };
  build(0, max_edges);
  return out;
}

SimpleGraph random_connected(std::mt19937_64& rng, int max_vertices, int max_edges) {
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uniform(2, max_vertices);
  const int max_possible = std::min(max_edges, n * (n - 1) / 2);
  const int m = uniform(n - 1, max_possible);
  std::set<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    int u = uniform(1, v - 1);
    edges.insert({u, v});
  }
  while (static_cast<int>(edges.size()) < m) {
    int u = uniform(1, n);
    int v = uniform(1, n);
    if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
  }
  // Shuffle labels so the tree is not always rooted at vertex 1.
  std::vector<int> label(static_cast<std::size_t>(n) + 1);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin() + 1, label.end(), rng);
  std::vector<std::pair<int, int>> list;
  for (auto [u, v] : edges) list.emplace_back(label[u], label[v]);
  return bigraph::build_graph(n, list);
}

}  // namespace oracle
