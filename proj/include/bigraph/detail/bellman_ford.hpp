#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace bigraph::detail {

template <typename W>
struct WeightedArc {
  int from = 0;
  int to = 0;
  W weight{};
};

/// Lexicographic weight (score, length). With length -1 per arc, a cycle of
/// score zero becomes strictly negative, so nonpositive cycles are exactly the
/// negative ones under this order.
template <typename W>
struct LexWeight {
  W score{};
  int length = 0;

  friend LexWeight operator+(const LexWeight& a, const LexWeight& b) {
    return {a.score + b.score, a.length + b.length};
  }
  friend bool operator<(const LexWeight& a, const LexWeight& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.length < b.length;
  }
};

inline constexpr std::size_t kNoArc = std::numeric_limits<std::size_t>::max();

/// Bellman-Ford from a virtual source joined to every vertex by a zero arc.
/// Returns the arc indices of a negative cycle in traversal order, or nothing.
template <typename W>
std::optional<std::vector<std::size_t>> find_negative_cycle(int vertex_count,
                                                            std::span<const WeightedArc<W>> arcs,
                                                            const W& zero) {
  std::vector<W> dist(static_cast<std::size_t>(vertex_count), zero);
  std::vector<std::size_t> pred(static_cast<std::size_t>(vertex_count), kNoArc);
  int touched = -1;
  for (int round = 0; round <= vertex_count; ++round) {
    touched = -1;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& arc = arcs[i];
      W candidate = dist[arc.from] + arc.weight;
      if (candidate < dist[arc.to]) {
        dist[arc.to] = candidate;
        pred[arc.to] = i;
        touched = arc.to;
      }
    }
    if (touched < 0) return std::nullopt;
  }
  // Still relaxing after |V| + 1 rounds: walk back onto the cycle first.
  int x = touched;
  for (int i = 0; i < vertex_count; ++i) x = arcs[pred[x]].from;
  std::vector<std::size_t> cycle;
  int v = x;
  do {
    std::size_t arc = pred[v];
    cycle.push_back(arc);
    v = arcs[arc].from;
  } while (v != x);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

/// Single-source shortest paths, assuming no negative cycle is reachable.
/// `reached[v]` is false for vertices the source cannot reach.
template <typename W>
struct ShortestPaths {
  std::vector<W> dist;
  std::vector<std::size_t> pred;
  std::vector<bool> reached;
};

template <typename W>
ShortestPaths<W> shortest_paths(int vertex_count, std::span<const WeightedArc<W>> arcs, int source,
                                const W& zero) {
  ShortestPaths<W> sp;
  sp.dist.assign(static_cast<std::size_t>(vertex_count), zero);
  sp.pred.assign(static_cast<std::size_t>(vertex_count), kNoArc);
  sp.reached.assign(static_cast<std::size_t>(vertex_count), false);
  sp.reached[source] = true;
  for (int round = 0; round < vertex_count; ++round) {
    bool changed = false;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& arc = arcs[i];
      if (!sp.reached[arc.from]) continue;
      W candidate = sp.dist[arc.from] + arc.weight;
      if (!sp.reached[arc.to] || candidate < sp.dist[arc.to]) {
        sp.dist[arc.to] = candidate;
        sp.pred[arc.to] = i;
        sp.reached[arc.to] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return sp;
}

}  // namespace bigraph::detail
