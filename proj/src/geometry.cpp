#include "bigraph/geometry.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace bigraph {

namespace {

// Row for x_from - x_to < rhs over n variables.
Vector<Rational> difference(int n, Vertex from, Vertex to) {
  Vector<Rational> a = Vector<Rational>::Constant(n, Rational(0));
  a(from - 1) = 1;
  a(to - 1) = -1;
  return a;
}

void add_edge_constraints(ConstraintSystem<Rational>& s, const SimpleGraph& g, const PartialOrientation& o,
                          const ParameterList& a, std::size_t e) {
  const int n = g.vertex_count();
  const Edge& edge = g.edge(e);
  switch (o.state(e)) {
    case EdgeState::Blank:
      s.add(difference(n, edge.u, edge.v), a.forward(e), Relation::Less);
      s.add(difference(n, edge.v, edge.u), a.backward(e), Relation::Less);
      break;
    case EdgeState::Forward:
      s.add(difference(n, edge.u, edge.v), -a.backward(e), Relation::Less);
      break;
    case EdgeState::Backward:
      s.add(difference(n, edge.v, edge.u), -a.forward(e), Relation::Less);
      break;
  }
}

}  // namespace

ConstraintSystem<Rational> region_system(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a) {
  if (o.edge_count() != static_cast<std::size_t>(g.edge_count()) || a.edge_count() != o.edge_count()) {
    throw PreconditionError("orientation or parameters do not match the graph");
  }
  ConstraintSystem<Rational> s;
  s.variable_count = g.vertex_count();
  for (std::size_t e = 0; e < o.edge_count(); ++e) add_edge_constraints(s, g, o, a, e);
  return s;
}

bool facet_adjacent(const SimpleGraph& g, const PartialOrientation& o, const PartialOrientation& o2,
                    const ParameterList& a) {
  if (o.edge_count() != o2.edge_count() || o.edge_count() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("orientations do not match the graph");
  }
  std::vector<std::size_t> differing;
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    if (o.state(e) != o2.state(e)) differing.push_back(e);
  }
  if (differing.size() != 1) {
    throw PreconditionError("facet_adjacent: orientations differ on " + std::to_string(differing.size()) +
                            " edges, expected 1");
  }
  const std::size_t crossing = differing.front();
  if (!o.is_blank(crossing) && !o2.is_blank(crossing)) {
    throw PreconditionError("facet_adjacent: the differing edge is oriented in both");
  }
  const PartialOrientation& oriented = o.is_blank(crossing) ? o2 : o;
  const Step step = *oriented_step(g, oriented, crossing);

  ConstraintSystem<Rational> s;
  s.variable_count = g.vertex_count();
  // The hyperplane x_j - x_i = a_ji separating the two regions.
  s.add(difference(s.variable_count, step.to, step.from), a(step.to, step.from), Relation::Equal);
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    if (e != crossing) add_edge_constraints(s, g, o, a, e);
  }
  return strict_feasible(s).has_value();
}

std::map<PartialOrientation, ChipConfig> pak_stanley_bfs(const SimpleGraph& g, const ParameterList& a,
                                                         int max_edges, std::optional<std::uint64_t> shuffle_seed) {
  orientation_count(g, max_edges);
  validate_parameters(g, a);
  const Classifier classifier(g, a);
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  std::map<PartialOrientation, ChipConfig> labels;
  const PartialOrientation center(static_cast<std::size_t>(g.edge_count()));
  labels.emplace(center, ChipConfig(g.vertex_count()));
  std::deque<PartialOrientation> queue{center};
  while (!queue.empty()) {
    const PartialOrientation current = queue.front();
    queue.pop_front();
    std::vector<std::pair<PartialOrientation, std::size_t>> neighbours;
    for (std::size_t e = 0; e < current.edge_count(); ++e) {
      for (EdgeState s : {EdgeState::Blank, EdgeState::Forward, EdgeState::Backward}) {
        if (s == current.state(e) || (!current.is_blank(e) && s != EdgeState::Blank)) continue;
        PartialOrientation next = current;
        next.set(e, s);
        neighbours.emplace_back(std::move(next), e);
      }
    }
    if (rng) std::shuffle(neighbours.begin(), neighbours.end(), *rng);
    for (const auto& [next, e] : neighbours) {
      if (labels.count(next) || classifier(next) != Admissibility::Admissible) continue;
      if (!facet_adjacent(g, current, next, a)) continue;
      // Breadth-first layers are |O|, so new regions only appear upward.
      if (next.is_blank(e)) {
        throw InternalError("pak_stanley_bfs: unlabelled region " + to_string(g, next) + " reached downward");
      }
      ChipConfig label = labels.at(current);
      label(oriented_step(g, next, e)->to) += 1;
      labels.emplace(next, std::move(label));
      queue.push_back(next);
    }
  }
  return labels;
}

}  // namespace bigraph
