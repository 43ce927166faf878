#include "bigraph/orientation.hpp"

#include "bigraph/detail/bellman_ford.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <random>
#include <sstream>

namespace bigraph {

using detail::LexWeight;
using detail::WeightedArc;

// ---------------------------------------------------------------------------
// PartialOrientation

PartialOrientation PartialOrientation::from_steps(const SimpleGraph& g, std::span<const Step> steps) {
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  for (const Step& s : steps) {
    auto index = g.edge_index(s.from, s.to);
    if (!index || s.from == s.to) {
      throw InputError(InputErrorKind::VertexOutOfRange,
                       "step (" + std::to_string(s.from) + "," + std::to_string(s.to) + ") is not over an edge");
    }
    EdgeState wanted = s.from < s.to ? EdgeState::Forward : EdgeState::Backward;
    if (!o.is_blank(*index) && o.state(*index) != wanted) {
      throw PreconditionError("both directions of edge {" + std::to_string(s.from) + "," + std::to_string(s.to) +
                              "} requested");
    }
    o.set(*index, wanted);
  }
  return o;
}

PartialOrientation PartialOrientation::from_steps(const SimpleGraph& g, std::initializer_list<Step> steps) {
  return from_steps(g, std::span<const Step>(steps.begin(), steps.size()));
}

PartialOrientation PartialOrientation::from_code(std::size_t edge_count, std::uint64_t code) {
  PartialOrientation o(edge_count);
  for (std::size_t e = 0; e < edge_count; ++e) {
    o.states_[e] = static_cast<EdgeState>(code % 3);
    code /= 3;
  }
  return o;
}

std::uint64_t PartialOrientation::code() const {
  std::uint64_t code = 0;
  for (std::size_t e = states_.size(); e-- > 0;) code = code * 3 + static_cast<std::uint64_t>(states_[e]);
  return code;
}

int PartialOrientation::size() const {
  return static_cast<int>(std::count_if(states_.begin(), states_.end(),
                                        [](EdgeState s) { return s != EdgeState::Blank; }));
}

bool PartialOrientation::advance() {
  for (auto& s : states_) {
    if (s != EdgeState::Backward) {
      s = static_cast<EdgeState>(static_cast<int>(s) + 1);
      return true;
    }
    s = EdgeState::Blank;
  }
  return false;
}

std::optional<Step> oriented_step(const SimpleGraph& g, const PartialOrientation& o, std::size_t edge) {
  const Edge& e = g.edge(edge);
  switch (o.state(edge)) {
    case EdgeState::Forward:
      return Step{e.u, e.v};
    case EdgeState::Backward:
      return Step{e.v, e.u};
    case EdgeState::Blank:
      break;
  }
  return std::nullopt;
}

std::vector<Step> steps(const SimpleGraph& g, const PartialOrientation& o) {
  std::vector<Step> out;
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    if (auto s = oriented_step(g, o, e)) out.push_back(*s);
  }
  return out;
}

bool contains_step(const SimpleGraph& g, const PartialOrientation& o, Step s) {
  auto index = g.edge_index(s.from, s.to);
  if (!index) return false;
  auto oriented = oriented_step(g, o, *index);
  return oriented && *oriented == s;
}

bool is_compatible(const SimpleGraph& g, const PartialOrientation& o, Step s) {
  if (!g.has_edge(s.from, s.to)) return false;
  return !contains_step(g, o, Step{s.to, s.from});
}

ChipConfig indegree(const SimpleGraph& g, const PartialOrientation& o) {
  ChipConfig c(g.vertex_count());
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    if (auto s = oriented_step(g, o, e)) c(s->to) += 1;
  }
  return c;
}

bool is_acyclic(const SimpleGraph& g, const PartialOrientation& o) {
  // Kahn's algorithm on the oriented edges only.
  const int n = g.vertex_count();
  std::vector<int> in(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n) + 1);
  for (const Step& s : steps(g, o)) {
    out[s.from].push_back(s.to);
    ++in[s.to];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (in[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : out[v]) {
      if (--in[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

std::string to_string(const SimpleGraph& g, const PartialOrientation& o) {
  std::string out = "{";
  for (const Step& s : steps(g, o)) {
    if (out.size() > 1) out += ",";
    out += "(" + std::to_string(s.from) + "," + std::to_string(s.to) + ")";
  }
  return out + "}";
}

std::uint64_t orientation_count(const SimpleGraph& g, int max_edges) {
  if (g.edge_count() > max_edges || g.edge_count() > 40) {
    throw CapError("graph has " + std::to_string(g.edge_count()) + " edges; the orientation cap is " +
                   std::to_string(max_edges));
  }
  std::uint64_t total = 1;
  for (int i = 0; i < g.edge_count(); ++i) total *= 3;
  return total;
}

// ---------------------------------------------------------------------------
// ParameterList

ParameterList::ParameterList(const SimpleGraph& g)
    : edges_(g.edges().begin(), g.edges().end()),
      forward_(edges_.size(), Rational(0)),
      backward_(edges_.size(), Rational(0)) {}

std::size_t ParameterList::index_of(Vertex i, Vertex j) const {
  Edge key{std::min(i, j), std::max(i, j)};
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e] == key && i != j) return e;
  }
  throw InputError(InputErrorKind::UnknownParameter,
                   "no edge {" + std::to_string(i) + "," + std::to_string(j) + "} for a parameter");
}

const Rational& ParameterList::operator()(Vertex i, Vertex j) const {
  std::size_t e = index_of(i, j);
  return i < j ? forward_[e] : backward_[e];
}

void ParameterList::set(Vertex i, Vertex j, Rational value) {
  std::size_t e = index_of(i, j);
  (i < j ? forward_[e] : backward_[e]) = std::move(value);
}

ParameterList semi_parameters(const SimpleGraph& g) {
  ParameterList a(g);
  for (const Edge& e : g.edges()) {
    a.set(e.u, e.v, 1);
    a.set(e.v, e.u, 1);
  }
  return a;
}

ParameterList shi_parameters(const SimpleGraph& g) {
  ParameterList a(g);
  for (const Edge& e : g.edges()) {
    a.set(e.u, e.v, 1);
    a.set(e.v, e.u, 0);
  }
  return a;
}

ParameterList interval_parameters(const SimpleGraph& g, std::span<const long long> lengths) {
  if (lengths.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw InputError(InputErrorKind::BadPreset, "interval preset needs " + std::to_string(g.vertex_count()) +
                                                    " lengths, got " + std::to_string(lengths.size()));
  }
  for (long long l : lengths) {
    if (l <= 0) throw InputError(InputErrorKind::BadPreset, "interval lengths must be positive");
  }
  ParameterList a(g);
  for (const Edge& e : g.edges()) {
    a.set(e.u, e.v, Rational(lengths[static_cast<std::size_t>(e.u - 1)]));
    a.set(e.v, e.u, Rational(lengths[static_cast<std::size_t>(e.v - 1)]));
  }
  return a;
}

namespace {

bool signed_sums_avoid_zero(const std::vector<Vertex>& cycle, const ParameterList& a, std::size_t at,
                            const Rational& partial) {
  if (at == cycle.size()) return partial != 0;
  Vertex from = cycle[at];
  Vertex to = cycle[(at + 1) % cycle.size()];
  return signed_sums_avoid_zero(cycle, a, at + 1, partial + a(from, to)) &&
         signed_sums_avoid_zero(cycle, a, at + 1, partial - a(to, from));
}

bool certified(const std::vector<std::vector<Vertex>>& cycles, const ParameterList& a) {
  for (const auto& cycle : cycles) {
    if (cycle.size() > 30) throw CapError("cycle too long to certify genericity");
    if (!signed_sums_avoid_zero(cycle, a, 0, Rational(0))) return false;
  }
  return true;
}

}  // namespace

bool is_certified_generic(const SimpleGraph& g, const ParameterList& a, std::size_t max_cycles) {
  return certified(simple_cycles(g, max_cycles), a);
}

ParameterList sample_generic(const SimpleGraph& g, std::uint64_t seed, std::size_t max_cycles) {
  constexpr std::uint64_t kDenominator = std::uint64_t{1} << 20;
  constexpr std::uint64_t kLow = kDenominator / 2 + 1;    // > 1/2
  constexpr std::uint64_t kSpan = kDenominator - 1;       // up to 3/2 exclusive
  const auto cycles = simple_cycles(g, max_cycles);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ParameterList a(g);
    for (const Edge& e : g.edges()) {
      a.set(e.u, e.v, Rational(Integer(kLow + rng() % kSpan), Integer(kDenominator)));
      a.set(e.v, e.u, Rational(Integer(kLow + rng() % kSpan), Integer(kDenominator)));
    }
    if (certified(cycles, a)) return a;
  }
  throw InternalError("no certified generic parameters after 1000 draws");
}

// ---------------------------------------------------------------------------
// Scores and classification

std::optional<std::size_t> ScoreDigraph::arc_index(Step s) const {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].step == s) return i;
  }
  return std::nullopt;
}

ScoreDigraph score_digraph(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a) {
  ScoreDigraph d;
  d.vertex_count = g.vertex_count();
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    switch (o.state(e)) {
      case EdgeState::Blank:
        d.arcs.push_back({{edge.u, edge.v}, a.forward(e), e, false});
        d.arcs.push_back({{edge.v, edge.u}, a.backward(e), e, false});
        break;
      case EdgeState::Forward:
        d.arcs.push_back({{edge.u, edge.v}, -a.backward(e), e, true});
        break;
      case EdgeState::Backward:
        d.arcs.push_back({{edge.v, edge.u}, -a.forward(e), e, true});
        break;
    }
  }
  return d;
}

Rational step_score(const SimpleGraph& g, Step e, const PartialOrientation& o, const ParameterList& a) {
  if (!g.has_edge(e.from, e.to) || e.from == e.to) {
    throw PreconditionError("step (" + std::to_string(e.from) + "," + std::to_string(e.to) + ") is not over an edge");
  }
  if (!is_compatible(g, o, e)) {
    throw PreconditionError("step (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                            ") is incompatible with the orientation");
  }
  if (contains_step(g, o, e)) return -a(e.to, e.from);
  return a(e.from, e.to);
}

std::string_view to_string(Admissibility c) {
  switch (c) {
    case Admissibility::Admissible:
      return "admissible";
    case Admissibility::Almost:
      return "almost";
    case Admissibility::Far:
      return "far";
  }
  return "?";
}

namespace {

template <typename W>
void build_arcs(std::span<const Edge> edges, const PartialOrientation& o, const std::vector<W>& forward,
                const std::vector<W>& backward, std::vector<WeightedArc<W>>& arcs) {
  arcs.clear();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = edges[e];
    switch (o.state(e)) {
      case EdgeState::Blank:
        arcs.push_back({edge.u, edge.v, forward[e]});
        arcs.push_back({edge.v, edge.u, backward[e]});
        break;
      case EdgeState::Forward:
        arcs.push_back({edge.u, edge.v, W(-backward[e])});
        break;
      case EdgeState::Backward:
        arcs.push_back({edge.v, edge.u, W(-forward[e])});
        break;
    }
  }
}

template <typename W>
Admissibility classify_arcs(int vertex_count, const std::vector<WeightedArc<W>>& arcs) {
  // A plain pass separates Far; the lexicographic pass then exposes zero cycles.
  if (detail::find_negative_cycle<W>(vertex_count, arcs, W(0))) return Admissibility::Far;
  std::vector<WeightedArc<LexWeight<W>>> lex;
  lex.reserve(arcs.size());
  for (const auto& arc : arcs) lex.push_back({arc.from, arc.to, {arc.weight, -1}});
  if (detail::find_negative_cycle<LexWeight<W>>(vertex_count, lex, LexWeight<W>{W(0), 0})) {
    return Admissibility::Almost;
  }
  return Admissibility::Admissible;
}

// Bound on scaled magnitudes so that any path sum stays far from overflow.
constexpr std::int64_t kScaledLimit = std::int64_t{1} << 40;

}  // namespace

Classifier::Classifier(const SimpleGraph& g, const ParameterList& a)
    : edges_(g.edges().begin(), g.edges().end()), vertex_count_(g.vertex_count() + 1) {
  if (a.edge_count() != edges_.size()) {
    throw PreconditionError("parameter list does not match the graph");
  }
  Integer common = 1;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    forward_.push_back(a.forward(e));
    backward_.push_back(a.backward(e));
    for (const Rational* r : {&a.forward(e), &a.backward(e)}) {
      Integer d = denominator(*r);
      common = common / boost::multiprecision::gcd(common, d) * d;
    }
  }
  bool fits = common < kScaledLimit && edges_.size() < 4096;
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> b;
  for (std::size_t e = 0; fits && e < edges_.size(); ++e) {
    Rational sf = forward_[e] * common;
    Rational sb = backward_[e] * common;
    if (abs(sf) >= kScaledLimit || abs(sb) >= kScaledLimit) {
      fits = false;
      break;
    }
    f.push_back(numerator(sf).convert_to<std::int64_t>());
    b.push_back(numerator(sb).convert_to<std::int64_t>());
  }
  if (fits) {
    scaled_forward_ = std::move(f);
    scaled_backward_ = std::move(b);
  }
}

Admissibility Classifier::operator()(const PartialOrientation& o) const {
  if (!uses_integer_weights()) return classify_rational(o);
  std::vector<WeightedArc<std::int64_t>> arcs;
  build_arcs<std::int64_t>(edges_, o, scaled_forward_, scaled_backward_, arcs);
  return classify_arcs(vertex_count_, arcs);
}

Admissibility Classifier::classify_rational(const PartialOrientation& o) const {
  std::vector<WeightedArc<Rational>> arcs;
  build_arcs<Rational>(edges_, o, forward_, backward_, arcs);
  return classify_arcs(vertex_count_, arcs);
}

Admissibility classify(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a) {
  return Classifier(g, a)(o);
}

std::optional<ScoredCycle> find_bad_cycle(const SimpleGraph& g, const PartialOrientation& o,
                                          const ParameterList& a) {
  ScoreDigraph d = score_digraph(g, o, a);
  std::vector<WeightedArc<LexWeight<Rational>>> lex;
  for (const auto& arc : d.arcs) lex.push_back({arc.step.from, arc.step.to, {arc.weight, -1}});
  auto cycle = detail::find_negative_cycle<LexWeight<Rational>>(d.vertex_count + 1, lex, {Rational(0), 0});
  if (!cycle) return std::nullopt;
  ScoredCycle out;
  out.score = 0;
  for (std::size_t index : *cycle) {
    out.steps.push_back(d.arcs[index].step);
    out.score += d.arcs[index].weight;
  }
  return out;
}

void validate_parameters(const SimpleGraph& g, const ParameterList& a) {
  if (a.edge_count() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("parameter list does not match the graph");
  }
  PartialOrientation empty(static_cast<std::size_t>(g.edge_count()));
  if (auto bad = find_bad_cycle(g, empty, a)) {
    std::string text;
    for (const Step& s : bad->steps) text += "(" + std::to_string(s.from) + "," + std::to_string(s.to) + ")";
    throw ParameterError("no central region: potential cycle " + text + " of the empty orientation has score " +
                             to_string(bad->score),
                         *bad);
  }
}

namespace {

// reach[v] bit u set when u is reachable from v along arcs (v itself included).
std::vector<std::uint64_t> reachability(int n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n) + 1);
  for (auto [from, to] : arcs) out[from].push_back(to);
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex s = 1; s <= n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : out[v]) {
        if (!((seen >> w) & 1U)) {
          seen |= std::uint64_t{1} << w;
          stack.push_back(w);
        }
      }
    }
    reach[s] = seen;
  }
  return reach;
}

}  // namespace

bool every_oriented_step_on_cycle(const SimpleGraph& g, const PartialOrientation& o) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  std::vector<Step> oriented;
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (auto s = oriented_step(g, o, e)) {
      arcs.emplace_back(s->from, s->to);
      oriented.push_back(*s);
    } else {
      arcs.emplace_back(edge.u, edge.v);
      arcs.emplace_back(edge.v, edge.u);
    }
  }
  if (oriented.empty()) return true;
  auto reach = reachability(g.vertex_count(), arcs);
  return std::all_of(oriented.begin(), oriented.end(),
                     [&](const Step& s) { return (reach[s.to] >> s.from) & 1U; });
}

bool is_relatively_bounded(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a) {
  if (classify(g, o, a) != Admissibility::Admissible) {
    throw PreconditionError("is_relatively_bounded: orientation is not admissible");
  }
  return every_oriented_step_on_cycle(g, o);
}

RegionCensus census(const SimpleGraph& g, const ParameterList& a, int max_edges) {
  orientation_count(g, max_edges);
  validate_parameters(g, a);
  RegionCensus result;
  result.by_size.assign(static_cast<std::size_t>(g.edge_count()) + 1, 0);
  Classifier classifier(g, a);
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  do {
    switch (classifier(o)) {
      case Admissibility::Admissible:
        ++result.regions;
        ++result.by_size[static_cast<std::size_t>(o.size())];
        if (every_oriented_step_on_cycle(g, o)) ++result.bounded;
        break;
      case Admissibility::Almost:
        ++result.almost;
        break;
      case Admissibility::Far:
        ++result.far;
        break;
    }
  } while (o.advance());
  return result;
}

// ---------------------------------------------------------------------------
// Zero cycles

namespace {

struct DirectedCycleSearch {
  const ScoreDigraph& d;
  std::vector<std::vector<std::size_t>> out_arcs;
  std::vector<bool> on_path;
  std::vector<std::size_t> path;
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_cycles;
  std::size_t enumerated = 0;

  DirectedCycleSearch(const ScoreDigraph& digraph, std::size_t cap)
      : d(digraph),
        out_arcs(static_cast<std::size_t>(digraph.vertex_count) + 1),
        on_path(static_cast<std::size_t>(digraph.vertex_count) + 1, false),
        max_cycles(cap) {
    for (std::size_t i = 0; i < d.arcs.size(); ++i) out_arcs[d.arcs[i].step.from].push_back(i);
  }

  // Simple directed cycles through `start` whose other vertices exceed it,
  // kept only when the score is zero.
  void extend(Vertex start, Vertex at, const Rational& score) {
    for (std::size_t arc : out_arcs[at]) {
      Vertex next = d.arcs[arc].step.to;
      Rational total = score + d.arcs[arc].weight;
      if (next == start) {
        if (++enumerated > max_cycles) {
          throw CapError("potential cycle enumeration exceeds cap " + std::to_string(max_cycles));
        }
        if (total == 0) {
          path.push_back(arc);
          cycles.push_back(path);
          path.pop_back();
        }
        continue;
      }
      if (next < start || on_path[next]) continue;
      on_path[next] = true;
      path.push_back(arc);
      extend(start, next, total);
      path.pop_back();
      on_path[next] = false;
    }
  }

  void run() {
    for (Vertex s = 1; s <= d.vertex_count; ++s) {
      on_path[s] = true;
      extend(s, s, Rational(0));
      on_path[s] = false;
    }
  }
};

int max_disjoint_packing(const std::vector<boost::dynamic_bitset<>>& sets, std::size_t at,
                         const boost::dynamic_bitset<>& used, int count, int best) {
  if (count + static_cast<int>(sets.size() - at) <= best) return best;
  if (at == sets.size()) return std::max(best, count);
  if (!sets[at].intersects(used)) {
    best = max_disjoint_packing(sets, at + 1, used | sets[at], count + 1, best);
  }
  return max_disjoint_packing(sets, at + 1, used, count, best);
}

}  // namespace

ZeroCycleStats zero_cycle_stats(const SimpleGraph& g, const PartialOrientation& o, const ParameterList& a,
                                std::size_t max_cycles) {
  if (classify(g, o, a) != Admissibility::Almost) {
    throw PreconditionError("zero_cycle_stats: orientation is not almost admissible");
  }
  ScoreDigraph d = score_digraph(g, o, a);
  const int n = d.vertex_count;

  // All-pairs shortest paths; no negative cycles exist for an almost-admissible O.
  std::vector<std::vector<std::optional<Rational>>> dist(
      static_cast<std::size_t>(n) + 1, std::vector<std::optional<Rational>>(static_cast<std::size_t>(n) + 1));
  for (Vertex v = 1; v <= n; ++v) dist[v][v] = Rational(0);
  for (const auto& arc : d.arcs) {
    auto& slot = dist[arc.step.from][arc.step.to];
    if (!slot || arc.weight < *slot) slot = arc.weight;
  }
  for (Vertex k = 1; k <= n; ++k) {
    for (Vertex i = 1; i <= n; ++i) {
      if (!dist[i][k]) continue;
      for (Vertex j = 1; j <= n; ++j) {
        if (!dist[k][j]) continue;
        Rational via = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || via < *dist[i][j]) dist[i][j] = via;
      }
    }
  }

  ZeroCycleStats stats;
  for (const auto& arc : d.arcs) {
    const auto& back = dist[arc.step.to][arc.step.from];
    if (back && arc.weight + *back == 0) ++stats.w;
  }

  DirectedCycleSearch search(d, max_cycles);
  search.run();
  std::vector<boost::dynamic_bitset<>> sets;
  for (const auto& cycle : search.cycles) {
    boost::dynamic_bitset<> bits(d.arcs.size());
    for (std::size_t arc : cycle) bits.set(arc);
    sets.push_back(std::move(bits));
  }
  stats.z = max_disjoint_packing(sets, 0, boost::dynamic_bitset<>(d.arcs.size()), 0, 0);
  return stats;
}

RegionBounds region_count_bounds(const SimpleGraph& g, const ParameterList& a, int max_edges,
                                 std::size_t max_cycles) {
  orientation_count(g, max_edges);
  validate_parameters(g, a);
  RegionBounds bounds{Rational(0), Rational(0), 0};
  Classifier classifier(g, a);
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  do {
    if (classifier(o) != Admissibility::Almost) continue;
    ZeroCycleStats stats = zero_cycle_stats(g, o, a, max_cycles);
    bounds.lower += power_of_two(-stats.w);
    bounds.upper += power_of_two(-stats.z);
    ++bounds.almost;
  } while (o.advance());
  return bounds;
}

// ---------------------------------------------------------------------------
// Indegree realization

namespace {

PartialOrientation with_step(const SimpleGraph& g, PartialOrientation o, Step s) {
  std::size_t e = *g.edge_index(s.from, s.to);
  o.set(e, s.from < s.to ? EdgeState::Forward : EdgeState::Backward);
  return o;
}

// A nonpositive potential cycle of O through the oriented step `e`, listed
// starting with `e`. Every other potential cycle of O is positive, so
// shortest paths avoiding `e` are well defined.
std::optional<std::vector<Step>> bad_cycle_through(const SimpleGraph& g, const PartialOrientation& o,
                                                   const ParameterList& a, Step e) {
  ScoreDigraph d = score_digraph(g, o, a);
  std::size_t through = *d.arc_index(e);
  std::vector<WeightedArc<Rational>> arcs;
  std::vector<std::size_t> original;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    if (i == through) continue;
    arcs.push_back({d.arcs[i].step.from, d.arcs[i].step.to, d.arcs[i].weight});
    original.push_back(i);
  }
  auto sp = detail::shortest_paths<Rational>(d.vertex_count + 1, arcs, e.to, Rational(0));
  if (!sp.reached[e.from] || d.arcs[through].weight + sp.dist[e.from] > 0) return std::nullopt;
  std::vector<Step> path;
  for (Vertex v = e.from; v != e.to;) {
    const auto& arc = arcs[sp.pred[v]];
    path.push_back(Step{arc.from, arc.to});
    v = arc.from;
  }
  std::reverse(path.begin(), path.end());
  path.insert(path.begin(), e);
  return path;
}

// One extension step: orient some blank edge from outside
// W into W so that O stays admissible.
PartialOrientation extend_into(const SimpleGraph& g, const ParameterList& a, const PartialOrientation& o,
                               VertexSet w) {
  std::optional<Step> current;
  std::size_t crossing = 0;
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!o.is_blank(e) || w.contains(edge.u) == w.contains(edge.v)) continue;
    ++crossing;
    if (!current) current = w.contains(edge.v) ? Step{edge.u, edge.v} : Step{edge.v, edge.u};
  }
  if (!current) throw InternalError("realize_indegree: no blank edge enters the deficient set");

  std::set<Step> visited;
  while (true) {
    if (!visited.insert(*current).second || visited.size() > crossing) {
      throw InternalError("realize_indegree: crossing-edge walk revisited an edge");
    }
    PartialOrientation candidate = with_step(g, o, *current);
    auto witness = bad_cycle_through(g, candidate, a, *current);
    if (!witness) return candidate;
    std::optional<Step> exit;
    for (std::size_t i = 1; i < witness->size(); ++i) {
      const Step& s = (*witness)[i];
      if (w.contains(s.from) && !w.contains(s.to)) {
        exit = s;
        break;
      }
    }
    if (!exit || !o.is_blank(*g.edge_index(exit->from, exit->to))) {
      throw InternalError("realize_indegree: bad cycle leaves the deficient set along an oriented edge");
    }
    current = Step{exit->to, exit->from};
  }
}

}  // namespace

PartialOrientation realize_indegree(const SimpleGraph& g, const ParameterList& a, const PartialOrientation& target) {
  validate_parameters(g, a);
  if (target.edge_count() != static_cast<std::size_t>(g.edge_count())) {
    throw PreconditionError("orientation does not match the graph");
  }
  if (!is_acyclic(g, target)) throw PreconditionError("realize_indegree: target orientation has a directed cycle");
  const ChipConfig goal = indegree(g, target);
  PartialOrientation o(target.edge_count());
  for (int round = 0;; ++round) {
    const ChipConfig current = indegree(g, o);
    VertexSet deficient;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      if (current(v) < goal(v)) deficient.insert(v);
    }
    if (deficient.empty()) break;
    if (round >= target.size()) throw InternalError("realize_indegree: more rounds than target steps");
    for (const Step& s : steps(g, o)) {
      if (deficient.contains(s.from) && !deficient.contains(s.to)) {
        throw InternalError("realize_indegree: an oriented edge leaves the deficient set");
      }
    }
    o = extend_into(g, a, o, deficient);
  }
  return o;
}

// ---------------------------------------------------------------------------
// Parameter files and selectors

ParameterList read_parameters(std::istream& in, const SimpleGraph& g) {
  ParameterList a(g);
  std::map<Step, bool> given;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long i = 0;
    long long j = 0;
    std::string value;
    std::string rest;
    if (!(fields >> i >> j >> value) || (fields >> rest)) {
      throw InputError(InputErrorKind::Malformed, "expected 'i j p/q', got '" + line + "'");
    }
    if (i < 1 || j < 1 || i > g.vertex_count() || j > g.vertex_count() || i == j) {
      throw InputError(InputErrorKind::UnknownParameter, "no edge for parameter line '" + line + "'");
    }
    Step s{static_cast<Vertex>(i), static_cast<Vertex>(j)};
    if (given.count(s)) throw InputError(InputErrorKind::Malformed, "parameter given twice: '" + line + "'");
    a.set(s.from, s.to, parse_rational(value));
    given[s] = true;
  }
  for (const Edge& e : g.edges()) {
    for (Step s : {Step{e.u, e.v}, Step{e.v, e.u}}) {
      if (!given.count(s)) {
        throw InputError(InputErrorKind::MissingParameter,
                         "missing parameter a_" + std::to_string(s.from) + "," + std::to_string(s.to));
      }
    }
  }
  return a;
}

ParameterList read_parameters_file(const std::string& path, const SimpleGraph& g) {
  std::ifstream in(path);
  if (!in) throw InputError(InputErrorKind::Malformed, "cannot open '" + path + "'");
  return read_parameters(in, g);
}

std::string format_parameters(const ParameterList& a) {
  std::string out;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const Edge& edge = a.edges()[e];
    out += std::to_string(edge.u) + " " + std::to_string(edge.v) + " " + to_string(a.forward(e)) + "\n";
    out += std::to_string(edge.v) + " " + std::to_string(edge.u) + " " + to_string(a.backward(e)) + "\n";
  }
  return out;
}

namespace {

std::uint64_t parse_seed(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 19) {
    throw InputError(InputErrorKind::BadPreset, "malformed seed '" + text + "'");
  }
  return std::stoull(text);
}

}  // namespace

ParameterChoice select_parameters(const SimpleGraph& g, const std::string& selector, std::size_t max_cycles) {
  ParameterChoice choice;
  choice.selector = selector;
  auto colon = selector.find(':');
  std::string kind = selector.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : selector.substr(colon + 1);
  if (kind == "semi" && colon == std::string::npos) {
    choice.parameters = semi_parameters(g);
  } else if (kind == "shi" && colon == std::string::npos) {
    choice.parameters = shi_parameters(g);
  } else if (kind == "interval" && colon != std::string::npos) {
    std::vector<long long> lengths;
    std::stringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 15) {
        throw InputError(InputErrorKind::BadPreset, "malformed interval length '" + item + "'");
      }
      lengths.push_back(std::stoll(item));
    }
    choice.parameters = interval_parameters(g, lengths);
  } else if (kind == "generic" && colon != std::string::npos) {
    choice.seed = parse_seed(arg);
    choice.parameters = sample_generic(g, *choice.seed, max_cycles);
  } else if (kind == "file" && colon != std::string::npos) {
    choice.parameters = read_parameters_file(arg, g);
  } else {
    throw InputError(InputErrorKind::BadPreset, "unknown parameter selector '" + selector +
                                                    "' (expected semi, shi, interval:..., generic:SEED, file:PATH)");
  }
  validate_parameters(g, choice.parameters);
  return choice;
}

}  // namespace bigraph
