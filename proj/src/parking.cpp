#include "bigraph/parking.hpp"

#include <algorithm>

namespace bigraph {

namespace {

void check_length(const SinkedGraph& g, const ChipConfig& c) {
  if (c.size() != g.base().vertex_count()) {
    throw PreconditionError("chip configuration has " + std::to_string(c.size()) + " entries, graph has " +
                            std::to_string(g.base().vertex_count()) + " vertices");
  }
}

std::vector<int> sinked_degrees(const SinkedGraph& g) {
  std::vector<int> deg;
  for (Vertex v = 1; v <= g.base().vertex_count(); ++v) deg.push_back(g.degree(v));
  return deg;
}

}  // namespace

bool is_parking(const SinkedGraph& g, const ChipConfig& c) {
  check_length(g, c);
  const int n = g.base().vertex_count();
  if (n > kMaxSubsetVertices) {
    throw CapError("is_parking enumerates 2^n subsets; n = " + std::to_string(n) + " exceeds " +
                   std::to_string(kMaxSubsetVertices));
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet w(mask << 1);
    bool witnessed = false;
    for (Vertex v = 1; v <= n && !witnessed; ++v) {
      if (w.contains(v) && c(v) >= 0 && c(v) < cut_degree(g, v, w)) witnessed = true;
    }
    if (!witnessed) return false;
  }
  return true;
}

bool burning_check(const SinkedGraph& g, const ChipConfig& c) {
  check_length(g, c);
  const SimpleGraph& base = g.base();
  const int n = base.vertex_count();
  std::vector<bool> burnt(static_cast<std::size_t>(n) + 1, false);
  // Every vertex starts with the sink edge already burning.
  std::vector<int> fire(static_cast<std::size_t>(n) + 1, 1);
  std::vector<Vertex> ready;
  auto consider = [&](Vertex v) {
    if (!burnt[v] && c(v) >= 0 && c(v) < fire[v]) {
      burnt[v] = true;
      ready.push_back(v);
    }
  };
  for (Vertex v = 1; v <= n; ++v) consider(v);
  int count = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++count;
    for (Vertex w : base.neighbors(v)) {
      ++fire[w];
      consider(w);
    }
  }
  return count == n;
}

ChipSet enumerate_parking(const SinkedGraph& g, ParkingTest test, std::uint64_t max_box) {
  const int n = g.base().vertex_count();
  const std::vector<int> deg = sinked_degrees(g);
  std::uint64_t box = 1;
  for (int d : deg) {
    box *= static_cast<std::uint64_t>(d);
    if (box > max_box) throw CapError("parking box exceeds " + std::to_string(max_box) + " configurations");
  }
  ChipSet out;
  ChipConfig c(n);
  while (true) {
    bool parks = test == ParkingTest::Burning ? burning_check(g, c) : is_parking(g, c);
    if (parks) out.insert(c);
    int i = 1;
    while (i <= n && c(i) == deg[static_cast<std::size_t>(i - 1)] - 1) c(i++) = 0;
    if (i > n) break;
    ++c(i);
  }
  return out;
}

HVector h_vector(const SinkedGraph& g, std::uint64_t max_box) {
  HVector h(static_cast<std::size_t>(g.genus()) + 1, 0);
  for (const ChipConfig& c : enumerate_parking(g, ParkingTest::Burning, max_box)) {
    ++h[static_cast<std::size_t>(c.degree())];
  }
  return h;
}

ChipSet acyclic_indeg_set(const SimpleGraph& g, int max_edges) {
  orientation_count(g, max_edges);
  ChipSet out;
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  do {
    if (is_acyclic(g, o)) out.insert(indegree(g, o));
  } while (o.advance());
  return out;
}

LabelReport pak_stanley_report(const SimpleGraph& g, const ParameterList& a, int max_edges) {
  orientation_count(g, max_edges);
  validate_parameters(g, a);
  LabelReport report;
  Classifier classifier(g, a);
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  do {
    if (classifier(o) != Admissibility::Admissible) continue;
    ChipConfig label = indegree(g, o);
    report.labels.insert(label);
    ++report.multiplicity[label];
  } while (o.advance());
  return report;
}

ChipSet pak_stanley_labels(const SimpleGraph& g, const ParameterList& a, int max_edges) {
  return pak_stanley_report(g, a, max_edges).labels;
}

ChipSet parking_wrt_vertex(const SimpleGraph& g, Vertex i, int max_edges) {
  if (i < 1 || i > g.vertex_count()) {
    throw InputError(InputErrorKind::VertexOutOfRange, "vertex " + std::to_string(i) + " is not in the graph");
  }
  orientation_count(g, max_edges);
  ChipSet out;
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  do {
    if (!is_acyclic(g, o)) continue;
    ChipConfig c = indegree(g, o);
    bool keep = true;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      c(v) -= 1;
      if (v == i ? c(v) != -1 : c(v) < 0) keep = false;
    }
    if (keep) out.insert(c);
  } while (o.advance());
  return out;
}

ChipSet maximal_elements(const ChipSet& set) {
  ChipSet out;
  for (const ChipConfig& c : set) {
    bool dominated = std::any_of(set.begin(), set.end(), [&](const ChipConfig& d) {
      return d != c && c.dominated_by(d);
    });
    if (!dominated) out.insert(c);
  }
  return out;
}

BctReport bct_maximal(const SimpleGraph& g, int max_edges) {
  orientation_count(g, max_edges);
  const SinkedGraph gs = sink_extension(g);
  const int n = g.vertex_count();
  const int m = gs.edge_count();
  if (m > 30) throw CapError("bct_maximal enumerates 2^|E•| orientations; |E•| = " + std::to_string(m));

  BctReport report;
  report.maximal = maximal_elements(enumerate_parking(gs));

  // All total orientations of G•; bit e set means edge e points from its
  // larger endpoint to its smaller one.
  ChipSet image;
  bool injective = true;
  const auto edges = gs.edges();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> in(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n) + 1);
    for (int e = 0; e < m; ++e) {
      Vertex a = edges[e].u;
      Vertex b = edges[e].v;
      if ((mask >> e) & 1U) std::swap(a, b);
      out[a].push_back(b);
      ++in[b];
    }
    bool unique_source = in[kSink] == 0;
    for (Vertex v = 1; v <= n && unique_source; ++v) unique_source = in[v] > 0;
    if (!unique_source) continue;
    // Acyclic iff Kahn's algorithm removes every vertex.
    std::vector<int> remaining = in;
    std::vector<Vertex> ready{kSink};
    int removed = 0;
    while (!ready.empty()) {
      Vertex v = ready.back();
      ready.pop_back();
      ++removed;
      for (Vertex w : out[v]) {
        if (--remaining[w] == 0) ready.push_back(w);
      }
    }
    if (removed != n + 1) continue;
    ++report.orientations;
    ChipConfig c(n);
    for (Vertex v = 1; v <= n; ++v) c(v) = in[v] - 1;
    if (!image.insert(c).second) injective = false;
  }
  report.bijective = injective && image == report.maximal;
  return report;
}

}  // namespace bigraph
