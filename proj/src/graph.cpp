#include "bigraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace bigraph {

std::optional<std::size_t> SimpleGraph::edge_index(Vertex a, Vertex b) const {
  Edge key{std::min(a, b), std::max(a, b)};
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == key) return i;
  }
  return std::nullopt;
}

SimpleGraph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError(InputErrorKind::VertexOutOfRange,
                     "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
  SimpleGraph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<std::size_t>(n) + 1, {});
  std::set<Edge> seen;
  for (auto [a, b] : edge_list) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw InputError(InputErrorKind::VertexOutOfRange, "edge {" + std::to_string(a) + "," +
                                                             std::to_string(b) + "} has an index outside 1.." +
                                                             std::to_string(n));
    }
    if (a == b) {
      throw InputError(InputErrorKind::Loop, "loop at vertex " + std::to_string(a));
    }
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw InputError(InputErrorKind::DuplicateEdge,
                       "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  return g;
}

SimpleGraph build_graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

SinkedGraph::SinkedGraph(SimpleGraph base) : base_(std::move(base)) {
  edges_.assign(base_.edges().begin(), base_.edges().end());
  for (Vertex i = 1; i <= base_.vertex_count(); ++i) edges_.push_back({kSink, i});
}

SinkedGraph sink_extension(const SimpleGraph& g) { return SinkedGraph(g); }

Multigraph to_multigraph(const SimpleGraph& g) {
  Multigraph m{g.vertex_count(), {}};
  for (const Edge& e : g.edges()) m.edges.push_back({e.u - 1, e.v - 1});
  return m;
}

Multigraph to_multigraph(const SinkedGraph& g) {
  Multigraph m{g.vertex_count(), {}};
  m.edges.assign(g.edges().begin(), g.edges().end());
  return m;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

int component_count(const Multigraph& g) {
  DisjointSets sets(g.n);
  int components = g.n;
  for (const Edge& e : g.edges) {
    if (sets.unite(e.u, e.v)) --components;
  }
  return components;
}

bool is_connected(const Multigraph& g) { return component_count(g) <= 1; }
bool is_connected(const SimpleGraph& g) { return is_connected(to_multigraph(g)); }

int ChipConfig::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool ChipConfig::dominated_by(const ChipConfig& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::string to_string(const ChipConfig& c) {
  std::string out;
  for (int x : c.entries()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(x);
  }
  return out;
}

ChipConfig parse_chip_config(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> entries;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InputError(InputErrorKind::Malformed, "malformed chip count '" + token + "'");
    }
  }
  return ChipConfig(std::move(entries));
}

int cut_degree(const SinkedGraph& g, Vertex v, VertexSet w) {
  if (v < 1 || v > g.base().vertex_count() || !w.contains(v)) {
    throw PreconditionError("cut_degree: vertex " + std::to_string(v) + " is not in W");
  }
  int count = 1;  // sink edge
  for (Vertex u : g.base().neighbors(v)) {
    if (!w.contains(u)) ++count;
  }
  return count;
}

namespace {

void extend_cycles(const SimpleGraph& g, std::vector<Vertex>& path, std::vector<bool>& on_path,
                   std::vector<std::vector<Vertex>>& out, std::size_t max_cycles) {
  const Vertex start = path.front();
  const Vertex last = path.back();
  for (Vertex next : g.neighbors(last)) {
    if (next == start && path.size() >= 3 && path[1] < path.back()) {
      if (out.size() == max_cycles) {
        throw CapError("simple cycle count exceeds cap " + std::to_string(max_cycles));
      }
      out.push_back(path);
    }
    if (next <= start || on_path[next]) continue;
    on_path[next] = true;
    path.push_back(next);
    extend_cycles(g, path, on_path, out, max_cycles);
    path.pop_back();
    on_path[next] = false;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> simple_cycles(const SimpleGraph& g, std::size_t max_cycles) {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<bool> on_path(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (Vertex s = 1; s <= g.vertex_count(); ++s) {
    std::vector<Vertex> path{s};
    on_path[s] = true;
    extend_cycles(g, path, on_path, cycles, max_cycles);
    on_path[s] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

IntegerMatrix laplacian(const Multigraph& g) {
  IntegerMatrix l = IntegerMatrix::Zero(g.n, g.n);
  for (const Edge& e : g.edges) {
    if (e.u == e.v) continue;
    l(e.u, e.u) += 1;
    l(e.v, e.v) += 1;
    l(e.u, e.v) -= 1;
    l(e.v, e.u) -= 1;
  }
  return l;
}

Integer spanning_tree_count(const Multigraph& g) {
  if (g.n <= 1) return Integer(1);
  IntegerMatrix l = laplacian(g);
  return bareiss_determinant(l.bottomRightCorner(g.n - 1, g.n - 1));
}

Integer spanning_tree_count(const SinkedGraph& g) { return spanning_tree_count(to_multigraph(g)); }
Integer spanning_tree_count(const SimpleGraph& g) { return spanning_tree_count(to_multigraph(g)); }

SimpleGraph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  }
  return build_graph(n, edges);
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw PreconditionError("cycle_graph needs n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return build_graph(n, edges);
}

SimpleGraph path_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

SimpleGraph edgeless_graph(int n) { return build_graph(n, std::span<const std::pair<Vertex, Vertex>>{}); }

Multigraph dipole(int k) {
  Multigraph m{2, {}};
  for (int i = 0; i < k; ++i) m.edges.push_back({0, 1});
  return m;
}

namespace {

// Non-empty, non-comment lines.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return lines;
}

std::pair<int, int> parse_pair(const std::string& line) {
  std::istringstream in(line);
  long long a = 0;
  long long b = 0;
  std::string rest;
  if (!(in >> a >> b) || (in >> rest)) {
    throw InputError(InputErrorKind::Malformed, "expected two integers, got '" + line + "'");
  }
  if (a < -1000000 || a > 1000000 || b < -1000000 || b > 1000000) {
    throw InputError(InputErrorKind::VertexOutOfRange, "integer out of range in '" + line + "'");
  }
  return {static_cast<int>(a), static_cast<int>(b)};
}

struct RawGraph {
  bool multigraph = false;
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

RawGraph read_raw(std::istream& in) {
  std::vector<std::string> lines = content_lines(in);
  RawGraph raw;
  std::size_t at = 0;
  if (at < lines.size() && lines[at] == "multigraph") {
    raw.multigraph = true;
    ++at;
  }
  if (at >= lines.size()) throw InputError(InputErrorKind::Malformed, "missing 'n m' header line");
  auto [n, m] = parse_pair(lines[at++]);
  if (n < 0 || m < 0) throw InputError(InputErrorKind::Malformed, "negative count in header");
  raw.n = n;
  if (lines.size() - at != static_cast<std::size_t>(m)) {
    throw InputError(InputErrorKind::Malformed, "header announces " + std::to_string(m) + " edges, found " +
                                                    std::to_string(lines.size() - at));
  }
  for (; at < lines.size(); ++at) raw.edges.push_back(parse_pair(lines[at]));
  return raw;
}

}  // namespace

SimpleGraph read_graph(std::istream& in) {
  RawGraph raw = read_raw(in);
  if (raw.multigraph) {
    throw InputError(InputErrorKind::Malformed, "expected a simple graph, found a multigraph header");
  }
  return build_graph(raw.n, raw.edges);
}

Multigraph read_multigraph(std::istream& in) {
  RawGraph raw = read_raw(in);
  Multigraph m{raw.n, {}};
  if (raw.n > kMaxVertices) throw InputError(InputErrorKind::VertexOutOfRange, "too many vertices");
  for (auto [a, b] : raw.edges) {
    if (a < 1 || a > raw.n || b < 1 || b > raw.n) {
      throw InputError(InputErrorKind::VertexOutOfRange, "multigraph edge index outside 1.." + std::to_string(raw.n));
    }
    m.edges.push_back({std::min(a, b) - 1, std::max(a, b) - 1});
  }
  return m;
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(InputErrorKind::Malformed, "cannot open '" + path + "'");
  return in;
}

}  // namespace

SimpleGraph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

Multigraph read_multigraph_file(const std::string& path) {
  auto in = open_input(path);
  return read_multigraph(in);
}

std::string format_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace bigraph
