#include "bigraph/geometry.hpp"

#include <array>
#include <map>
#include <sstream>
#include <tuple>

namespace bigraph {

namespace {

// Plane coordinates X = x_1 - x_3, Y = x_2 - x_3.
struct PlanePoint {
  Rational x;
  Rational y;
  bool operator==(const PlanePoint&) const = default;
  bool operator<(const PlanePoint& other) const { return std::tie(x, y) < std::tie(other.x, other.y); }
};

// alpha X + beta Y = c
struct Line {
  int alpha = 0;
  int beta = 0;
  Rational c;
  std::string equation;
};

// Coefficients of x_k - x_3 in (X, Y).
std::array<int, 2> plane_coefficients(Vertex k) {
  if (k == 1) return {1, 0};
  if (k == 2) return {0, 1};
  return {0, 0};
}

Line hyperplane(Vertex i, Vertex j, const Rational& value) {
  auto ci = plane_coefficients(i);
  auto cj = plane_coefficients(j);
  return {ci[0] - cj[0], ci[1] - cj[1], value,
          "x" + std::to_string(i) + " - x" + std::to_string(j) + " = " + to_string(value)};
}

std::optional<PlanePoint> intersect(const Line& p, const Line& q) {
  int det = p.alpha * q.beta - p.beta * q.alpha;
  if (det == 0) return std::nullopt;
  return PlanePoint{(p.c * q.beta - q.c * p.beta) / det, (p.alpha * q.c - q.alpha * p.c) / det};
}

/// Sign of every hyperplane at a point; nothing when the point lies on one.
std::optional<PartialOrientation> locate(const SimpleGraph& g, const ParameterList& a, const PlanePoint& p) {
  const std::array<Rational, 4> x{Rational(0), p.x, p.y, Rational(0)};
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t e = 0; e < o.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    Rational forward_gap = x[edge.v] - x[edge.u] - a.backward(e);  // > 0: step (u, v)
    Rational backward_gap = x[edge.u] - x[edge.v] - a.forward(e);  // > 0: step (v, u)
    if (forward_gap == 0 || backward_gap == 0) return std::nullopt;
    if (forward_gap > 0) {
      o.set(e, EdgeState::Forward);
    } else if (backward_gap > 0) {
      o.set(e, EdgeState::Backward);
    }
  }
  return o;
}

std::string label_text(const ChipConfig& c) {
  bool wide = std::any_of(c.entries().begin(), c.entries().end(), [](int v) { return v > 9; });
  std::string out;
  for (int v : c.entries()) {
    if (wide && !out.empty()) out += " ";
    out += std::to_string(v);
  }
  return out;
}

constexpr int kCanvas = 640;
constexpr int kPadding = 40;
constexpr std::size_t kMaxSamples = 250000;
// sqrt(3)/2 to seven places keeps the whole layout in rationals.
const Rational kSinSixty(8660254, 10000000);

class Screen {
 public:
  Screen(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
    Rational u_min = 0;
    Rational u_max = 0;
    Rational w_min = 0;
    Rational w_max = 0;
    bool first = true;
    for (const Rational& x : {x0, x1}) {
      for (const Rational& y : {y0, y1}) {
        Rational u = skew_u(x, y);
        Rational w = skew_w(y);
        if (first || u < u_min) u_min = u;
        if (first || u > u_max) u_max = u;
        if (first || w < w_min) w_min = w;
        if (first || w > w_max) w_max = w;
        first = false;
      }
    }
    const Rational room(kCanvas - 2 * kPadding);
    scale_ = std::min(room / (u_max - u_min), room / (w_max - w_min));
    cx_ = Rational(kCanvas, 2) - scale_ * (u_min + u_max) / 2;
    cy_ = Rational(kCanvas, 2) + scale_ * (w_min + w_max) / 2;
  }

  std::string x(const PlanePoint& p) const { return to_decimal(cx_ + scale_ * skew_u(p.x, p.y), 2); }
  std::string y(const PlanePoint& p) const { return to_decimal(cy_ - scale_ * skew_w(p.y), 2); }

 private:
  static Rational skew_u(const Rational& x, const Rational& y) { return x - y / 2; }
  static Rational skew_w(const Rational& y) { return y * kSinSixty; }

  Rational scale_;
  Rational cx_;
  Rational cy_;
};

}  // namespace

std::string render_svg(const SimpleGraph& g, const ParameterList& a) {
  if (g.vertex_count() != 3) {
    throw PreconditionError("render_svg draws rank-2 arrangements only; the graph has " +
                            std::to_string(g.vertex_count()) + " vertices, expected 3");
  }
  if (!is_connected(g)) throw PreconditionError("render_svg needs a connected graph");
  validate_parameters(g, a);

  std::vector<Line> lines;
  Rational min_gap = -1;
  for (std::size_t e = 0; e < static_cast<std::size_t>(g.edge_count()); ++e) {
    const Edge& edge = g.edge(e);
    lines.push_back(hyperplane(edge.u, edge.v, a.forward(e)));
    lines.push_back(hyperplane(edge.v, edge.u, a.backward(e)));
    Rational gap = a.forward(e) + a.backward(e);
    if (min_gap < 0 || gap < min_gap) min_gap = gap;
  }

  // Bounding box: every crossing point plus a margin.
  std::vector<PlanePoint> crossings;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (auto p = intersect(lines[i], lines[j])) crossings.push_back(*p);
    }
  }
  Rational x0 = crossings.front().x;
  Rational x1 = x0;
  Rational y0 = crossings.front().y;
  Rational y1 = y0;
  for (const PlanePoint& p : crossings) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const Rational margin = std::max(x1 - x0, y1 - y0) / 2 + 1;
  x0 -= margin;
  x1 += margin;
  y0 -= margin;
  y1 += margin;

  // Grid samples per region.
  Rational pitch = min_gap / 4;
  auto samples_along = [&](const Rational& length) {
    return static_cast<std::size_t>(floor(length / pitch).convert_to<long long>()) + 1;
  };
  while (samples_along(x1 - x0) * samples_along(y1 - y0) > kMaxSamples) pitch *= 2;
  std::map<PartialOrientation, std::pair<PlanePoint, std::size_t>> sums;
  for (std::size_t p = 0, np = samples_along(x1 - x0); p < np; ++p) {
    for (std::size_t q = 0, nq = samples_along(y1 - y0); q < nq; ++q) {
      PlanePoint point{x0 + pitch * static_cast<long long>(p), y0 + pitch * static_cast<long long>(q)};
      auto o = locate(g, a, point);
      if (!o) continue;
      auto& [sum, count] = sums[*o];
      sum.x += point.x;
      sum.y += point.y;
      ++count;
    }
  }

  const Screen screen(x0, x1, y0, y1);
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n"
      << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";

  for (const Line& line : lines) {
    std::vector<PlanePoint> ends;
    if (line.beta != 0) {
      for (const Rational& x : {x0, x1}) {
        Rational y = (line.c - line.alpha * x) / line.beta;
        if (y0 <= y && y <= y1) ends.push_back({x, y});
      }
    }
    if (line.alpha != 0) {
      for (const Rational& y : {y0, y1}) {
        Rational x = (line.c - line.beta * y) / line.alpha;
        if (x0 <= x && x <= x1) ends.push_back({x, y});
      }
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    if (ends.size() < 2) continue;
    const PlanePoint& p = ends.front();
    const PlanePoint& q = ends.back();
    svg << "<line class=\"hyperplane\" x1=\"" << screen.x(p) << "\" y1=\"" << screen.y(p) << "\" x2=\""
        << screen.x(q) << "\" y2=\"" << screen.y(q) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg << "<text class=\"equation\" x=\"" << screen.x(q) << "\" y=\"" << screen.y(q)
        << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"gray\">" << line.equation << "</text>\n";
  }

  const Classifier classifier(g, a);
  PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
  do {
    if (classifier(o) != Admissibility::Admissible) continue;
    PlanePoint at;
    if (auto it = sums.find(o); it != sums.end()) {
      const auto& [sum, count] = it->second;
      at = {sum.x / static_cast<long long>(count), sum.y / static_cast<long long>(count)};
    } else {
      // Too thin for the grid: fall back to an interior witness.
      auto x = strict_feasible(region_system(g, o, a));
      if (!x) throw InternalError("render_svg: admissible orientation without a region point");
      at = {(*x)(0) - (*x)(2), (*x)(1) - (*x)(2)};
    }
    svg << "<text class=\"region\" x=\"" << screen.x(at) << "\" y=\"" << screen.y(at)
        << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
        << label_text(indegree(g, o)) << "</text>\n";
  } while (o.advance());
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace bigraph
