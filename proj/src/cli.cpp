#include "bigraph/cli.hpp"

#include "bigraph/geometry.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/orientation.hpp"
#include "bigraph/parking.hpp"
#include "bigraph/polynomial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace bigraph::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string dual_path;
  std::string params = "";
  std::string probability;
  std::string format = "text";
  std::string out_path;
  int max_edges = kDefaultMaxEdges;
  std::size_t max_cycles = kDefaultMaxCycles;
};

struct Report {
  json data;
  std::string text;
  int code = kOk;
};

json integer_json(const Integer& value) {
  if (abs(value) < Integer(std::int64_t{1} << 62)) return value.convert_to<std::int64_t>();
  return to_string(value);
}

json chip_json(const ChipConfig& c) { return json(std::vector<int>(c.entries().begin(), c.entries().end())); }

json chip_set_json(const ChipSet& set) {
  json out = json::array();
  for (const ChipConfig& c : set) out.push_back(chip_json(c));
  return out;
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::uint64_t v : values) out += (out.empty() ? "" : ",") + std::to_string(v);
  return "(" + out + ")";
}

json parameters_json(const ParameterChoice& choice) {
  json values = json::object();
  const ParameterList& a = choice.parameters;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const Edge& edge = a.edges()[e];
    values[std::to_string(edge.u) + " " + std::to_string(edge.v)] = to_string(a.forward(e));
    values[std::to_string(edge.v) + " " + std::to_string(edge.u)] = to_string(a.backward(e));
  }
  json out{{"selector", choice.selector}, {"values", values}};
  out["seed"] = choice.seed ? json(*choice.seed) : json(nullptr);
  return out;
}

std::string parameters_text(const ParameterChoice& choice) {
  std::string out = "params " + choice.selector;
  if (choice.seed) out += " (seed " + std::to_string(*choice.seed) + ")";
  out += ":";
  const ParameterList& a = choice.parameters;
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    const Edge& edge = a.edges()[e];
    out += " a" + std::to_string(edge.u) + std::to_string(edge.v) + "=" + to_string(a.forward(e));
    out += " a" + std::to_string(edge.v) + std::to_string(edge.u) + "=" + to_string(a.backward(e));
  }
  return out + "\n";
}

json poly_json(const BiPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[term_key(e.first, e.second)] = integer_json(c);
  return out;
}

bool is_multigraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(InputErrorKind::Malformed, "cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 10, "multigraph") == 0;
  }
  return false;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(InputErrorKind::MissingParameter, std::string("missing ") + flag);
}

SimpleGraph load_graph(const RunConfig& cfg) {
  require(cfg.graph_path, "--graph");
  return read_graph_file(cfg.graph_path);
}

ParameterChoice load_parameters(const RunConfig& cfg, const SimpleGraph& g) {
  require(cfg.params, "--params");
  return select_parameters(g, cfg.params, cfg.max_cycles);
}

json graph_json(const SimpleGraph& g) { return {{"n", g.vertex_count()}, {"m", g.edge_count()}}; }

// ---------------------------------------------------------------------------

Report census_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  ParameterChoice choice = load_parameters(cfg, g);
  RegionCensus c = census(g, choice.parameters, cfg.max_edges);
  Report r;
  r.data = {{"command", "census"}, {"graph", graph_json(g)}, {"params", parameters_json(choice)},
            {"r", c.regions}, {"b", c.bounded}, {"almost", c.almost}, {"far", c.far}, {"p", c.by_size}};
  r.text = parameters_text(choice) + "r=" + std::to_string(c.regions) + " b=" + std::to_string(c.bounded) +
           " almost=" + std::to_string(c.almost) + " far=" + std::to_string(c.far) + " p=" + join(c.by_size) + "\n";
  return r;
}

Report labels_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  ParameterChoice choice = load_parameters(cfg, g);
  LabelReport labels = pak_stanley_report(g, choice.parameters, cfg.max_edges);
  auto bfs = pak_stanley_bfs(g, choice.parameters, cfg.max_edges);
  std::uint64_t regions = 0;
  for (const auto& [label, count] : labels.multiplicity) regions += count;
  bool agree = bfs.size() == regions;
  for (const auto& [o, label] : bfs) agree = agree && label == indegree(g, o);

  Report r;
  json multiset = json::array();
  std::string text = parameters_text(choice);
  for (const auto& [label, count] : labels.multiplicity) {
    multiset.push_back({{"label", chip_json(label)}, {"regions", count}});
    text += to_string(label) + (count > 1 ? "  x" + std::to_string(count) : "") + "\n";
  }
  r.data = {{"command", "labels"}, {"graph", graph_json(g)}, {"params", parameters_json(choice)},
            {"regions", regions}, {"distinct", labels.labels.size()}, {"labels", multiset},
            {"bfs_regions", bfs.size()}, {"bfs_agrees", agree}};
  text += std::to_string(labels.labels.size()) + " distinct labels over " + std::to_string(regions) +
          " regions; breadth-first labelling " + (agree ? "agrees" : "DISAGREES") + " (" +
          std::to_string(bfs.size()) + " regions visited)\n";
  r.text = text;
  r.code = agree ? kOk : kVerificationFailed;
  return r;
}

Report verify_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  ParameterChoice choice = load_parameters(cfg, g);
  const ParameterList& a = choice.parameters;
  const SinkedGraph gs = sink_extension(g);

  std::vector<std::pair<std::string, bool>> checks;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const InternalError&) {
      ok = false;
    }
    checks.emplace_back(name, ok);
  };

  const RegionCensus c = census(g, a, cfg.max_edges);
  check("admissible <=> strictly feasible region", [&] {
    Classifier classifier(g, a);
    PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
    do {
      bool admissible = classifier(o) == Admissibility::Admissible;
      if (admissible != strict_feasible(region_system(g, o, a)).has_value()) return false;
    } while (o.advance());
    return true;
  });
  const ChipSet parking = enumerate_parking(gs);
  const ChipSet labels = pak_stanley_labels(g, a, cfg.max_edges);
  check("parking functions = acyclic indegrees", [&] { return parking == acyclic_indeg_set(g, cfg.max_edges); });
  check("parking functions = spanning trees of G•", [&] {
    return Integer(parking.size()) == spanning_tree_count(gs);
  });
  check("burning = definition", [&] { return parking == enumerate_parking(gs, ParkingTest::Definition); });
  check("breadth-first labels = indegrees", [&] {
    auto bfs = pak_stanley_bfs(g, a, cfg.max_edges);
    if (bfs.size() != c.regions) return false;
    for (const auto& [o, label] : bfs) {
      if (label != indegree(g, o)) return false;
    }
    return true;
  });
  check("every parking function is realized", [&] {
    PartialOrientation o(static_cast<std::size_t>(g.edge_count()));
    std::size_t realized = 0;
    ChipSet seen;
    do {
      if (!is_acyclic(g, o) || !seen.insert(indegree(g, o)).second) continue;
      PartialOrientation out = realize_indegree(g, a, o);
      if (classify(g, out, a) != Admissibility::Admissible || indegree(g, out) != indegree(g, o)) return false;
      ++realized;
    } while (o.advance());
    return realized == parking.size();
  });
  check("h(G•) <= p(G,A)", [&] {
    HVector h = h_vector(gs);
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (h[i] > c.by_size[i]) return false;
    }
    return true;
  });
  check("r(A) <= r(GEN), with equality for certified generic A", [&] {
    RegionCounts generic = generic_region_counts(g, std::max(cfg.max_edges, kDefaultTutteEdges));
    if (Integer(c.regions) > generic.regions) return false;
    if (is_certified_generic(g, a, cfg.max_cycles)) {
      return Integer(c.regions) == generic.regions && Integer(c.bounded) == generic.bounded;
    }
    return true;
  });
  check("zero-cycle bounds bracket r(GEN) - r(A)", [&] {
    RegionBounds bounds = region_count_bounds(g, a, cfg.max_edges, cfg.max_cycles);
    Rational gap(generic_region_counts(g, std::max(cfg.max_edges, kDefaultTutteEdges)).regions - Integer(c.regions));
    return bounds.lower <= gap && gap <= bounds.upper;
  });
  const bool labels_ok = labels == parking;
  checks.emplace_back("Pak-Stanley labels = parking functions", labels_ok);

  Report r;
  bool all = true;
  json list = json::array();
  std::string text = parameters_text(choice);
  for (const auto& [name, ok] : checks) {
    all = all && ok;
    list.push_back({{"check", name}, {"pass", ok}});
    text += std::string(ok ? "PASS " : "FAIL ") + name + "\n";
  }
  text += labels_ok ? "labels = parking functions (" + std::to_string(parking.size()) + ")\n"
                    : "labels != parking functions (" + std::to_string(labels.size()) + " labels, " +
                          std::to_string(parking.size()) + " parking functions)\n";
  r.data = {{"command", "verify"},          {"graph", graph_json(g)}, {"params", parameters_json(choice)},
            {"checks", list},               {"pass", all},            {"parking_functions", parking.size()},
            {"regions", c.regions}};
  r.text = text;
  r.code = all ? kOk : kVerificationFailed;
  return r;
}

Report parking_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  SinkedGraph gs = sink_extension(g);
  ChipSet parking = enumerate_parking(gs);
  HVector h = h_vector(gs);
  Report r;
  r.data = {{"command", "parking"}, {"graph", graph_json(g)}, {"count", parking.size()},
            {"parking_functions", chip_set_json(parking)}, {"h", h}};
  for (const ChipConfig& c : parking) r.text += to_string(c) + "\n";
  r.text += std::to_string(parking.size()) + " parking functions, h=" + join(h) + "\n";
  return r;
}

Report tutte_command(const RunConfig& cfg) {
  require(cfg.graph_path, "--graph");
  Multigraph m = is_multigraph_file(cfg.graph_path) ? read_multigraph_file(cfg.graph_path)
                                                    : to_multigraph(read_graph_file(cfg.graph_path));
  BiPoly t = tutte(m, std::max(cfg.max_edges, kDefaultTutteEdges));
  Report r;
  r.data = {{"command", "tutte"}, {"n", m.n}, {"m", m.edge_count()}, {"tutte", poly_json(t)},
            {"text", to_string(t)}};
  r.text = "T(x,y) = " + to_string(t) + "\n";
  return r;
}

Report charpoly_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  const int cap = std::max(cfg.max_edges, kDefaultTutteEdges);
  UniPoly chi = char_poly_generic(g, cap);
  RegionCounts counts = generic_region_counts(g, cap);
  json coefficients = json::array();
  for (const Rational& c : chi.coefficients()) coefficients.push_back(to_string(c));
  Report r;
  r.data = {{"command", "charpoly"}, {"graph", graph_json(g)}, {"coefficients", coefficients},
            {"text", to_string(chi)}, {"r", integer_json(counts.regions)}, {"b", integer_json(counts.bounded)}};
  r.text = "chi(t) = " + to_string(chi) + "\nr(GEN)=" + to_string(counts.regions) +
           " b(GEN)=" + to_string(counts.bounded) + "\n";
  return r;
}

Report bounds_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  ParameterChoice choice = load_parameters(cfg, g);
  RegionBounds bounds = region_count_bounds(g, choice.parameters, cfg.max_edges, cfg.max_cycles);
  RegionCensus c = census(g, choice.parameters, cfg.max_edges);
  Integer generic = generic_region_counts(g, std::max(cfg.max_edges, kDefaultTutteEdges)).regions;
  Integer gap = generic - Integer(c.regions);
  bool inside = bounds.lower <= Rational(gap) && Rational(gap) <= bounds.upper;
  Report r;
  r.data = {{"command", "bounds"},  {"graph", graph_json(g)}, {"params", parameters_json(choice)},
            {"lower", to_string(bounds.lower)}, {"upper", to_string(bounds.upper)},
            {"almost", bounds.almost}, {"r", c.regions}, {"r_generic", integer_json(generic)},
            {"gap", integer_json(gap)}, {"bracketed", inside}};
  r.text = parameters_text(choice) + "lower=" + to_string(bounds.lower) + " upper=" + to_string(bounds.upper) +
           " almost=" + std::to_string(bounds.almost) + "\nr(A)=" + std::to_string(c.regions) +
           " r(GEN)=" + to_string(generic) + " gap=" + to_string(gap) + (inside ? " (bracketed)" : " (NOT bracketed)") +
           "\n";
  r.code = inside ? kOk : kVerificationFailed;
  return r;
}

Report reliability_command(const RunConfig& cfg) {
  require(cfg.graph_path, "--graph");
  Report r;
  if (!cfg.dual_path.empty()) {
    SimpleGraph g = read_graph_file(cfg.graph_path);
    Multigraph dual = is_multigraph_file(cfg.dual_path) ? read_multigraph_file(cfg.dual_path)
                                                        : to_multigraph(read_graph_file(cfg.dual_path));
    DualReport d = dual_check(g, dual);
    r.data = {{"command", "reliability"}, {"dual_probability", to_string(d.dual_probability)},
              {"region_fraction", to_string(d.region_fraction)}, {"agree", d.agree}};
    r.text = "R_dual(2/3) = " + to_string(d.dual_probability) + "\nr(GEN)/3^|E| = " +
             to_string(d.region_fraction) + "\n" + (d.agree ? "agree" : "DISAGREE") + "\n";
    r.code = d.agree ? kOk : kVerificationFailed;
    return r;
  }
  require(cfg.probability, "--dual or --p");
  Multigraph m = is_multigraph_file(cfg.graph_path) ? read_multigraph_file(cfg.graph_path)
                                                    : to_multigraph(read_graph_file(cfg.graph_path));
  Rational p = parse_rational(cfg.probability);
  Rational value = reliability(m, p);
  r.data = {{"command", "reliability"}, {"p", to_string(p)}, {"reliability", to_string(value)}};
  r.text = "R(" + to_string(p) + ") = " + to_string(value) + "\n";
  return r;
}

Report plot_command(const RunConfig& cfg) {
  SimpleGraph g = load_graph(cfg);
  ParameterChoice choice = load_parameters(cfg, g);
  Report r;
  r.text = render_svg(g, choice.parameters);
  r.data = {{"command", "plot"}, {"svg", r.text}};
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Bigraphical hyperplane arrangements: regions, labels, parking functions"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"census", "classify every partial orientation and count regions"},
      {"labels", "Pak-Stanley labels, by indegree and by breadth-first search"},
      {"verify", "run every identity on one graph and parameter list"},
      {"parking", "parking functions of the sink extension and the h-vector"},
      {"tutte", "Tutte polynomial"},
      {"charpoly", "characteristic polynomial of the generic arrangement"},
      {"bounds", "zero-cycle bounds on r(GEN) - r(A)"},
      {"reliability", "dual reliability check, or plain reliability with --p"},
      {"plot", "SVG drawing of a 3-vertex arrangement"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", cfg.graph_path, "graph file");
    sub->add_option("--params", cfg.params, "semi | shi | interval:l1,...,ln | generic:SEED | file:PATH");
    sub->add_option("--dual", cfg.dual_path, "planar dual (multigraph file)");
    sub->add_option("--p", cfg.probability, "edge deletion probability p/q");
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    sub->add_option("--max-edges", cfg.max_edges, "edge cap for 3^|E| enumerations")->check(CLI::Range(0, 40));
    sub->add_option("--max-cycles", cfg.max_cycles, "cap on enumerated cycles");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    int code = app.exit(e, help, help);
    (code == 0 ? out : err) << help.str();
    return code == 0 ? kOk : kInputError;
  }

  static const std::map<std::string, Report (*)(const RunConfig&)> handlers{
      {"census", census_command},     {"labels", labels_command},     {"verify", verify_command},
      {"parking", parking_command},   {"tutte", tutte_command},       {"charpoly", charpoly_command},
      {"bounds", bounds_command},     {"reliability", reliability_command}, {"plot", plot_command},
  };
  Report report;
  try {
    report = handlers.at(cfg.command)(cfg);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::string body = cfg.format == "json" ? report.data.dump(2) + "\n" : report.text;
  if (cfg.out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file || !(file << body)) {
      err << "error: cannot write '" << cfg.out_path << "'\n";
      return kInputError;
    }
  }
  return report.code;
}

}  // namespace bigraph::cli
