// qmpolar: command-line front end for the quasimonotone polar library.
//
// Exit codes: 0 success, 1 a --verify claim did not hold, 2 malformed input,
// 3 dimension guard, 4 a precondition of the requested check failed.

#include "qmpolar/qmpolar.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

using namespace qmpolar;

namespace {

struct Options {
  std::string mode;  // empty: taken from the input
  double eps = 1e-9;
  long max_denominator = 0;
  std::string operator_file;
  std::string scenario;
  ScenarioParams params;
  std::string output;

  // subcommand arguments
  std::string at;
  std::string claim;
  std::string grid_file;
  std::string pair;
  std::string constraints_file;
  std::string k_grid;
  std::string scenario_name;
  bool verify = false;
  std::string region = "polar";
  std::string out_file;
  std::string csv_file;
  std::string range = "-3:3";
  std::size_t cells = 60;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void emit(const Options& o, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    write_file(o.output, text);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

template <Field F>
Vec<F> parse_point(const std::string& text, std::size_t dim) {
  Vec<F> v;
  for (const auto& part : split(text, ',')) v.push_back(parse_scalar<F>(part));
  require_dim(v.size(), dim, "point");
  return v;
}

LoadOptions load_options(const Options& o) {
  LoadOptions lo;
  lo.eps = o.eps;
  lo.max_denominator = o.max_denominator;
  if (o.mode == "exact") lo.mode = Mode::Exact;
  if (o.mode == "float") lo.mode = Mode::Float;
  return lo;
}

AnyOperator source_operator(const Options& o) {
  if (!o.operator_file.empty() && !o.scenario.empty()) {
    throw ParseError("give either --operator or --scenario, not both");
  }
  if (!o.operator_file.empty()) return load_operator(read_json(o.operator_file), load_options(o));
  if (!o.scenario.empty()) {
    if (o.mode == "float") return make_scenario(o.scenario, o.params, ApproxField{o.eps}).graph;
    return make_scenario(o.scenario, o.params, ExactField{}).graph;
  }
  throw ParseError("no operator given; use --operator FILE or --scenario NAME");
}

json relation_witness(const auto& check) {
  if (!check.witness) return nullptr;
  return json::array({pair_to_json(check.witness->first), pair_to_json(check.witness->second)});
}

template <Field F>
void run_check(const Options& o, const OperatorGraph<F>& t) {
  const auto qm = is_quasimonotone(t);
  const auto mono = is_monotone(t);
  emit(o, json{{"quasimonotone", qm.holds},
               {"quasimonotone_witness", relation_witness(qm)},
               {"monotone", mono.holds},
               {"monotone_witness", relation_witness(mono)}});
}

template <Field F>
void run_polar(const Options& o, const OperatorGraph<F>& t) {
  emit(o, to_json(polar_fiber(t, parse_point<F>(o.at, t.dim()))));
}

template <Field F>
void run_eset(const Options& o, const OperatorGraph<F>& t) {
  const auto m = minty_global(t);
  json j{{"polyhedron", to_json(m.polyhedron)}};
  switch (m.kind) {
    case PolyhedronKind::Empty: j["classification"] = "empty"; break;
    case PolyhedronKind::Singleton:
      j["classification"] = "singleton";
      j["point"] = vec_to_json(m.point);
      break;
    case PolyhedronKind::Larger: j["classification"] = "larger"; break;
  }
  emit(o, j);
}

template <Field F>
void run_certify(const Options& o, const OperatorGraph<F>& t) {
  const Grid<F> grid = o.grid_file.empty() ? default_grid(t) : grid_from_json<F>(read_json(o.grid_file), load_options(o));
  Certificate<F> c;
  if (o.claim == "maximal") {
    c = certify_maximal(t, grid);
  } else if (o.claim == "premaximal") {
    c = certify_premaximal(t, grid);
  } else if (o.claim == "ae") {
    c = certify_ae_maximal(t, grid);
  } else {
    const auto parts = split(o.pair, ';');
    if (parts.size() != 2) throw ParseError("--pair expects \"x;xstar\" with comma-separated coordinates");
    c = bipolar_member_falsify(t, Pair<F>{parse_point<F>(parts[0], t.dim()), parse_point<F>(parts[1], t.dim())}, grid);
  }
  auto j = to_json(c);
  j["replay"] = c.witness.empty() ? json(nullptr) : json(replay(t, c));
  emit(o, j);
}

template <Field F>
void run_mvip(const Options& o, const OperatorGraph<F>& t) {
  ConstraintSet<F> k;
  if (!o.constraints_file.empty()) {
    k = constraint_set_from_json<F>(read_json(o.constraints_file), load_options(o));
  } else if (!o.k_grid.empty()) {
    const auto parts = split(o.k_grid, ':');
    if (parts.size() != 3) throw ParseError("--k-grid expects lo:hi:step");
    if (t.dim() != 1) throw DimensionMismatch("--k-grid needs a one-dimensional operator");
    k = {1, line_grid<F>(parse_scalar<F>(parts[0]), parse_scalar<F>(parts[1]), parse_scalar<F>(parts[2]))};
  } else if (!o.scenario.empty()) {
    auto sc = make_scenario(o.scenario, o.params, t.field());
    if (!sc.constraints) throw ParseError("scenario has no constraint set; use --constraints or --k-grid");
    k = *sc.constraints;
  } else {
    throw ParseError("no constraint set; use --constraints or --k-grid");
  }
  const auto mt = minty_solve(t, k);
  const auto mp = minty_solve_polar(t, k);
  const bool subset = std::all_of(mp.begin(), mp.end(), [&](const Vec<F>& x) {
    return std::find(mt.begin(), mt.end(), x) != mt.end();
  });
  emit(o, json{{"constraints", to_json(k)},
               {"minty", vec_list_to_json(mt)},
               {"minty_polar", vec_list_to_json(mp)},
               {"polar_subset", subset},
               {"equal", subset && mp.size() == mt.size()}});
}

template <Field F>
void run_plot(const Options& o, const OperatorGraph<F>& t) {
  const auto parts = split(o.range, ':');
  if (parts.size() != 2) throw ParseError("--range expects lo:hi");
  const auto raster = rasterize(t, o.region == "graph" ? Region::Graph : Region::Polar, parse_scalar<F>(parts[0]),
                                parse_scalar<F>(parts[1]), o.cells);
  write_file(o.out_file, to_svg(raster));
  if (!o.csv_file.empty()) write_file(o.csv_file, to_csv(raster));
  std::size_t shaded = 0;
  for (const auto& col : raster.member) shaded += static_cast<std::size_t>(std::count(col.begin(), col.end(), true));
  emit(o, json{{"svg", o.out_file}, {"cells", o.cells * o.cells}, {"shaded", shaded}});
}

int run_scenario(const Options& o) {
  if (!o.verify) {
    const auto text = o.mode == "float" ? serialize(make_scenario(o.scenario_name, o.params, ApproxField{o.eps}).graph)
                                        : serialize(make_scenario(o.scenario_name, o.params, ExactField{}).graph);
    if (o.output.empty()) {
      std::cout << text;
    } else {
      write_file(o.output, text);
    }
    return 0;
  }
  const auto rows = verify_scenario(o.scenario_name);
  json j = json::array();
  bool all = true;
  for (const auto& r : rows) {
    j.push_back({{"claim", r.claim}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
    all = all && r.pass;
  }
  emit(o, json{{"scenario", o.scenario_name}, {"claims", j}, {"pass", all}});
  return all ? 0 : 1;
}

template <class Fn>
void with_operator(const Options& o, Fn&& fn) {
  std::visit([&](const auto& t) { fn(t); }, source_operator(o));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Quasimonotone polars of finite operators: fibres, certificates and variational inequalities."};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--mode", o.mode, "Arithmetic: exact (rationals) or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--eps", o.eps, "Float-mode tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-denominator", o.max_denominator, "Snap decimal inputs to rationals with this denominator bound (0 keeps them)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--operator", o.operator_file, "Operator JSON file");
  app.add_option("--scenario", o.scenario, "Use a built-in scenario as the operator");
  app.add_option("--dim", o.params.dim, "Scenario dimension");
  app.add_option("--m", o.params.m, "Scenario integer range");
  app.add_option("--n", o.params.n, "Identity scenario: points per circle");
  app.add_option("--r", o.params.r, "Identity scenario: outer radius");
  app.add_option("--rings", o.params.rings, "Identity scenario: number of circles");
  app.add_option("-o,--output", o.output, "Write JSON output to a file");

  auto* check = app.add_subcommand("check", "Quasimonotonicity and monotonicity of the graph");
  auto* polar = app.add_subcommand("polar", "Polar fibre at a point, as an H-cone");
  polar->add_option("--at", o.at, "Point, comma-separated coordinates")->required();
  auto* eset = app.add_subcommand("e-set", "The polyhedron E_T and its classification");
  auto* certify = app.add_subcommand("certify", "Maximality certificates on a grid");
  certify->add_option("claim", o.claim, "maximal, premaximal, ae or bipolar")
      ->required()
      ->check(CLI::IsMember({"maximal", "premaximal", "ae", "bipolar"}));
  certify->add_option("--grid", o.grid_file, "Grid JSON file (default: built from the graph)");
  certify->add_option("--pair", o.pair, "Probe pair for bipolar, \"x;xstar\"");
  auto* mvip = app.add_subcommand("mvip", "Minty solutions for T and its polar on a finite constraint set");
  mvip->add_option("--constraints", o.constraints_file, "Constraint set JSON file");
  mvip->add_option("--k-grid", o.k_grid, "One-dimensional grid lo:hi:step");
  auto* scenario = app.add_subcommand("scenario", "Emit a built-in scenario or verify its expected claims");
  scenario->add_option("name", o.scenario_name, "Scenario name")->required()->check(CLI::IsMember(scenario_names()));
  scenario->add_flag("--verify", o.verify, "Run the expected-claims table");
  auto* plot = app.add_subcommand("plot", "SVG raster of a one-dimensional operator");
  plot->add_option("--region", o.region, "polar or graph")->check(CLI::IsMember({"polar", "graph"}));
  plot->add_option("--out", o.out_file, "SVG output file")->required();
  plot->add_option("--csv", o.csv_file, "Also write the membership samples as CSV");
  plot->add_option("--range", o.range, "Square range lo:hi");
  plot->add_option("--cells", o.cells, "Cells per axis")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check) with_operator(o, [&](const auto& t) { run_check(o, t); });
    if (*polar) with_operator(o, [&](const auto& t) { run_polar(o, t); });
    if (*eset) with_operator(o, [&](const auto& t) { run_eset(o, t); });
    if (*certify) with_operator(o, [&](const auto& t) { run_certify(o, t); });
    if (*mvip) with_operator(o, [&](const auto& t) { run_mvip(o, t); });
    if (*plot) with_operator(o, [&](const auto& t) { run_plot(o, t); });
    if (*scenario) return run_scenario(o);
  } catch (const DimensionGuardError& e) {
    std::cerr << "qmpolar: " << e.what() << "\n";
    return 3;
  } catch (const NotQuasimonotone& e) {
    std::cerr << "qmpolar: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qmpolar: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "qmpolar: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "qmpolar: malformed input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
