#include "relab/cli/cli.hpp"

#include "relab/core/errors.hpp"
#include "relab/core/fixture.hpp"
#include "relab/core/sampling.hpp"
#include "relab/expr/parser.hpp"
#include "relab/harness/battery.hpp"
#include "relab/harness/corpus.hpp"
#include "relab/harness/edges.hpp"
#include "relab/harness/report_json.hpp"
#include "relab/representation/representation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace relab::cli {

namespace {

using nlohmann::json;

struct RunSpec {
  std::string subcommand;
  std::string fixture;
  std::string expr;
  int dim = 0;
  std::string box;
  std::vector<std::string> halfspaces;
  bool interior = false;
  std::vector<std::string> assumptions;
  std::vector<std::string> axioms;
  std::string coords;
  std::string point;
  double pitch = 0.0;
  std::optional<double> resolution;
  std::optional<std::uint64_t> seed;
  std::optional<int> budget;
  std::string format = "json";
  std::string out_path;
  bool timing = false;
};

std::vector<double> parse_numbers(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(v))
      throw UsageError(what + ": '" + item + "' is not a finite number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + " is empty");
  return out;
}

Domain parse_domain(const RunSpec& s) {
  std::vector<std::pair<double, double>> bounds;
  std::stringstream ss(s.box);
  std::string pair;
  while (std::getline(ss, pair, ';')) {
    std::vector<double> v = parse_numbers(pair, "--box");
    if (v.size() != 2 || !(v[0] < v[1])) throw UsageError("--box: expected LO,HI with LO < HI, got '" + pair + "'");
    bounds.emplace_back(v[0], v[1]);
  }
  if (bounds.size() == 1) bounds.resize(static_cast<std::size_t>(s.dim), bounds.front());
  if (static_cast<int>(bounds.size()) != s.dim)
    throw UsageError("--box: expected 1 or " + std::to_string(s.dim) + " intervals");
  Point lo, hi;
  for (auto [l, h] : bounds) {
    lo.push_back(l);
    hi.push_back(h);
  }
  std::vector<HalfSpace> hs;
  for (const std::string& text : s.halfspaces) {
    std::vector<double> v = parse_numbers(text, "--halfspace");
    if (static_cast<int>(v.size()) != s.dim + 1)
      throw UsageError("--halfspace: expected " + std::to_string(s.dim + 1) + " numbers a1,...,an,c");
    double c = v.back();
    v.pop_back();
    hs.push_back({v, c});
  }
  return Domain(lo, hi, hs, s.interior);
}

void apply_assumptions(AssumptionProfile& p, const std::vector<std::string>& names) {
  for (const std::string& n : names) {
    if (n == "weakly_monotone") {
      p.weakly_monotone = true;
      p.monotone_coordinate_count = std::max(p.monotone_coordinate_count, p.dimension);
    } else if (n == "order_dense") {
      p.order_dense = true;
    } else if (n == "order_bounded") {
      p.order_bounded = true;
    } else if (n == "strong_order_bounded") {
      p.order_bounded = p.strong_order_bounded = true;
    } else if (n == "interior") {
      p.interior = true;
    } else if (n == "convex_upper") {
      p.convex_upper_sections = true;
    } else if (n == "nonconvex") {
      p.convex_domain = false;
    } else if (n == "infinite") {
      p.finite_dimensional = false;
    } else {
      throw UsageError("--assume: unknown assumption '" + n +
                       "' (weakly_monotone, order_dense, order_bounded, strong_order_bounded, interior, "
                       "convex_upper, nonconvex, infinite)");
    }
  }
  p.validate();
}

Fixture relation(const RunSpec& s) {
  const bool has_fixture = !s.fixture.empty(), has_expr = !s.expr.empty();
  if (has_fixture == has_expr) throw UsageError("give exactly one of --fixture or --expr");
  if (has_fixture) {
    if (s.dim || !s.box.empty() || !s.halfspaces.empty())
      throw UsageError("--dim, --box and --halfspace only apply to --expr");
    Fixture f = fixture(s.fixture);
    apply_assumptions(f.profile, s.assumptions);
    return f;
  }
  if (s.dim < 1) throw UsageError("--expr needs --dim N with N >= 1");
  if (s.box.empty()) throw UsageError("--expr needs --box");
  expr::Ast ast = expr::parse(s.expr, s.dim);
  ComparisonOracle oracle = ComparisonOracle::from_utility(
      "expr", s.dim, [ast](const Point& x) { return expr::eval(ast, x); });
  AssumptionProfile p;
  p.dimension = s.dim;
  p.interior = s.interior;
  apply_assumptions(p, s.assumptions);
  Fixture f{"expr", std::move(oracle), parse_domain(s), p, {}, expr::format(ast), {}, {}};
  if (!s.coords.empty()) {
    f.stronger_rs_coords.clear();
    for (double c : parse_numbers(s.coords, "--coords")) {
      if (c != std::floor(c) || c < 1 || c > s.dim) throw UsageError("--coords: indices are 1.." + std::to_string(s.dim));
      f.stronger_rs_coords.push_back(static_cast<int>(c) - 1);
    }
  }
  return f;
}

CheckConfig config(const RunSpec& s) {
  CheckConfig c;
  if (s.resolution) c.resolution = *s.resolution;
  if (s.seed) c.seed = *s.seed;
  if (s.budget) c.sample_budget = *s.budget;
  c.validate();
  return c;
}

std::vector<Axiom> axioms(const RunSpec& s) {
  std::vector<Axiom> out;
  for (const std::string& name : s.axioms) {
    auto a = axiom_from_key(name);
    if (!a) {
      std::string valid;
      for (Axiom x : all_axioms()) valid += (valid.empty() ? "" : ", ") + std::string(to_key(x));
      throw UsageError("unknown axiom '" + name + "' (valid: " + valid + ")");
    }
    out.push_back(*a);
  }
  return out;
}

json spec_json(const RunSpec& s) {
  json j = {{"subcommand", s.subcommand}, {"format", s.format}};
  if (!s.fixture.empty()) j["fixture"] = s.fixture;
  if (!s.expr.empty()) {
    j["expr"] = s.expr;
    j["dim"] = s.dim;
    j["box"] = s.box;
    j["halfspaces"] = s.halfspaces;
    j["interior"] = s.interior;
  }
  if (!s.assumptions.empty()) j["assume"] = s.assumptions;
  if (!s.axioms.empty()) j["axioms"] = s.axioms;
  if (!s.out_path.empty()) j["out"] = s.out_path;
  return j;
}

std::string witness_line(const Witness& w) {
  std::string out = std::string(to_string(w.kind)) + " " + w.detail;
  for (const auto& [role, p] : w.points) {
    if (role.size() > 1 && role[0] == 'p' && std::isdigit(static_cast<unsigned char>(role[1]))) continue;
    out += " " + role + "=" + format_point(p);
  }
  return out;
}

void print_verdicts(std::ostream& out, const std::map<std::string, Verdict>& verdicts) {
  for (const auto& [k, v] : verdicts) {
    out << "  " << k << ": " << to_string(v.kind);
    if (v.witness) out << " [" << witness_line(*v.witness) << "]";
    if (!v.reason.empty()) out << " (" << v.reason << ")";
    out << "\n";
  }
}

int cmd_check(const RunSpec& s, std::ostream& out) {
  Fixture f = relation(s);
  CheckConfig cfg = config(s);
  BatteryReport b = run_battery(f, cfg, s.timing, axioms(s));
  if (s.format == "json") {
    json j = battery_json(b);
    json verdicts = j["verdicts"];
    out << json{{"tool_version", kToolVersion},
                {"spec", spec_json(s)},
                {"config", config_json(cfg)},
                {"fixture", b.fixture},
                {"verdicts", verdicts},
                {"basic", j["basic"]},
                {"errors", j["errors"]},
                {"timing_ms", j["timing_ms"]}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "fixture " << b.fixture << " resolution " << format_double(cfg.resolution) << " seed " << cfg.seed << "\n";
  out << "axioms:\n";
  print_verdicts(out, b.verdicts);
  out << "basic:\n";
  print_verdicts(out, b.basic);
  for (const auto& [k, e] : b.errors) out << "error " << k << ": " << e << "\n";
  return kExitOk;
}

int cmd_corpus(const RunSpec& s, std::ostream& out) {
  if (!s.fixture.empty() || !s.expr.empty()) throw UsageError("corpus runs the whole catalogue; drop --fixture/--expr");
  CheckConfig cfg = config(s);
  CorpusReport r = run_corpus(cfg, s.timing);
  if (s.format == "json") {
    json j = corpus_json(r);
    j["tool_version"] = kToolVersion;
    j["spec"] = spec_json(s);
    out << j.dump(2) << "\n";
  } else {
    out << "corpus resolution " << format_double(cfg.resolution) << " seed " << cfg.seed << "\n";
    for (const ExpectationResult& e : r.expectations)
      out << (e.pass ? "pass " : "FAIL ") << e.fixture << " " << e.key << ": expected " << to_string(e.expected)
          << ", got " << to_string(e.actual) << "\n";
    for (const FixtureInconsistency& i : r.inconsistencies)
      out << "INCONSISTENT " << i.fixture << ": " << i.inconsistency.detail << "\n";
    for (const ConverseEvidence& c : r.converses)
      out << "converse " << to_key(c.edge.from) << " -> " << to_key(c.edge.to) << ": "
          << (c.fixture ? "fails on " + *c.fixture : std::string(c.required ? "MISSING" : "no witness (informational)"))
          << "\n";
    out << "corpus: " << (r.ok ? "ok" : "FAILED") << "\n";
  }
  return r.ok ? kExitOk : kExitFailure;
}

int cmd_represent(const RunSpec& s, std::ostream& out) {
  Fixture f = relation(s);
  UtilityTable t = build_utility_table(f.oracle, f.domain, config(s), s.pitch);
  write_csv(out, t);
  return kExitOk;
}

// Lines along the last coordinate through lattice points of the others; one solution per line.
int cmd_curve(const RunSpec& s, std::ostream& out) {
  Fixture f = relation(s);
  CheckConfig cfg = config(s);
  const Domain& d = f.domain;
  const int n = d.dimension();
  if (s.point.empty()) throw UsageError("curve needs --point x1,...,xn");
  Point x = parse_numbers(s.point, "--point");
  if (static_cast<int>(x.size()) != n) throw UsageError("--point: expected " + std::to_string(n) + " coordinates");
  const double pitch = s.pitch > 0.0 ? s.pitch : d.max_width() / 16.0;

  std::vector<Point> bases{Point(static_cast<std::size_t>(n), 0.0)};
  if (n > 1) {
    Domain face(Point(d.lo().begin(), d.lo().end() - 1), Point(d.hi().begin(), d.hi().end() - 1));
    bases = sample_grid(face, pitch, cfg.seed, 0);
    for (Point& b : bases) b.push_back(0.0);
  }
  for (int i = 0; i < n; ++i) out << (i ? "," : "") << "x" << i + 1;
  out << "\n";
  Point dir(static_cast<std::size_t>(n), 0.0);
  dir.back() = 1.0;
  for (Point base : bases) {
    base.back() = d.lo().back();
    auto iv = d.line_interval(base, dir);
    if (!iv) continue;
    Point a = add_scaled(base, dir, iv->second), b = add_scaled(base, dir, iv->first);
    Comparison ca = f.oracle.compare(a, x), cb = f.oracle.compare(b, x);
    if (ca == Comparison::Incomp || cb == Comparison::Incomp) continue;
    if (ca == cb && ca != Comparison::Indiff) continue;
    if (ca == Comparison::Prec) std::swap(a, b);
    SegmentResult r = solve_indifference_on_segment(f.oracle, x, a, b, cfg);
    const auto* c = std::get_if<IndiffCertificate>(&r);
    if (!c) continue;
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << format_double(c->point[static_cast<std::size_t>(i)]);
    out << "\n";
  }
  return kExitOk;
}

int cmd_implications(const RunSpec& s, std::ostream& out) {
  AssumptionProfile p;
  std::string name = "profile";
  if (!s.fixture.empty() || !s.expr.empty()) {
    Fixture f = relation(s);
    p = f.profile;
    name = f.name;
  } else {
    p.dimension = std::max(s.dim, 1);
    apply_assumptions(p, s.assumptions);
  }
  std::vector<ImplicationEdge> edges = implication_edges(p);
  if (s.format == "json") {
    json arr = json::array();
    for (const ImplicationEdge& e : edges) arr.push_back(edge_json(e));
    out << json{{"tool_version", kToolVersion}, {"spec", spec_json(s)}, {"profile", profile_json(p)}, {"edges", arr}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << name << ": " << p.describe() << "\n";
  for (const ImplicationEdge& e : edges)
    out << to_key(e.from) << " -> " << to_key(e.to) << " [" << to_string(e.source) << "]\n";
  return kExitOk;
}

void add_common(CLI::App* sub, RunSpec& s) {
  sub->add_option("--fixture", s.fixture, "Catalogue fixture name");
  sub->add_option("--expr", s.expr, "Utility expression in x1..xn");
  sub->add_option("--dim", s.dim, "Dimension for --expr");
  sub->add_option("--box", s.box, "LO,HI or LO,HI;LO,HI;... per coordinate");
  sub->add_option("--halfspace", s.halfspaces, "a1,...,an,c for a.x <= c (repeatable)");
  sub->add_flag("--interior", s.interior, "Check on the interior of the domain");
  sub->add_option("--assume", s.assumptions, "Profile assumption (repeatable)");
  sub->add_option("--resolution", s.resolution, "Probe resolution");
  sub->add_option("--seed", s.seed, "Sampling seed");
  sub->add_option("--budget", s.budget, "Samples per checker");
  sub->add_option("--format", s.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", s.out_path, "Write the report to PATH");
  sub->add_flag("--timing", s.timing, "Include wall-clock timings");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunSpec s;
  CLI::App app{"Check preference-relation axioms on fixtures and expressions", "relation-lab"};
  app.require_subcommand(1, 1);
  CLI::App* check = app.add_subcommand("check", "Run axiom checkers on one relation");
  CLI::App* corpus = app.add_subcommand("corpus", "Run the full catalogue against its expected verdicts");
  CLI::App* represent = app.add_subcommand("represent", "Export the diagonal utility table as CSV");
  CLI::App* curve = app.add_subcommand("curve", "Trace the indifference class of a point as CSV");
  CLI::App* implications = app.add_subcommand("implications", "List implication edges active for a profile");
  for (CLI::App* sub : {check, corpus, represent, curve, implications}) add_common(sub, s);
  check->add_option("--axiom", s.axioms, "Axiom to check (repeatable; default all)");
  check->add_option("--coords", s.coords, "1-based coordinate set for stronger_rs");
  represent->add_option("--pitch", s.pitch, "Grid pitch (default width/8)");
  curve->add_option("--pitch", s.pitch, "Grid-line spacing (default width/16)");
  curve->add_option("--point", s.point, "Point x1,...,xn whose class is traced");

  std::vector<std::string> argv_store{"relation-lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  s.subcommand = app.get_subcommands().front()->get_name();

  std::ofstream file;
  std::ostringstream buffer;
  try {
    int code = kExitOk;
    if (s.subcommand == "check") code = cmd_check(s, buffer);
    else if (s.subcommand == "corpus") code = cmd_corpus(s, buffer);
    else if (s.subcommand == "represent") code = cmd_represent(s, buffer);
    else if (s.subcommand == "curve") code = cmd_curve(s, buffer);
    else code = cmd_implications(s, buffer);
    if (s.out_path.empty()) {
      out << buffer.str();
    } else {
      file.open(s.out_path);
      if (!file) throw UsageError("cannot write " + s.out_path);
      file << buffer.str();
    }
    return code;
  } catch (const expr::ParseError& e) {
    err << "error: expression: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace relab::cli
