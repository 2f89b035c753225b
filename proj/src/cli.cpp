#include "mddim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mddim/csv.hpp"
#include "mddim/expression.hpp"
#include "mddim/optimize.hpp"
#include "mddim/oracles.hpp"
#include "mddim/solve.hpp"

namespace mddim::cli {

namespace {

const std::vector<std::string> kCommands = {"solve", "sweep", "optimize", "validate-mapping",
                                            "oracle"};
const std::vector<std::string> kProblems = {"eigen", "blasius", "gelfand"};
const std::vector<std::string> kMappingKinds = {"sine-alpha", "sine-beta-gamma",
                                                "inverse-power-cubic", "poly2d-quadratic"};
const std::vector<std::string> kSweepParams = {"epsilon", "alpha", "beta", "gamma",
                                               "a0",      "a1",    "a2",   "lambda-stretch",
                                               "bigA",    "b0",    "b1",   "c0",
                                               "c1"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// CLI11 reports unknown config keys without a line number; this pass does.
void check_config_file(const std::string& path, const CLI::App& app) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path));
  std::set<std::string> known;
  for (const CLI::Option* option : app.get_options()) {
    for (const auto& name : option->get_lnames()) known.insert(name);
  }
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';') continue;
    if (text.front() == '[') {
      throw ConfigError(fmt::format("{}:{}: sections are not supported, the config is flat", path,
                                    number));
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(fmt::format("{}:{}: expected 'key = value', got '{}'", path, number, text));
    }
    const std::string key = trim(text.substr(0, eq));
    if (!known.count(key) || key == "config") {
      throw ConfigError(fmt::format("{}:{}: unknown key '{}'", path, number, key));
    }
    if (trim(text.substr(eq + 1)).empty()) {
      throw ConfigError(fmt::format("{}:{}: key '{}' has no value", path, number, key));
    }
  }
}

std::optional<std::string> find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return std::nullopt;
}

template <RealNumber Real>
Real scalar(const std::optional<std::string>& value, const char* fallback) {
  return parse_scalar<Real>(value ? *value : std::string(fallback));
}

template <RealNumber Real>
MappingSpec<Real> mapping_from(const RunConfig& c, const std::string& kind) {
  if (kind == "sine-alpha") return MappingSpec<Real>::sine_alpha(scalar<Real>(c.alpha, "2"));
  if (kind == "sine-beta-gamma") {
    return MappingSpec<Real>::sine_beta_gamma(scalar<Real>(c.beta, "1"), scalar<Real>(c.gamma, "1"));
  }
  if (kind == "inverse-power-cubic") {
    return MappingSpec<Real>::inverse_power_cubic(scalar<Real>(c.a0, "1/(3*pi)"),
                                                  scalar<Real>(c.a1, "pi/30"),
                                                  scalar<Real>(c.a2, "pi/3"));
  }
  if (kind == "poly2d-quadratic") {
    return MappingSpec<Real>::poly2d_quadratic(scalar<Real>(c.b0, "pi/2"), scalar<Real>(c.b1, "pi"));
  }
  throw ConfigError(fmt::format("unknown mapping kind '{}'", kind));
}

std::string eigen_mapping_kind(const RunConfig& c) {
  if (c.mapping) return *c.mapping;
  return (c.beta || c.gamma) ? "sine-beta-gamma" : "sine-alpha";
}

// Spec construction errors are configuration errors.
template <RealNumber Real>
ProblemSpec<Real> build_spec(const RunConfig& c) {
  try {
    if (c.target == "eigen") {
      const std::string kind = eigen_mapping_kind(c);
      if (kind != "sine-alpha" && kind != "sine-beta-gamma") {
        throw ConfigError(fmt::format("mapping '{}' does not act on the eigen problem", kind));
      }
      auto spec = eigen_spec<Real>(scalar<Real>(c.epsilon, "1"), mapping_from<Real>(c, kind),
                                   scalar<Real>(c.c0, "-5/8"), c.order);
      spec.validate();
      return spec;
    }
    if (c.target == "blasius") {
      auto spec = blasius_spec<Real>(scalar<Real>(c.lambda_stretch, "1/3"),
                                     mapping_from<Real>(c, "inverse-power-cubic"),
                                     scalar<Real>(c.c0, "-9/5"), c.order);
      spec.validate();
      return spec;
    }
    if (c.target == "gelfand") {
      const std::string name = c.f_preset.value_or("zero");
      const auto& preset = find_gelfand_preset(name);
      const Real c0 = c.c0 ? parse_scalar<Real>(*c.c0) : Real(preset.c0);
      const Real c1 = c.c1 ? parse_scalar<Real>(*c.c1) : Real(preset.c1);
      auto spec = gelfand_spec<Real>(scalar<Real>(c.big_a, "1"), gelfand_boundary_preset<Real>(name),
                                     name, mapping_from<Real>(c, "poly2d-quadratic"), c0, c1, c.order);
      spec.validate();
      return spec;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError(fmt::format("unknown problem '{}' (expected eigen, blasius or gelfand)", c.target));
}

void require_target(const RunConfig& c) {
  if (std::find(kProblems.begin(), kProblems.end(), c.target) == kProblems.end()) {
    throw ConfigError(fmt::format("'{}' needs a problem: eigen, blasius or gelfand (got '{}')",
                                  c.command, c.target));
  }
}

std::string observable_column(const std::string& target) {
  return observable_name(target == "blasius" ? Family::InversePower : Family::OddSine);
}

std::vector<std::string> solve_columns(const std::string& target) {
  if (target == "blasius") return {"order", "f2_0", "E_m"};
  return {"order", "E_m", "lambda_partial"};
}

// Fixed-width rendering of a table for the terminal.
void print_summary(std::ostream& out, const Table& table, std::size_t max_rows = 12) {
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
  std::vector<std::size_t> shown;
  const std::size_t n = table.rows.size();
  const std::size_t stride = n > max_rows ? (n + max_rows - 1) / max_rows : 1;
  for (std::size_t r = 0; r < n; r += stride) shown.push_back(r);
  if (n && shown.back() != n - 1) shown.push_back(n - 1);
  const auto cell = [](const std::string& s) { return s.size() > 24 ? s.substr(0, 24) : s; };
  for (auto r : shown) {
    for (std::size_t i = 0; i < width.size(); ++i) {
      width[i] = std::max(width[i], cell(table.rows[r][i]).size());
    }
  }
  const auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      out << (i ? "  " : "") << fmt::format("{:>{}}", cell(fields[i]), width[i]);
    }
    out << '\n';
  };
  line(table.columns);
  for (auto r : shown) line(table.rows[r]);
}

void deliver(const RunConfig& c, const Table& table, const std::vector<std::string>& columns,
             std::ostream& out) {
  if (c.out.empty()) {
    write_table(out, table, columns);
    return;
  }
  emit_table(table, columns, c.out);
  print_summary(out, table);
  out << fmt::format("wrote {} rows to {}\n", table.rows.size(), c.out);
}

template <RealNumber Real>
int run_solve(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_target(c);
  const auto spec = build_spec<Real>(c);
  SolveOptions options;
  options.residual_orders = c.residual_orders;
  options.quadrature_nodes = c.quadrature_nodes;
  const auto result = solve(spec, options);
  Table table;
  table.columns = {"order", observable_column(c.target), "E_m"};
  int unresolved = 0;
  for (const auto& r : result.records) {
    std::string e;
    if (r.residual) e = format_scalar(*r.residual);
    if (r.residual_error) ++unresolved;
    table.add_row({std::to_string(r.order), format_scalar(r.observable), e});
  }
  if (unresolved) {
    err << fmt::format(
        "warning: E_m unresolved at {} of {} orders at {} digits (left blank); raise --precision\n",
        unresolved, result.records.size(), digits<Real>());
  }
  const auto columns = c.columns.empty() ? solve_columns(c.target) : c.columns;
  deliver(c, table, columns, out);
  return kOk;
}

RunConfig with_parameter(RunConfig c, const std::string& param, const std::string& value) {
  if (param == "epsilon") c.epsilon = value;
  else if (param == "alpha") c.alpha = value;
  else if (param == "beta") c.beta = value;
  else if (param == "gamma") c.gamma = value;
  else if (param == "a0") c.a0 = value;
  else if (param == "a1") c.a1 = value;
  else if (param == "a2") c.a2 = value;
  else if (param == "lambda-stretch") c.lambda_stretch = value;
  else if (param == "bigA") c.big_a = value;
  else if (param == "b0") c.b0 = value;
  else if (param == "b1") c.b1 = value;
  else if (param == "c0") c.c0 = value;
  else if (param == "c1") c.c1 = value;
  else throw ConfigError(fmt::format("cannot sweep '{}'", param));
  return c;
}

GridRange c0_range(const RunConfig& c, Family family) {
  GridRange g = default_c0_grid(family);
  if (c.c0_from) g.from = *c.c0_from;
  if (c.c0_to) g.to = *c.c0_to;
  g.count = c.grid_count;
  return g;
}

GridRange c1_range(const RunConfig& c) {
  GridRange g{-3.0, 0.0, c.grid_count};
  if (c.c1_from) g.from = *c.c1_from;
  if (c.c1_to) g.to = *c.c1_to;
  return g;
}

template <RealNumber Real>
int run_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_target(c);
  if (std::find(kSweepParams.begin(), kSweepParams.end(), c.param) == kSweepParams.end()) {
    throw ConfigError(fmt::format("--param must name a numeric parameter, got '{}'", c.param));
  }
  if (!c.from || !c.to) throw ConfigError("sweep needs --from and --to");
  if (c.count < 1) throw ConfigError("--count must be >= 1");
  const double from = parse_scalar<double>(*c.from);
  const double to = parse_scalar<double>(*c.to);
  std::vector<RunConfig> points;
  std::vector<std::string> values;
  for (int i = 0; i < c.count; ++i) {
    const double v = c.count == 1 ? from : from + (to - from) * i / (c.count - 1);
    values.push_back(fmt::format("{}", v));
    points.push_back(with_parameter(c, c.param, values.back()));
  }
  // Validate every point up front so config errors surface before solving.
  for (const auto& p : points) build_spec<Real>(p);

  const bool gelfand = c.target == "gelfand";
  struct Row {
    std::vector<std::string> fields;
    std::string warning;
  };
  const auto evaluate = [&](const RunConfig& p, const std::string& value) {
    auto spec = build_spec<Real>(p);
    Row row{{value}, {}};
    if (c.reoptimize) {
      const auto best = optimize_controls(spec, c.fit_order, c0_range(c, spec.family()),
                                          gelfand ? std::optional(c1_range(c)) : std::nullopt, 1);
      spec.c0 = Real(best.c0);
      if (best.c1) spec.c1 = Real(*best.c1);
      row.fields.push_back(fmt::format("{}", best.c0));
      if (gelfand) row.fields.push_back(fmt::format("{}", *best.c1));
      if (!best.interior) row.warning = fmt::format("{}={}: {}", c.param, value, best.note);
    }
    SolveOptions options;
    options.residual_orders = {c.order};
    options.quadrature_nodes = c.quadrature_nodes;
    try {
      const auto result = solve(spec, options);
      const auto& r = result.at(c.order);
      row.fields.push_back(r.residual ? format_scalar(*r.residual) : "");
      row.fields.push_back(format_scalar(r.observable));
      if (r.residual_error) row.warning = fmt::format("{}={}: {}", c.param, value, *r.residual_error);
    } catch (const Error& e) {
      row.fields.push_back("");
      row.fields.push_back("");
      row.warning = fmt::format("{}={}: {}", c.param, value, e.what());
    }
    return row;
  };
  std::vector<Row> rows(points.size());
  unsigned threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  if (!std::same_as<Real, double>) threads = 1;
  if (threads <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) rows[i] = evaluate(points[i], values[i]);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < points.size(); i += threads) rows[i] = evaluate(points[i], values[i]);
      }));
    }
    for (auto& j : jobs) j.get();
  }
  Table table;
  table.columns = {c.param};
  if (c.reoptimize) {
    table.columns.push_back("c0");
    if (gelfand) table.columns.push_back("c1");
  }
  table.columns.push_back(fmt::format("E_{}", c.order));
  table.columns.push_back(observable_column(c.target));
  for (auto& row : rows) {
    if (!row.warning.empty()) err << "warning: " << row.warning << '\n';
    table.add_row(std::move(row.fields));
  }
  deliver(c, table, c.columns, out);
  return kOk;
}

template <RealNumber Real>
int run_optimize(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_target(c);
  const auto spec = build_spec<Real>(c);
  const bool gelfand = spec.family() == Family::EvenPoly2D;
  const auto best = optimize_controls(spec, c.fit_order, c0_range(c, spec.family()),
                                      gelfand ? std::optional(c1_range(c)) : std::nullopt, c.threads);
  const std::string e_column = fmt::format("E_{}", c.fit_order);
  Table table;
  table.columns = gelfand ? std::vector<std::string>{"c0", "c1", e_column}
                          : std::vector<std::string>{"c0", e_column};
  for (const auto& p : best.landscape) {
    std::vector<std::string> row{fmt::format("{}", p.c0)};
    if (p.c1) row.push_back(fmt::format("{}", *p.c1));
    row.push_back(fmt::format("{}", p.residual));
    table.add_row(std::move(row));
  }
  if (!c.out.empty()) {
    emit_table(table, c.columns, c.out);
    out << fmt::format("landscape ({} points) written to {}\n", table.rows.size(), c.out);
  }
  out << fmt::format("c0 = {}\n", best.c0);
  if (best.c1) out << fmt::format("c1 = {}\n", *best.c1);
  out << fmt::format("{} = {}\n", e_column, best.residual);
  out << fmt::format("interior = {}\n", best.interior ? "yes" : "no");
  if (!best.note.empty()) err << "note: " << best.note << '\n';
  return kOk;
}

template <RealNumber Real>
int run_validate(const RunConfig& c, std::ostream& out, std::ostream&) {
  std::string kind = c.kind;
  if (kind.empty()) {
    if (c.target == "eigen") kind = eigen_mapping_kind(c);
    else if (c.target == "blasius") kind = "inverse-power-cubic";
    else if (c.target == "gelfand") kind = "poly2d-quadratic";
    else throw ConfigError("validate-mapping needs --kind or a problem");
  }
  if (std::find(kMappingKinds.begin(), kMappingKinds.end(), kind) == kMappingKinds.end()) {
    throw ConfigError(fmt::format("unknown mapping kind '{}'", kind));
  }
  if (c.budget < 1) throw ConfigError("--budget must be >= 1");
  MappingSpec<Real> mapping = [&] {
    try {
      return mapping_from<Real>(c, kind);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }();
  const auto report = validate_mapping(mapping, c.budget, c.seed);
  const auto verdict = [](const RuleCheck& r) { return r.pass ? "pass" : "FAIL"; };
  out << fmt::format("mapping      {}\n", report.mapping);
  out << fmt::format("probe budget {}\n", report.probe_budget);
  out << fmt::format("I   linear     {}  {}\n", verdict(report.linearity), report.linearity.detail);
  out << fmt::format("II  injective  {}  {}\n", verdict(report.injectivity), report.injectivity.detail);
  out << fmt::format("III complete   {}  {}\n", verdict(report.completeness), report.completeness.detail);
  out << fmt::format("IV  finite     {}  {}\n", verdict(report.finiteness), report.finiteness.detail);
  out << fmt::format("K estimate   {}\n", report.k_estimate);
  for (const auto& v : report.invariant_violations) out << "invariant violated: " << v << '\n';
  return report.all_pass() && report.invariant_violations.empty() ? kOk : kSolverError;
}

int run_oracle(const RunConfig& c, std::ostream& out) {
  OracleResult result;
  if (c.target == "blasius" && (c.eta_max < 20)) throw ConfigError("--eta-max must be >= 20");
  if (c.target == "gelfand" && (c.grid_n < 41 || c.grid_n % 2 == 0)) {
    throw ConfigError("--grid-n must be odd and >= 41");
  }
  if (c.target == "blasius") {
    result = blasius_shooting_oracle(c.step, c.eta_max);
  } else if (c.target == "gelfand") {
    const std::string name = c.f_preset.value_or("zero");
    Series<double> boundary(Family::EvenPoly2D);
    double a = 0;
    try {
      boundary = gelfand_boundary_preset<double>(name);
      a = scalar<double>(c.big_a, "1");
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
    result = gelfand_fd_oracle(a, boundary, c.grid_n);
  } else {
    throw ConfigError("oracle needs 'blasius' or 'gelfand'");
  }
  Table table;
  table.columns = {"observable", "value", "method"};
  std::vector<std::string> row{result.observable, fmt::format("{}", result.value), result.method};
  for (const auto& [key, value] : result.parameters) {
    table.columns.push_back(key);
    row.push_back(fmt::format("{}", value));
  }
  table.add_row(std::move(row));
  if (!c.out.empty()) emit_table(table, c.columns, c.out);
  out << fmt::format("{} = {}\n", result.observable, result.value);
  out << fmt::format("method: {}\n", result.method);
  for (const auto& [key, value] : result.parameters) out << fmt::format("  {} = {}\n", key, value);
  return kOk;
}

template <RealNumber Real>
int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "solve") return run_solve<Real>(c, out, err);
  if (c.command == "sweep") return run_sweep<Real>(c, out, err);
  if (c.command == "optimize") return run_optimize<Real>(c, out, err);
  if (c.command == "validate-mapping") return run_validate<Real>(c, out, err);
  throw ConfigError(fmt::format("unknown command '{}'", c.command));
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"Series solutions by directly defined inverse mappings", "mddim"};
  app.set_config("--config", "", "flat key = value file; flags given on the command line win");
  app.add_option("command", c.command, "solve | sweep | optimize | validate-mapping | oracle")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("problem", c.target, "eigen | blasius | gelfand");

  app.add_option("--order", c.order, "maximal order of approximation")->check(CLI::Range(1, 100000));
  app.add_option("--precision", c.precision, "decimal digits; 16 or fewer runs in double")
      ->check(CLI::Range(1u, 100000u));
  app.add_option("--c0", c.c0, "convergence-control parameter c0");
  app.add_option("--c1", c.c1, "boundary convergence-control parameter c1 (gelfand)");
  app.add_option("--out", c.out, "CSV output path (stdout when omitted)");
  app.add_option("--columns", c.columns, "CSV columns to emit, in order")->delimiter(',');
  app.add_option("--residual-orders", c.residual_orders, "orders at which E_m is computed (default all)")
      ->delimiter(',');
  app.add_option("--quadrature-nodes", c.quadrature_nodes, "Gauss-Legendre nodes per axis (gelfand E_m)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", c.threads, "worker threads for scans (0: hardware)");

  app.add_option("--epsilon", c.epsilon, "eigen: cubic coefficient");
  app.add_option("--mapping", c.mapping, "eigen: sine-alpha | sine-beta-gamma");
  app.add_option("--alpha", c.alpha, "sine-alpha mapping parameter");
  app.add_option("--beta", c.beta, "sine-beta-gamma mapping parameter");
  app.add_option("--gamma", c.gamma, "sine-beta-gamma mapping parameter");
  app.add_option("--a0", c.a0, "blasius mapping A0");
  app.add_option("--a1", c.a1, "blasius mapping A1");
  app.add_option("--a2", c.a2, "blasius mapping A2");
  app.add_option("--lambda-stretch", c.lambda_stretch, "blasius coordinate stretch z = lambda eta");
  app.add_option("--bigA", c.big_a, "gelfand centre value A = u(0, 0)");
  app.add_option("--b0", c.b0, "gelfand mapping B0");
  app.add_option("--b1", c.b1, "gelfand mapping B1");
  app.add_option("--f-preset", c.f_preset, "gelfand boundary preset");

  app.add_option("--param", c.param, "sweep: parameter to vary");
  app.add_option("--from", c.from, "sweep: first value");
  app.add_option("--to", c.to, "sweep: last value");
  app.add_option("--count", c.count, "sweep: number of points");
  app.add_flag("--reoptimize", c.reoptimize, "sweep: refit c0 (and c1) at every point");

  app.add_option("--fit-order", c.fit_order, "optimize: order whose E_m is minimized")
      ->check(CLI::PositiveNumber);
  app.add_option("--c0-from", c.c0_from, "optimize: lower end of the c0 range");
  app.add_option("--c0-to", c.c0_to, "optimize: upper end of the c0 range");
  app.add_option("--c1-from", c.c1_from, "optimize: lower end of the c1 range");
  app.add_option("--c1-to", c.c1_to, "optimize: upper end of the c1 range");
  app.add_option("--grid-count", c.grid_count, "optimize: grid points per axis")
      ->check(CLI::Range(3, 100000));

  app.add_option("--kind", c.kind, "validate-mapping: mapping kind")->check(CLI::IsMember(kMappingKinds));
  app.add_option("--budget", c.budget, "validate-mapping: probe budget");
  app.add_option("--seed", c.seed, "validate-mapping: seed of the linearity probe");

  app.add_option("--step", c.step, "oracle blasius: RK4 step")->check(CLI::PositiveNumber);
  app.add_option("--eta-max", c.eta_max, "oracle blasius: far-field position");
  app.add_option("--grid-n", c.grid_n, "oracle gelfand: grid points per axis (odd, >= 41)");

  if (const auto path = find_config_path(argc, argv)) check_config_file(*path, app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "oracle") return run_oracle(c, out);
  if (c.precision <= kDoubleDigits) return dispatch<double>(c, out, err);
  PrecisionScope scope(c.precision);
  return dispatch<Extended>(c, out, err);
}

int main(int argc, const char* const* argv) {
  try {
    const auto config = parse_args(argc, argv);
    if (!config) return kOk;
    return run(*config, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ExpressionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const OracleFailure& e) {
    std::cerr << "oracle failure: " << e.what() << '\n';
    return kOracleFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSolverError;
  }
}

}  // namespace mddim::cli
