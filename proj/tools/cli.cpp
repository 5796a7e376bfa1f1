#include "cli.hpp"

#include "gft/analytic_verify.hpp"
#include "gft/errors.hpp"
#include "gft/report_json.hpp"
#include "gft/suite.hpp"
#include "gft/threshold_solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace gft::cli {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr double kCrosscheckTol = 1e-9;

// ---------------------------------------------------------------------------
// Parameter assembly, with the offending flag in every message

double require(const std::optional<double>& v, const char* flag) {
  if (!v) {
    throw UsageError(std::string("missing ") + flag);
  }
  return *v;
}

PredicateId require_predicate(const RunConfig& cfg) {
  if (!cfg.predicate) {
    throw UsageError("missing --predicate");
  }
  const auto pid = parse_predicate(*cfg.predicate);
  if (!pid) {
    std::string valid;
    for (auto p : kAllPredicates) {
      valid += (valid.empty() ? "" : ", ") + std::string(to_string(p));
    }
    throw UsageError("--predicate: unknown id '" + *cfg.predicate +
                     "' (valid: " + valid + ")");
  }
  return *pid;
}

PoissonParams poisson_from(const RunConfig& cfg) {
  const double m = require(cfg.m, "--m");
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw UsageError("--m: m must be > 0");
  }
  return PoissonParams(m);
}

ClassParams class_from(const RunConfig& cfg) {
  const double k = require(cfg.k, "--k");
  const double lambda = cfg.lambda.value_or(0.0);
  if (!(k > 0.0 && k <= 1.0)) {
    throw UsageError("--k: k must be in (0,1]");
  }
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw UsageError("--lambda: lambda must be in [0,1)");
  }
  return {k, lambda};
}

std::optional<RParams> rparams_from(const RunConfig& cfg, PredicateId pid) {
  if (!needs_rparams(pid)) {
    return std::nullopt;
  }
  const double A = require(cfg.A, "--A (required for this predicate)");
  const double B = require(cfg.B, "--B (required for this predicate)");
  if (!cfg.tau_re && !cfg.tau_im) {
    throw UsageError("missing --tau-re/--tau-im (required for this predicate)");
  }
  if (!(B >= -1.0 && B < A && A <= 1.0)) {
    throw UsageError("--A/--B: must satisfy -1 <= B < A <= 1");
  }
  const Complex tau{cfg.tau_re.value_or(0.0), cfg.tau_im.value_or(0.0)};
  if (!(std::abs(tau) > 0.0) || !std::isfinite(std::abs(tau))) {
    throw UsageError("--tau-re/--tau-im: tau must be finite and nonzero");
  }
  return RParams(A, B, tau);
}

TruncationPolicy policy_from(const RunConfig& cfg) {
  if (!(cfg.eps > 0.0)) {
    throw UsageError("--eps: eps must be > 0");
  }
  TruncationPolicy policy;
  policy.eps = cfg.eps;
  return policy;
}

GridSpec grid_from(const RunConfig& cfg) {
  GridSpec grid;
  if (!cfg.radii.empty()) {
    grid.radii = cfg.radii;
  }
  if (cfg.points) {
    grid.points_per_circle = *cfg.points;
  }
  for (double r : grid.radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw UsageError("--radii: every radius must be in (0,1)");
    }
  }
  if (grid.points_per_circle < 8) {
    throw UsageError("--points: points per circle must be >= 8");
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Formatting

std::string num(double x) {
  if (!std::isfinite(x)) {
    return "";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(const Json& j) {
  if (j.is_null()) {
    return "";
  }
  if (j.is_number_float()) {
    return num(j.get<double>());
  }
  if (j.is_boolean()) {
    return j.get<bool>() ? "true" : "false";
  }
  if (j.is_string()) {
    return j.get<std::string>();
  }
  return j.dump();
}

// Writes rows of a JSON array as CSV with the given column order.
void write_csv(std::ostream& os, const std::vector<std::string>& columns,
               const Json& rows) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    os << (i ? "," : "") << columns[i];
  }
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << num(row.at(columns[i]));
    }
    os << '\n';
  }
}

void write_human(std::ostream& os, const Json& rows) {
  for (const auto& row : rows) {
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      os << (first ? "" : "  ") << key << '=' << num(value);
      first = false;
    }
    os << '\n';
  }
}

// A report as one record plus its CSV columns.
struct Emission {
  Json document;              // full JSON output
  Json rows;                  // flattened records for csv/human
  std::vector<std::string> columns;
};

void emit(const Emission& e, OutputFormat format, std::ostream& os) {
  switch (format) {
  case OutputFormat::Json:
    os << canonical_dump(e.document) << '\n';
    break;
  case OutputFormat::Csv:
    write_csv(os, e.columns, e.rows);
    break;
  case OutputFormat::Human:
    write_human(os, e.rows);
    break;
  }
}

Emission single(Json record, std::vector<std::string> columns) {
  // CSV flattening of the argmax pair
  Json row = record;
  if (row.contains("argmax")) {
    row["argmax_re"] = record["argmax"][0];
    row["argmax_im"] = record["argmax"][1];
    row.erase("argmax");
  }
  return {std::move(record), Json::array({std::move(row)}), std::move(columns)};
}

int verdict_code(Verdict v) {
  switch (v) {
  case Verdict::Holds:
    return kSuccess;
  case Verdict::Fails:
    return kFails;
  case Verdict::Marginal:
    return kMarginal;
  }
  return kFails;
}

const std::vector<std::string> kReportColumns{"predicate", "verdict", "lhs", "rhs",
                                              "margin", "residual", "N"};

// ---------------------------------------------------------------------------
// Commands

int cmd_check(const RunConfig& cfg, Emission& e) {
  const auto pid = require_predicate(cfg);
  const auto p = poisson_from(cfg);
  const auto c = class_from(cfg);
  const auto r = rparams_from(cfg, pid);
  const auto report = evaluate(pid, p, c, r);
  e = single(to_json(report), kReportColumns);
  return verdict_code(report.verdict);
}

int cmd_crosscheck(const RunConfig& cfg, Emission& e) {
  const auto pid = require_predicate(cfg);
  const auto p = poisson_from(cfg);
  const auto c = class_from(cfg);
  const auto r = rparams_from(cfg, pid);
  auto report = evaluate(pid, p, c, r);
  const auto detail = crosscheck_detail(pid, p, c, r, policy_from(cfg));
  report.crosscheck_residual = detail.residual;
  report.truncation_order = detail.truncation_order;
  e = single(to_json(report), kReportColumns);
  return detail.residual < kCrosscheckTol ? kSuccess : kFails;
}

int cmd_threshold(const RunConfig& cfg, Emission& e) {
  const auto pid = require_predicate(cfg);
  const auto c = class_from(cfg);
  const auto r = rparams_from(cfg, pid);
  if (!(cfg.tol > 0.0)) {
    throw UsageError("--tol: tol must be > 0");
  }
  const auto result = solve_m_star(pid, c, r, cfg.tol);
  e = single(to_json(result), {"predicate", "outcome", "m_star", "bracket", "evals"});
  return kSuccess;
}

int cmd_grid(const RunConfig& cfg, Emission& e) {
  const auto pid = require_predicate(cfg);
  const auto p = poisson_from(cfg);
  const auto c = class_from(cfg);
  const auto r = rparams_from(cfg, pid);
  const auto grid = grid_from(cfg);
  const auto f = predicate_function(pid, p, r, policy_from(cfg));
  const ClassParams ce = is_corollary(pid) ? ClassParams(c.k(), 0.0) : c;
  const auto id = criterion_of(pid) == Criterion::S ? ConditionId::S_cond
                                                      : ConditionId::C_cond;
  const auto report = grid_check(f, id, ce, grid);
  e = single(to_json(report),
             {"condition", "max", "argmax_re", "argmax_im", "violations", "skipped"});
  return report.violations == 0 ? kSuccess : kFails;
}

int cmd_identities(const RunConfig& cfg, Emission& e) {
  const auto p = poisson_from(cfg);
  Json rows = Json::array();
  bool passed = true;
  for (const auto& row : identity_table(p, policy_from(cfg))) {
    rows.push_back({{"kind", std::string(to_string(row.kind))},
                    {"closed", row.closed},
                    {"partial", row.partial},
                    {"N", row.N},
                    {"error", row.error},
                    {"tolerance", row.tolerance},
                    {"passed", row.passed}});
    passed = passed && row.passed;
  }
  e.document = {{"m", p.m()}, {"rows", rows}, {"passed", passed}};
  e.rows = rows;
  e.columns = {"kind", "closed", "partial", "N", "error", "tolerance", "passed"};
  return passed ? kSuccess : kFails;
}

int cmd_suite(const RunConfig& cfg, Emission& e) {
  SuiteOptions options;
  options.seed = cfg.seed;
  options.policy = policy_from(cfg);
  e.document = run_suite(options);
  e.rows = e.document.at("checks");
  e.columns = {"name", "draws", "failures", "max_error", "passed"};
  return e.document.at("passed").get<bool>() ? kSuccess : kFails;
}

void add_common_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--predicate", cfg.predicate, "Predicate id, e.g. T1_F_in_S");
  sub->add_option("--m", cfg.m, "Poisson parameter m > 0");
  sub->add_option("--k", cfg.k, "Class parameter k in (0,1]");
  sub->add_option("--lambda", cfg.lambda, "Class parameter lambda in [0,1) (default 0)");
  sub->add_option("--A", cfg.A, "R^tau(A,B) parameter A");
  sub->add_option("--B", cfg.B, "R^tau(A,B) parameter B");
  sub->add_option("--tau-re", cfg.tau_re, "Real part of tau");
  sub->add_option("--tau-im", cfg.tau_im, "Imaginary part of tau");
  sub->add_option("--eps", cfg.eps, "Truncation tail target")->capture_default_str();
  sub->add_option("--tol", cfg.tol, "Threshold bracket width")->capture_default_str();
  sub->add_option("--radii", cfg.radii, "Grid radii, comma separated")->delimiter(',');
  sub->add_option("--points", cfg.points, "Grid points per circle");
  sub->add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"json", OutputFormat::Json},
                                              {"csv", OutputFormat::Csv},
                                              {"human", OutputFormat::Human}}));
  sub->add_option("--out", cfg.out_path, "Write the report to this file");
}

} // namespace

ParseOutcome parse(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Membership checks for Poisson distribution series in "
               "S(k,lambda), C(k,lambda) and R^tau(A,B)",
               "gftcheck"};
  app.require_subcommand(1);

  const std::pair<const char*, Command> commands[] = {
      {"check", Command::Check},          {"crosscheck", Command::Crosscheck},
      {"threshold", Command::Threshold},  {"grid", Command::Grid},
      {"identities", Command::Identities}, {"suite", Command::Suite}};
  const char* descriptions[] = {
      "Evaluate a predicate's closed-form condition",
      "Compare the closed form with the truncated coefficient sum",
      "Solve for the boundary Poisson parameter m*",
      "Sample the analytic class condition on circles in the unit disk",
      "Check every shifted exponential sum against its partial sum",
      "Run the randomized property suite (seed from GFT_SEED)"};
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, descriptions[i]);
    add_common_flags(sub, cfg);
    subs.emplace_back(sub, commands[i].second);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return {std::nullopt, rc == 0 ? kSuccess : kUsage};
  }
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) {
      cfg.command = command;
    }
  }
  return {cfg, kSuccess};
}

bool apply_seed_env(RunConfig& config, std::ostream& err) {
  const char* raw = std::getenv("GFT_SEED");
  if (raw == nullptr || *raw == '\0') {
    return true;
  }
  try {
    std::size_t used = 0;
    const std::string s(raw);
    const auto v = std::stoull(s, &used);
    if (used != s.size() || s.front() == '-') {
      throw std::invalid_argument(s);
    }
    config.seed = v;
    return true;
  } catch (const std::exception&) {
    err << "error: GFT_SEED must be a nonnegative integer, got '" << raw << "'\n";
    return false;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Emission e;
  int code = kSuccess;
  try {
    switch (config.command) {
    case Command::Check:
      code = cmd_check(config, e);
      break;
    case Command::Crosscheck:
      code = cmd_crosscheck(config, e);
      break;
    case Command::Threshold:
      code = cmd_threshold(config, e);
      break;
    case Command::Grid:
      code = cmd_grid(config, e);
      break;
    case Command::Identities:
      code = cmd_identities(config, e);
      break;
    case Command::Suite:
      code = cmd_suite(config, e);
      break;
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const MissingRParams& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const InvalidTolerance& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const DomainError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const TruncationNotReached& ex) {
    err << "numeric failure: " << ex.what() << '\n';
    return kNumeric;
  }

  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "error: --out: cannot open '" << *config.out_path << "'\n";
      return kUsage;
    }
    emit(e, config.format, file);
  } else {
    emit(e, config.format, out);
  }
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  auto parsed = parse(argc, argv, out, err);
  if (!parsed.config) {
    return parsed.exit_code;
  }
  if (!apply_seed_env(*parsed.config, err)) {
    return kUsage;
  }
  return run(*parsed.config, out, err);
}

} // namespace gft::cli
