// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Draws use a fixed std::mt19937_64 stream local to this file.

#include "gft/analytic_verify.hpp"
#include "gft/report_json.hpp"
#include "gft/suite.hpp"
#include "gft/theorems.hpp"
#include "gft/threshold_solver.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace gft;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Draws {
public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}
  double unit() { return u_(rng_); }
  // (lo, hi]
  double m(double hi = 10.0) { return hi * (1.0 - unit()); }
  ClassParams cls() { return {1.0 - unit(), unit()}; }
  RParams rp() {
    double a = 0.0;
    double b = 0.0;
    do {
      a = -1.0 + 2.0 * unit();
      b = -1.0 + 2.0 * unit();
    } while (a == b);
    return {std::max(a, b), std::min(a, b), std::polar(2.0 * (1.0 - unit()), 2.0 * std::numbers::pi * unit())};
  }

private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> u_{0.0, 1.0};
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

long double oracle_closed(ExpSumKind kind, long double m) {
  switch (kind) {
  case ExpSumKind::Shift1:
    return std::expm1(m);
  case ExpSumKind::Shift2:
    return m * std::exp(m);
  case ExpSumKind::Shift3:
    return m * m * std::exp(m);
  case ExpSumKind::OverNFact:
    // sum_{j>=2} m^{j-1}/j!, summed directly to stay accurate for small m
    return oracle::partial_sum(
        [m](int j) { return std::pow(m, static_cast<long double>(j - 1)) / std::tgamma(static_cast<long double>(j + 1)); },
        2, 200);
  case ExpSumKind::PowNOverNFact:
    return oracle::partial_sum(
        [m](int j) { return std::pow(m, static_cast<long double>(j)) / std::tgamma(static_cast<long double>(j + 1)); },
        2, 200);
  }
  return 0.0L;
}

Outcome identity_suite() {
  Draws d(101);
  const TruncationPolicy policy;
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PoissonParams p(d.m());
    for (auto kind : kAllExpSumKinds) {
      const int N = choose_truncation(p, policy, growth_of(kind));
      const double partial = shifted_exp_partial(p, kind, N);
      const double closed = shifted_exp_sum(p, kind);
      const auto ref = static_cast<double>(oracle_closed(kind, p.m()));
      const double tol = std::max(1e-10, 1e-12 * std::abs(closed));
      const double err = std::abs(closed - partial);
      worst = std::max(worst, err / tol);
      if (err > tol || std::abs(ref - closed) > std::max(1e-10, 1e-12 * std::abs(ref))) {
        ++failures;
      }
    }
  }
  return {failures == 0, "failures=" + std::to_string(failures) + " worst_err/tol=" + fmt(worst)};
}

Outcome theorem_crosschecks() {
  Draws d(202);
  constexpr std::array pids{PredicateId::T1_F_in_S, PredicateId::T2_F_in_C, PredicateId::T4_G_in_S,
                            PredicateId::T5_I_in_S, PredicateId::T6_I_in_C};
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PoissonParams p(d.m());
    const ClassParams c = d.cls();
    const RParams r = d.rp();
    for (auto pid : pids) {
      const double res = crosscheck(pid, p, c, r);
      worst = std::max(worst, res);
      if (!(res < 1e-9)) {
        ++failures;
      }
    }
  }
  return {failures == 0, "failures=" + std::to_string(failures) + " max_residual=" + fmt(worst)};
}

Outcome predicate_equivalences() {
  Draws d(303);
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const PoissonParams p(d.m());
    const ClassParams c = d.cls();
    const RParams r = d.rp();
    if (evaluate(PredicateId::T3_G_in_C, p, c, r).verdict != evaluate(PredicateId::T1_F_in_S, p, c, r).verdict) {
      ++mismatches;
    }
    const ClassParams c0(c.k(), 0.0);
    for (auto pid : kAllPredicates) {
      if (!is_corollary(pid)) {
        continue;
      }
      if (evaluate(pid, p, c0, r).verdict != evaluate(parent_of(pid), p, c0, r).verdict) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, "mismatches=" + std::to_string(mismatches)};
}

Outcome inclusions() {
  Draws d(404);
  int violations = 0;
  int t2_holds = 0;
  int t6_holds = 0;
  for (int i = 0; i < 10000; ++i) {
    const PoissonParams p(d.m());
    const ClassParams c = d.cls();
    const RParams r = d.rp();
    if (evaluate(PredicateId::T2_F_in_C, p, c).verdict == Verdict::Holds) {
      ++t2_holds;
      if (evaluate(PredicateId::T1_F_in_S, p, c).verdict == Verdict::Fails) {
        ++violations;
      }
    }
    if (evaluate(PredicateId::T6_I_in_C, p, c, r).verdict == Verdict::Holds) {
      ++t6_holds;
      if (evaluate(PredicateId::T5_I_in_S, p, c, r).verdict == Verdict::Fails) {
        ++violations;
      }
    }
  }
  return {violations == 0, "violations=" + std::to_string(violations) + " t2_holds=" + std::to_string(t2_holds) +
                               " t6_holds=" + std::to_string(t6_holds)};
}

Outcome threshold_fixture() {
  const long double oracle_root =
      oracle::bisect([](long double m) { return m * std::exp(m) - 1.0L; }, 0.0L, 1.0L, 1e-16L);
  const auto res = solve_m_star(PredicateId::T1_F_in_S, ClassParams(1.0, 0.0), std::nullopt, 1e-10);
  if (!res.finite()) {
    return {false, "no finite threshold"};
  }
  const double ms = std::get<FiniteThreshold>(res.outcome).m_star;
  const double err = std::abs(ms - 0.5671432904097838);
  const double err_oracle = std::abs(ms - static_cast<double>(oracle_root));
  return {err < 1e-9 && err_oracle < 1e-9, "m*=" + std::to_string(ms) + " err=" + fmt(err)};
}

Outcome bracket_identity() {
  Draws d(606);
  int failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PoissonParams p(d.m());
    const ClassParams c = d.cls();
    const RParams r = d.rp();
    const double t5 = t5_lhs(p, c, r);
    const double expect = r.scale() * t4_lhs(p, c);
    const double rel = std::abs(t5 - expect) / std::abs(expect);
    worst = std::max(worst, rel);
    if (!(rel <= 1e-14)) {
      ++failures;
    }
  }
  return {failures == 0, "failures=" + std::to_string(failures) + " max_rel=" + fmt(worst)};
}

Outcome sufficiency_sampling() {
  Draws d(707);
  int t1_bad = 0;
  int t4_bad = 0;
  int witness_bad = 0;
  int t1 = 0;
  int t4 = 0;
  int wit = 0;
  int attempts = 0;
  TruncationPolicy tight;
  tight.eps = 1e-14;
  while ((t1 < 20 || t4 < 20 || wit < 10) && attempts < 100000) {
    ++attempts;
    const PoissonParams p(d.m());
    const ClassParams c = d.cls();
    const double two_k = 2.0 * c.k();
    const double l1 = t1_lhs(p, c);
    if (t1 < 20 && two_k - l1 >= 0.01 * two_k) {
      ++t1;
      if (grid_check(coeffs_F(p), ConditionId::S_cond, c).violations != 0) {
        ++t1_bad;
      }
    }
    if (t4 < 20 && two_k - t4_lhs(p, c) >= 0.01 * two_k) {
      ++t4;
      if (grid_check(coeffs_G(p), ConditionId::S_cond, c).violations != 0) {
        ++t4_bad;
      }
    }
    if (wit < 10 && l1 - two_k >= 0.10 * two_k) {
      ++wit;
      const auto rep = witness_search(coeffs_F(p, tight), ConditionId::S_cond, c, 0.999);
      if (!(rep.max_value > c.k())) {
        ++witness_bad;
      }
    }
  }
  const bool complete = t1 == 20 && t4 == 20 && wit == 10;
  return {complete && t1_bad == 0 && t4_bad == 0 && witness_bad == 0,
          "t1_violations=" + std::to_string(t1_bad) + " t4_violations=" + std::to_string(t4_bad) +
              " missing_witnesses=" + std::to_string(witness_bad)};
}

std::string run_cli_suite(const std::string& seed) {
  const std::string cmd = "GFT_SEED=" + seed + " \"" GFT_CLI_PATH "\" suite --format json";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    out.append(buf.data(), n);
  }
  pclose(pipe);
  return out;
}

Outcome determinism() {
  SuiteOptions opts;
  opts.seed = 987654321;
  const std::string a = canonical_dump(run_suite(opts));
  const std::string b = canonical_dump(run_suite(opts));
  const std::string c1 = run_cli_suite("987654321");
  const std::string c2 = run_cli_suite("987654321");
  const bool ok = a == b && !c1.empty() && c1 == c2 && c1.find(a) != std::string::npos;
  return {ok, "in_process_bytes=" + std::to_string(a.size()) + " cli_bytes=" + std::to_string(c1.size())};
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const Criterion criteria[] = {
      {"identity_suite", identity_suite, 1.0},
      {"theorem_crosschecks", theorem_crosschecks, 5.0},
      {"predicate_equivalences", predicate_equivalences, 0.0},
      {"inclusion_properties", inclusions, 0.0},
      {"threshold_fixture", threshold_fixture, 0.1},
      {"bracket_identity", bracket_identity, 0.0},
      {"sufficiency_sampling", sufficiency_sampling, 30.0},
      {"determinism", determinism, 0.0},
  };

  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    if (c.budget_s > 0.0 && secs >= c.budget_s) {
      o.passed = false;
      o.detail += " over_budget";
    }
    failed += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << index++ << " " << c.name << " (" << fmt(secs) << " s) "
              << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
