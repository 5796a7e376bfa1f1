#include "gft/suite.hpp"

#include "gft/analytic_verify.hpp"
#include "gft/theorems.hpp"
#include "gft/threshold_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gft {

namespace {

constexpr double kCrosscheckTol = 1e-9;
constexpr double kLambertW1 = 0.5671432904097838;

// One summary row; max_error is the worst observed error metric, 0 for
// pure pass/fail checks.
struct Check {
  std::string name;
  int draws = 0;
  int failures = 0;
  double max_error = 0.0;

  void observe(double err, bool ok) {
    ++draws;
    max_error = std::max(max_error, err);
    if (!ok) {
      ++failures;
    }
  }

  Json json() const {
    return {{"name", name},
            {"draws", draws},
            {"failures", failures},
            {"max_error", number_or_null(max_error)},
            {"passed", failures == 0}};
  }
};

bool holds_or_marginal(Verdict v) { return v != Verdict::Fails; }

Check identities(ParamSampler& s, const TruncationPolicy& policy) {
  Check c{"identities"};
  for (int i = 0; i < 200; ++i) {
    const PoissonParams p(s.m());
    for (const auto& row : identity_table(p, policy)) {
      c.observe(row.error / row.tolerance, row.passed);
    }
  }
  return c;
}

Check crosschecks(ParamSampler& s, const TruncationPolicy& policy) {
  Check c{"crosscheck"};
  const PredicateId ids[] = {PredicateId::T1_F_in_S, PredicateId::T2_F_in_C,
                             PredicateId::T3_G_in_C, PredicateId::T4_G_in_S,
                             PredicateId::T5_I_in_S, PredicateId::T6_I_in_C};
  for (int i = 0; i < 200; ++i) {
    const PoissonParams p(s.m());
    const ClassParams cp = s.class_params();
    const RParams r = s.r_params();
    for (auto pid : ids) {
      const double res = crosscheck(pid, p, cp, r, policy);
      c.observe(res, res < kCrosscheckTol);
    }
  }
  return c;
}

Check equivalences(ParamSampler& s) {
  Check c{"equivalences"};
  for (int i = 0; i < 1000; ++i) {
    const PoissonParams p(s.m());
    const ClassParams cp = s.class_params();
    const RParams r = s.r_params();
    const ClassParams c0(cp.k(), 0.0);
    bool ok = evaluate(PredicateId::T3_G_in_C, p, cp).verdict ==
              evaluate(PredicateId::T1_F_in_S, p, cp).verdict;
    for (auto pid : kAllPredicates) {
      if (is_corollary(pid)) {
        ok = ok && evaluate(pid, p, cp, r).verdict ==
                       evaluate(parent_of(pid), p, c0, r).verdict;
      }
    }
    c.observe(0.0, ok);
  }
  return c;
}

Check inclusions(ParamSampler& s) {
  Check c{"inclusions"};
  for (int i = 0; i < 10000; ++i) {
    const PoissonParams p(s.m());
    const ClassParams cp = s.class_params();
    const RParams r = s.r_params();
    bool ok = true;
    if (evaluate(PredicateId::T2_F_in_C, p, cp).verdict == Verdict::Holds) {
      ok = holds_or_marginal(evaluate(PredicateId::T1_F_in_S, p, cp).verdict);
    }
    if (evaluate(PredicateId::T6_I_in_C, p, cp, r).verdict == Verdict::Holds) {
      ok = ok && holds_or_marginal(evaluate(PredicateId::T5_I_in_S, p, cp, r).verdict);
    }
    c.observe(0.0, ok);
  }
  return c;
}

Check threshold_fixture() {
  Check c{"threshold_T1_k1"};
  const auto res = solve_m_star(PredicateId::T1_F_in_S, ClassParams(1.0, 0.0),
                                std::nullopt, 1e-10);
  const double err = res.finite()
                         ? std::abs(std::get<FiniteThreshold>(res.outcome).m_star - kLambertW1)
                         : std::numeric_limits<double>::infinity();
  c.observe(err, err < 1e-9);
  return c;
}

Check bracket_identity(ParamSampler& s) {
  Check c{"bracket_identity"};
  for (int i = 0; i < 1000; ++i) {
    const PoissonParams p(s.m());
    const ClassParams cp = s.class_params();
    const RParams r = s.r_params();
    const double t5 = t5_lhs(p, cp, r);
    const double ref = r.scale() * t4_lhs(p, cp);
    const double rel = std::abs(t5 - ref) / std::max(std::abs(ref), 1e-300);
    c.observe(rel, rel <= 1e-14);
  }
  return c;
}

// Draws (m, k, lambda) until the T1 closed form sits on the requested side
// of 2k: lhs <= (1 - frac) 2k for holding, lhs >= (1 + frac) 2k for failing.
std::pair<PoissonParams, ClassParams> draw_t1(ParamSampler& s, bool holding,
                                              double frac, double max_m) {
  for (;;) {
    const PoissonParams p(s.m(max_m));
    const ClassParams cp = s.class_params();
    const double lhs = t1_lhs(p, cp);
    const double two_k = 2.0 * cp.k();
    if (holding ? lhs <= (1.0 - frac) * two_k : lhs >= (1.0 + frac) * two_k) {
      return {p, cp};
    }
  }
}

Check sufficiency(ParamSampler& s, const TruncationPolicy& policy) {
  Check c{"sufficiency_grid"};
  for (int i = 0; i < 20; ++i) {
    const auto [p, cp] = draw_t1(s, true, 0.01, 1.0);
    const auto rep = grid_check(coeffs_F(p, policy), ConditionId::S_cond, cp);
    c.observe(rep.max_value / cp.k(), rep.violations == 0);
  }
  for (int drawn = 0; drawn < 20;) {
    const PoissonParams p(s.m());
    const ClassParams cp = s.class_params();
    if (t4_lhs(p, cp) > 0.99 * 2.0 * cp.k()) {
      continue;
    }
    ++drawn;
    const auto rep = grid_check(coeffs_G(p, policy), ConditionId::S_cond, cp);
    c.observe(rep.max_value / cp.k(), rep.violations == 0);
  }
  return c;
}

Check witnesses(ParamSampler& s) {
  Check c{"failure_witness"};
  TruncationPolicy tight;
  tight.eps = 1e-14;
  for (int i = 0; i < 10; ++i) {
    const auto [p, cp] = draw_t1(s, false, 0.10, 10.0);
    const auto rep = witness_search(coeffs_F(p, tight), ConditionId::S_cond, cp);
    // reported as max value over k; passes when it exceeds 1
    c.observe(rep.max_value / cp.k(), rep.max_value > cp.k());
  }
  return c;
}

} // namespace

double ParamSampler::unit() {
  return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
}

double ParamSampler::open_closed(double lo, double hi) {
  return hi - (hi - lo) * unit();
}

ClassParams ParamSampler::class_params() {
  const double k = open_closed(0.0, 1.0);
  const double lambda = unit();
  return {k, lambda};
}

RParams ParamSampler::r_params() {
  double a = 0.0;
  double b = 0.0;
  do {
    a = -1.0 + 2.0 * unit();
    b = -1.0 + 2.0 * unit();
  } while (a == b);
  const double modulus = open_closed(0.0, 2.0);
  const double phase = 2.0 * std::numbers::pi * unit();
  return {std::max(a, b), std::min(a, b), std::polar(modulus, phase)};
}

std::vector<IdentityRow> identity_table(const PoissonParams& p,
                                        const TruncationPolicy& policy) {
  std::vector<IdentityRow> rows;
  for (auto kind : kAllExpSumKinds) {
    const int N = choose_truncation(p, policy, growth_of(kind));
    const double closed = shifted_exp_sum(p, kind);
    const double partial = shifted_exp_partial(p, kind, N);
    const double err = std::abs(closed - partial);
    const double tol = std::max(1e-10, 1e-12 * std::abs(closed));
    rows.push_back({kind, closed, partial, N, err, tol, err <= tol});
  }
  return rows;
}

Json run_suite(const SuiteOptions& options) {
  ParamSampler s(options.seed);
  std::vector<Check> checks;
  checks.push_back(identities(s, options.policy));
  checks.push_back(crosschecks(s, options.policy));
  checks.push_back(equivalences(s));
  checks.push_back(inclusions(s));
  checks.push_back(threshold_fixture());
  checks.push_back(bracket_identity(s));
  checks.push_back(sufficiency(s, options.policy));
  checks.push_back(witnesses(s));

  Json rows = Json::array();
  bool passed = true;
  for (const auto& c : checks) {
    rows.push_back(c.json());
    passed = passed && c.failures == 0;
  }
  return {{"seed", options.seed}, {"checks", std::move(rows)}, {"passed", passed}};
}

} // namespace gft
