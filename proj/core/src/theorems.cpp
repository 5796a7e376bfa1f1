#include "gft/theorems.hpp"

#include "gft/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1 - e^{-m}(1+m)) / m, with a cancellation-free series for small m:
// sum_{j>=2} (-1)^j (j-1) m^{j-1} / j!
double reduced_tail(double m) {
  if (m < 0.1) {
    double sum = 0.0;
    double pw = 1.0; // m^{j-1}/j! at j = 1 is 1
    for (int j = 2; j < 24; ++j) {
      pw *= m / static_cast<double>(j);
      const double term = static_cast<double>(j - 1) * pw;
      sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
  }
  return (-std::expm1(-m) - m * std::exp(-m)) / m;
}

double integral_bracket(double m, const ClassParams& c) {
  return c.slope() * -std::expm1(-m) +
         (1.0 - c.lambda()) * (c.k() - 1.0) * reduced_tail(m);
}

ClassParams effective(PredicateId pid, const ClassParams& c) {
  return is_corollary(pid) ? ClassParams(c.k(), 0.0) : c;
}

const RParams& require_r(PredicateId pid, const std::optional<RParams>& r) {
  if (!r) {
    throw MissingRParams(std::string(to_string(pid)) +
                         " needs A, B and tau");
  }
  return *r;
}

} // namespace

std::string_view to_string(PredicateId pid) {
  switch (pid) {
  case PredicateId::T1_F_in_S:
    return "T1_F_in_S";
  case PredicateId::T2_F_in_C:
    return "T2_F_in_C";
  case PredicateId::T3_G_in_C:
    return "T3_G_in_C";
  case PredicateId::T4_G_in_S:
    return "T4_G_in_S";
  case PredicateId::T5_I_in_S:
    return "T5_I_in_S";
  case PredicateId::T6_I_in_C:
    return "T6_I_in_C";
  case PredicateId::C1_F_in_Sk:
    return "C1_F_in_Sk";
  case PredicateId::C2_F_in_Ck:
    return "C2_F_in_Ck";
  case PredicateId::C3_I_in_Sk:
    return "C3_I_in_Sk";
  case PredicateId::C4_I_in_Ck:
    return "C4_I_in_Ck";
  case PredicateId::C5_G_in_Ck:
    return "C5_G_in_Ck";
  case PredicateId::C6_G_in_Sk:
    return "C6_G_in_Sk";
  }
  return "?";
}

std::optional<PredicateId> parse_predicate(std::string_view name) {
  for (auto pid : kAllPredicates) {
    if (to_string(pid) == name) {
      return pid;
    }
  }
  return std::nullopt;
}

PredicateId parent_of(PredicateId pid) {
  switch (pid) {
  case PredicateId::C1_F_in_Sk:
    return PredicateId::T1_F_in_S;
  case PredicateId::C2_F_in_Ck:
    return PredicateId::T2_F_in_C;
  case PredicateId::C3_I_in_Sk:
    return PredicateId::T5_I_in_S;
  case PredicateId::C4_I_in_Ck:
    return PredicateId::T6_I_in_C;
  case PredicateId::C5_G_in_Ck:
    return PredicateId::T3_G_in_C;
  case PredicateId::C6_G_in_Sk:
    return PredicateId::T4_G_in_S;
  default:
    return pid;
  }
}

bool is_corollary(PredicateId pid) { return parent_of(pid) != pid; }

bool needs_rparams(PredicateId pid) {
  const auto base = parent_of(pid);
  return base == PredicateId::T5_I_in_S || base == PredicateId::T6_I_in_C;
}

Criterion criterion_of(PredicateId pid) {
  switch (parent_of(pid)) {
  case PredicateId::T1_F_in_S:
  case PredicateId::T4_G_in_S:
  case PredicateId::T5_I_in_S:
    return Criterion::S;
  default:
    return Criterion::C;
  }
}

double t1_lhs(const PoissonParams& p, const ClassParams& c) {
  const double m = p.m();
  if (m > kOverflowM) {
    return kInf;
  }
  return c.slope() * m * std::exp(m);
}

double t2_lhs(const PoissonParams& p, const ClassParams& c) {
  const double m = p.m();
  if (m > kOverflowM) {
    return kInf;
  }
  const double k = c.k();
  const double lam = c.lambda();
  const double em = std::exp(m);
  return c.slope() * m * m * em + 2.0 * (1.0 + 2.0 * k + k * lam - lam) * m * em;
}

double t4_lhs(const PoissonParams& p, const ClassParams& c) {
  return integral_bracket(p.m(), c);
}

double t5_lhs(const PoissonParams& p, const ClassParams& c, const RParams& r) {
  return r.scale() * integral_bracket(p.m(), c);
}

double t6_lhs(const PoissonParams& p, const ClassParams& c, const RParams& r) {
  const double m = p.m();
  return r.scale() * (c.slope() * m + 2.0 * c.k() * -std::expm1(-m));
}

double predicate_lhs(PredicateId pid, const PoissonParams& p,
                     const ClassParams& c, const std::optional<RParams>& r) {
  const ClassParams ce = effective(pid, c);
  switch (parent_of(pid)) {
  case PredicateId::T1_F_in_S:
  case PredicateId::T3_G_in_C: // same condition as T1
    return t1_lhs(p, ce);
  case PredicateId::T2_F_in_C:
    return t2_lhs(p, ce);
  case PredicateId::T4_G_in_S:
    return t4_lhs(p, ce);
  case PredicateId::T5_I_in_S:
    return t5_lhs(p, ce, require_r(pid, r));
  case PredicateId::T6_I_in_C:
    return t6_lhs(p, ce, require_r(pid, r));
  default:
    break;
  }
  return kInf;
}

MembershipReport evaluate(PredicateId pid, const PoissonParams& p,
                          const ClassParams& c, const std::optional<RParams>& r) {
  MembershipReport report;
  report.predicate = std::string(to_string(pid));
  report.lhs = predicate_lhs(pid, p, c, r);
  report.rhs = 2.0 * c.k();
  report.margin = report.rhs - report.lhs;
  report.verdict = classify(report.lhs, report.rhs);
  return report;
}

CoefficientSeq predicate_function(PredicateId pid, const PoissonParams& p,
                                  const std::optional<RParams>& r,
                                  const TruncationPolicy& policy) {
  switch (parent_of(pid)) {
  case PredicateId::T1_F_in_S:
  case PredicateId::T2_F_in_C:
    return coeffs_F(p, policy);
  case PredicateId::T3_G_in_C:
  case PredicateId::T4_G_in_S:
    return coeffs_G(p, policy);
  default:
    break;
  }
  const RParams& rp = require_r(pid, r);
  const int N = choose_truncation(p, policy, WeightGrowth::Quadratic);
  return magnitudes(apply_operator_I(worst_case_R_coeffs(rp, N), p));
}

CrosscheckDetail crosscheck_detail(PredicateId pid, const PoissonParams& p,
                                   const ClassParams& c,
                                   const std::optional<RParams>& r,
                                   const TruncationPolicy& policy) {
  const ClassParams ce = effective(pid, c);
  const CoefficientSeq f = predicate_function(pid, p, r, policy);
  const double series = lemma_sum(f, ce, criterion_of(pid)).lhs;
  const double lhs = predicate_lhs(pid, p, ce, r);
  const double two_k = 2.0 * ce.k();

  double closed = lhs;
  switch (parent_of(pid)) {
  case PredicateId::T1_F_in_S:
  case PredicateId::T2_F_in_C:
  case PredicateId::T3_G_in_C:
    if (p.m() > kOverflowM) {
      throw DomainError("crosscheck of exponential conditions needs m <= 700");
    }
    // sum w b_n = e^{-m} (lhs + 2k(e^m - 1)) = 2k + e^{-m}(lhs - 2k)
    closed = two_k + std::exp(-p.m()) * (lhs - two_k);
    break;
  default:
    break;
  }
  return {closed, series, std::abs(closed - series), f.truncation_order()};
}

double crosscheck(PredicateId pid, const PoissonParams& p, const ClassParams& c,
                  const std::optional<RParams>& r,
                  const TruncationPolicy& policy) {
  return crosscheck_detail(pid, p, c, r, policy).residual;
}

} // namespace gft
