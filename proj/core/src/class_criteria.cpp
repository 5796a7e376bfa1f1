#include "gft/class_criteria.hpp"

#include "gft/errors.hpp"

#include <cmath>

namespace gft {

ClassParams::ClassParams(double k, double lambda) : k_(k), lambda_(lambda) {
  if (!(k > 0.0 && k <= 1.0)) {
    throw DomainError("k must be in (0,1]");
  }
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError("lambda must be in [0,1)");
  }
}

RParams::RParams(double A, double B, Complex tau) : A_(A), B_(B), tau_(tau) {
  if (!(B >= -1.0 && B < A && A <= 1.0)) {
    throw DomainError("A and B must satisfy -1 <= B < A <= 1");
  }
  if (!(std::abs(tau) > 0.0) || !std::isfinite(std::abs(tau))) {
    throw DomainError("tau must be finite and nonzero");
  }
}

std::string_view to_string(Verdict v) {
  switch (v) {
  case Verdict::Holds:
    return "Holds";
  case Verdict::Fails:
    return "Fails";
  case Verdict::Marginal:
    return "Marginal";
  }
  return "?";
}

Verdict classify(double lhs, double rhs, double band) {
  const double margin = rhs - lhs;
  if (std::isnan(margin)) {
    return Verdict::Fails;
  }
  if (std::abs(margin) <= band) {
    return Verdict::Marginal;
  }
  return margin > 0.0 ? Verdict::Holds : Verdict::Fails;
}

double weight_S(int n, const ClassParams& c) {
  if (n < 2) {
    throw DomainError("weights are defined for n >= 2");
  }
  return n * c.slope() - (1.0 - c.lambda()) * (1.0 - c.k());
}

double weight_C(int n, const ClassParams& c) { return n * weight_S(n, c); }

LemmaSum lemma_sum(const CoefficientSeq& f, const ClassParams& c,
                   Criterion which) {
  if (!f.is_negative()) {
    throw DomainError("lemma_sum is defined for negative-tail sequences only");
  }
  auto w = [&](int n) {
    return which == Criterion::S ? weight_S(n, c) : weight_C(n, c);
  };
  const auto b = f.magnitudes();
  // smallest terms first
  double lhs = 0.0;
  for (std::size_t i = b.size(); i-- > 0;) {
    lhs += w(static_cast<int>(i) + 2) * b[i];
  }
  const int N = f.truncation_order();
  const double tail = w(N + 1) * f.tail_bound();
  const double rhs = 2.0 * c.k();

  MembershipReport report;
  report.predicate = which == Criterion::S ? "lemma_S" : "lemma_C";
  report.lhs = lhs;
  report.rhs = rhs;
  report.margin = rhs - lhs;
  report.truncation_order = N;
  // The true sum lies in [lhs, lhs + tail]; a Holds must survive the tail.
  if (std::abs(report.margin) <= kBoundaryTol ||
      (report.margin > 0.0 && report.margin <= tail + kBoundaryTol)) {
    report.verdict = Verdict::Marginal;
  } else {
    report.verdict = report.margin > 0.0 ? Verdict::Holds : Verdict::Fails;
  }
  return {lhs, report};
}

double dixit_pal_bound(int n, const RParams& r) {
  if (n < 2) {
    throw DomainError("coefficient bound is defined for n >= 2");
  }
  return r.scale() / n;
}

CoefficientSeq worst_case_R_coeffs(const RParams& r, int N) {
  if (N < 2) {
    throw DomainError("worst-case sequence needs N >= 2");
  }
  std::vector<Complex> a;
  a.reserve(static_cast<std::size_t>(N - 1));
  for (int n = 2; n <= N; ++n) {
    a.emplace_back(dixit_pal_bound(n, r), 0.0);
  }
  return CoefficientSeq::general(std::move(a), 0.0);
}

} // namespace gft
