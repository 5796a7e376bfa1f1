#pragma once

/// \file
/// \brief Coefficient criteria for S(k,lambda), C(k,lambda) and the
/// coefficient bound for R^tau(A,B).
///
/// For f(z) = z - sum b_n z^n with b_n >= 0:
///
///     f in S(k,lambda)  <=>  sum w_S(n) b_n <= 2k,
///     f in C(k,lambda)  <=>  sum n w_S(n) b_n <= 2k,
///
/// with w_S(n) = n((1-lambda) + k(1+lambda)) - (1-lambda)(1-k).

#include "gft/series_core.hpp"

#include <optional>
#include <string>

namespace gft {

/// Tolerance for adjudicating lhs <= 2k; inside the band the verdict is
/// Marginal.
inline constexpr double kBoundaryTol = 1e-9;

/// (k, lambda) with 0 < k <= 1 and 0 <= lambda < 1.
class ClassParams {
public:
  ClassParams(double k, double lambda);

  double k() const noexcept { return k_; }
  double lambda() const noexcept { return lambda_; }
  /// (1-lambda) + k(1+lambda), the slope of w_S in n.
  double slope() const noexcept { return (1.0 - lambda_) + k_ * (1.0 + lambda_); }

private:
  double k_;
  double lambda_;
};

/// (A, B, tau) with -1 <= B < A <= 1 and tau != 0.
class RParams {
public:
  RParams(double A, double B, Complex tau);

  double A() const noexcept { return A_; }
  double B() const noexcept { return B_; }
  Complex tau() const noexcept { return tau_; }
  /// (A-B)|tau|, the scale of every coefficient bound.
  double scale() const noexcept { return (A_ - B_) * std::abs(tau_); }

private:
  double A_;
  double B_;
  Complex tau_;
};

enum class Verdict { Holds, Fails, Marginal };

std::string_view to_string(Verdict v);

struct MembershipReport {
  std::string predicate;
  Verdict verdict = Verdict::Holds;
  double margin = 0.0; ///< rhs - lhs
  double lhs = 0.0;
  double rhs = 0.0; ///< 2k
  std::optional<double> crosscheck_residual;
  std::optional<int> truncation_order;
};

/// Verdict for lhs <= rhs with a Marginal band of half-width `band`.
Verdict classify(double lhs, double rhs, double band = kBoundaryTol);

enum class Criterion { S, C };

double weight_S(int n, const ClassParams& c);
double weight_C(int n, const ClassParams& c);

struct LemmaSum {
  double lhs;
  MembershipReport report;
};

/// Weighted coefficient sum of a NegativeTail f against 2k. The discarded
/// tail, estimated as weight(N+1) * tail_bound, widens the Marginal band.
LemmaSum lemma_sum(const CoefficientSeq& f, const ClassParams& c,
                   Criterion which);

/// (A-B)|tau| / n, the sharp bound on |a_n| over R^tau(A,B).
double dixit_pal_bound(int n, const RParams& r);

/// a_n = dixit_pal_bound(n) for 2 <= n <= N, as the degree-N polynomial
/// (tail_bound 0).
CoefficientSeq worst_case_R_coeffs(const RParams& r, int N);

} // namespace gft
