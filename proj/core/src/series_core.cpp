#include "gft/series_core.hpp"

#include "gft/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gft {

namespace {

// Above this e^{-m} underflows and the multiplicative recurrence loses
// everything; switch to log space.
constexpr double kRecurrenceMaxM = 700.0;

double weight(WeightGrowth growth, int n) {
  switch (growth) {
  case WeightGrowth::Constant:
    return 1.0;
  case WeightGrowth::Linear:
    return static_cast<double>(n);
  case WeightGrowth::Quadratic:
    return static_cast<double>(n) * static_cast<double>(n);
  }
  return 1.0;
}

// Probabilities c_2..c_N by the recurrence c_n = c_{n-1} m / (n-1).
std::vector<double> poisson_run(double m, int N) {
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(std::max(N - 1, 0)));
  if (N < 2) {
    return c;
  }
  if (m <= kRecurrenceMaxM) {
    double v = m * std::exp(-m);
    c.push_back(v);
    for (int n = 3; n <= N; ++n) {
      v *= m / static_cast<double>(n - 1);
      c.push_back(v);
    }
  } else {
    const double lm = std::log(m);
    for (int n = 2; n <= N; ++n) {
      c.push_back(std::exp(-m + (n - 1) * lm - std::lgamma(static_cast<double>(n))));
    }
  }
  return c;
}

// Geometric bound on sum_{n>N} c_n given c_N, valid once N >= 2m.
double unweighted_tail(double m, int N, double cN) {
  const double rho = m / static_cast<double>(N);
  return cN * rho / (1.0 - rho);
}

} // namespace

PoissonParams::PoissonParams(double m) : m_(m) {
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw DomainError("m must be > 0");
  }
}

void TruncationPolicy::validate() const {
  if (!(eps > 0.0)) {
    throw DomainError("eps must be > 0");
  }
  if (n_min < 2 || n_min > n_max) {
    throw DomainError("truncation bounds must satisfy 2 <= n_min <= n_max");
  }
}

std::string_view to_string(ExpSumKind kind) {
  switch (kind) {
  case ExpSumKind::Shift1:
    return "Shift1";
  case ExpSumKind::Shift2:
    return "Shift2";
  case ExpSumKind::Shift3:
    return "Shift3";
  case ExpSumKind::OverNFact:
    return "OverNFact";
  case ExpSumKind::PowNOverNFact:
    return "PowNOverNFact";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// CoefficientSeq

CoefficientSeq CoefficientSeq::negative(std::vector<double> magnitudes,
                                        double tail_bound,
                                        std::optional<double> m) {
  if (!std::isfinite(tail_bound) || tail_bound < 0.0) {
    throw DomainError("tail_bound must be finite and >= 0");
  }
  for (double b : magnitudes) {
    if (!(b >= 0.0) || !std::isfinite(b)) {
      throw DomainError("negative-tail magnitudes must be finite and >= 0");
    }
  }
  CoefficientSeq s;
  s.convention_ = SignConvention::NegativeTail;
  s.neg_ = std::move(magnitudes);
  s.tail_bound_ = tail_bound;
  s.m_ = m;
  return s;
}

CoefficientSeq CoefficientSeq::general(std::vector<Complex> coefficients,
                                       double tail_bound,
                                       std::optional<double> m) {
  if (!std::isfinite(tail_bound) || tail_bound < 0.0) {
    throw DomainError("tail_bound must be finite and >= 0");
  }
  CoefficientSeq s;
  s.convention_ = SignConvention::GeneralTail;
  s.gen_ = std::move(coefficients);
  s.tail_bound_ = tail_bound;
  s.m_ = m;
  return s;
}

CoefficientSeq CoefficientSeq::identity(SignConvention convention) {
  return convention == SignConvention::NegativeTail ? negative({}, 0.0)
                                                    : general({}, 0.0);
}

int CoefficientSeq::truncation_order() const noexcept {
  return std::max(2, static_cast<int>(size()) + 1);
}

Complex CoefficientSeq::signed_coeff(int n) const noexcept {
  if (n == 1) {
    return {1.0, 0.0};
  }
  if (n < 2 || static_cast<std::size_t>(n - 2) >= size()) {
    return {0.0, 0.0};
  }
  const auto i = static_cast<std::size_t>(n - 2);
  return is_negative() ? Complex{-neg_[i], 0.0} : gen_[i];
}

double CoefficientSeq::magnitude(int n) const noexcept {
  if (n < 2 || static_cast<std::size_t>(n - 2) >= size()) {
    return 0.0;
  }
  const auto i = static_cast<std::size_t>(n - 2);
  return is_negative() ? neg_[i] : std::abs(gen_[i]);
}

// ---------------------------------------------------------------------------

double poisson_coeff(const PoissonParams& p, int n) {
  if (n < 2) {
    throw DomainError("poisson_coeff needs n >= 2");
  }
  const double m = p.m();
  if (m > kRecurrenceMaxM) {
    return std::exp(-m + (n - 1) * std::log(m) - std::lgamma(static_cast<double>(n)));
  }
  double v = m * std::exp(-m);
  for (int j = 3; j <= n; ++j) {
    v *= m / static_cast<double>(j - 1);
  }
  return v;
}

// Rule: N >= max(n_min, 2*ceil(m) + 10), and safeguard * w(N) * c_N < eps,
// where c_N is the Poisson probability at N. Past the floor the ratio of
// consecutive weighted terms is rho <= (w(N+1)/w(N)) * m/N < 2/3 and
// decreasing, so sum_{n>N} w(n) c_n <= w(N) c_N * rho/(1-rho). The safeguard
// max(2, rho/(1-rho)) therefore certifies a tail below eps.
int choose_truncation(const PoissonParams& p, const TruncationPolicy& policy,
                      WeightGrowth growth) {
  policy.validate();
  const double m = p.m();
  const double floor_d = 2.0 * std::ceil(m) + 10.0;
  if (floor_d > static_cast<double>(policy.n_max)) {
    throw TruncationNotReached("truncation floor 2*ceil(m)+10 exceeds n_max");
  }
  int N = std::max(policy.n_min, static_cast<int>(floor_d));
  double c = poisson_coeff(p, N);
  for (;; ++N) {
    const double rho = weight(growth, N + 1) / weight(growth, N) * m /
                       static_cast<double>(N);
    const double safeguard = std::max(2.0, rho / (1.0 - rho));
    if (safeguard * weight(growth, N) * c < policy.eps) {
      return N;
    }
    if (N >= policy.n_max) {
      throw TruncationNotReached("tail bound did not reach eps=" +
                                 std::to_string(policy.eps) + " by n_max=" +
                                 std::to_string(policy.n_max));
    }
    c *= m / static_cast<double>(N);
  }
}

CoefficientSeq coeffs_F(const PoissonParams& p, const TruncationPolicy& policy) {
  const int N = choose_truncation(p, policy, WeightGrowth::Quadratic);
  auto c = poisson_run(p.m(), N);
  const double tail = unweighted_tail(p.m(), N, c.back());
  return CoefficientSeq::negative(std::move(c), tail, p.m());
}

CoefficientSeq coeffs_G(const PoissonParams& p, const TruncationPolicy& policy) {
  const int N = choose_truncation(p, policy, WeightGrowth::Quadratic);
  auto c = poisson_run(p.m(), N);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] /= static_cast<double>(i + 2);
  }
  const double tail = unweighted_tail(p.m(), N, c.back());
  return CoefficientSeq::negative(std::move(c), tail, p.m());
}

CoefficientSeq apply_operator_I(const CoefficientSeq& f, const PoissonParams& p) {
  if (f.is_negative()) {
    throw DomainError("apply_operator_I expects a general-tail sequence");
  }
  const int N = f.truncation_order();
  const auto c = poisson_run(p.m(), N);
  const auto a = f.coefficients();
  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = c[i] * a[i];
  }
  // Each discarded |a_n| is scaled by a probability, which past n-1 >= m
  // is at most c_{N+1}, and never more than 1.
  const double next = poisson_coeff(p, N + 1);
  const double scale = static_cast<double>(N) >= p.m() ? next : 1.0;
  return CoefficientSeq::general(std::move(out), f.tail_bound() * scale, p.m());
}

CoefficientSeq magnitudes(const CoefficientSeq& f) {
  if (f.is_negative()) {
    return f;
  }
  std::vector<double> b;
  b.reserve(f.size());
  for (const auto& a : f.coefficients()) {
    b.push_back(std::abs(a));
  }
  return CoefficientSeq::negative(std::move(b), f.tail_bound(), f.m());
}

CoefficientSeq z_derivative(const CoefficientSeq& f) {
  // The tail bound of n a_n is not implied by that of a_n; scale by the
  // first discarded index, which is exact for the geometric tails produced
  // here up to the ratio factor.
  const double tail = f.tail_bound() * static_cast<double>(f.truncation_order() + 1);
  if (f.is_negative()) {
    std::vector<double> b(f.magnitudes().begin(), f.magnitudes().end());
    for (std::size_t i = 0; i < b.size(); ++i) {
      b[i] *= static_cast<double>(i + 2);
    }
    return CoefficientSeq::negative(std::move(b), tail, f.m());
  }
  std::vector<Complex> a(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] *= static_cast<double>(i + 2);
  }
  return CoefficientSeq::general(std::move(a), tail, f.m());
}

// ---------------------------------------------------------------------------
// Shifted exponential sums

double shifted_exp_sum(const PoissonParams& p, ExpSumKind kind) {
  const double m = p.m();
  switch (kind) {
  case ExpSumKind::Shift1:
    return std::expm1(m);
  case ExpSumKind::Shift2:
    return m * std::exp(m);
  case ExpSumKind::Shift3:
    return m * m * std::exp(m);
  case ExpSumKind::OverNFact:
    return shifted_exp_sum(p, ExpSumKind::PowNOverNFact) / m;
  case ExpSumKind::PowNOverNFact: {
    if (m < 1e-2) {
      // e^m - 1 - m = sum_{j>=2} m^j/j!, cancellation-free
      double term = m * m / 2.0;
      double sum = 0.0;
      for (int j = 2; j < 20 && term != 0.0; ++j) {
        sum += term;
        term *= m / static_cast<double>(j + 1);
      }
      return sum;
    }
    return std::expm1(m) - m;
  }
  }
  return 0.0;
}

double shifted_exp_term(double m, ExpSumKind kind, int n) {
  // m^j / j! evaluated in log space so that large n never overflows
  auto pow_over_fact = [m](int power, int fact) {
    if (fact < 0) {
      return 0.0;
    }
    return std::exp(power * std::log(m) - std::lgamma(static_cast<double>(fact) + 1.0));
  };
  switch (kind) {
  case ExpSumKind::Shift1:
    return n >= 2 ? pow_over_fact(n - 1, n - 1) : 0.0;
  case ExpSumKind::Shift2:
    return n >= 2 ? pow_over_fact(n - 1, n - 2) : 0.0;
  case ExpSumKind::Shift3:
    return n >= 3 ? pow_over_fact(n - 1, n - 3) : 0.0;
  case ExpSumKind::OverNFact:
    return n >= 2 ? pow_over_fact(n - 1, n) : 0.0;
  case ExpSumKind::PowNOverNFact:
    return n >= 2 ? pow_over_fact(n, n) : 0.0;
  }
  return 0.0;
}

double shifted_exp_partial(const PoissonParams& p, ExpSumKind kind, int N) {
  // Sum smallest-first; the terms past the Poisson mode decrease quickly.
  double sum = 0.0;
  for (int n = N; n >= 2; --n) {
    sum += shifted_exp_term(p.m(), kind, n);
  }
  return sum;
}

WeightGrowth growth_of(ExpSumKind kind) {
  // Term n relative to m^{n-1}/(n-1)!: Shift2 carries (n-1), Shift3
  // (n-1)(n-2), the others are at most m times the base term.
  switch (kind) {
  case ExpSumKind::Shift2:
    return WeightGrowth::Linear;
  case ExpSumKind::Shift3:
    return WeightGrowth::Quadratic;
  default:
    return WeightGrowth::Constant;
  }
}

} // namespace gft
