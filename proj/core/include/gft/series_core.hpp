#pragma once

/// \file
/// \brief Poisson-weighted coefficient sequences and certified truncation.
///
/// The Poisson distribution series
///
///     K(m,z) = z + sum_{n>=2} e^{-m} m^{n-1}/(n-1)! z^n
///
/// is entire, so every sequence here is a finite truncation plus a bound on
/// the discarded tail. F = 2z - K and G(m,z) = int_0^z F(m,t)/t dt have
/// negative tails; the operator I(m,z)f is the Hadamard product K * f.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

/// Poisson parameter m > 0.
class PoissonParams {
public:
  explicit PoissonParams(double m);

  double m() const noexcept { return m_; }

private:
  double m_;
};

struct TruncationPolicy {
  double eps = 1e-12;
  int n_min = 2;
  int n_max = 4096;

  /// Throws DomainError unless 0 < eps and 2 <= n_min <= n_max.
  void validate() const;
};

enum class SignConvention {
  NegativeTail, ///< f(z) = z - sum b_n z^n, b_n >= 0
  GeneralTail,  ///< f(z) = z + sum a_n z^n, a_n complex
};

enum class WeightGrowth { Constant, Linear, Quadratic };

enum class ExpSumKind { Shift1, Shift2, Shift3, OverNFact, PowNOverNFact };

inline constexpr ExpSumKind kAllExpSumKinds[] = {
    ExpSumKind::Shift1, ExpSumKind::Shift2, ExpSumKind::Shift3,
    ExpSumKind::OverNFact, ExpSumKind::PowNOverNFact};

std::string_view to_string(ExpSumKind kind);

/// Truncated normalized power series. Index 0 of the stored vector is the
/// coefficient of z^2; the leading coefficient 1 of z is implicit.
class CoefficientSeq {
public:
  /// NegativeTail sequence from magnitudes b_2..b_N (all >= 0).
  static CoefficientSeq negative(std::vector<double> magnitudes,
                                 double tail_bound,
                                 std::optional<double> m = std::nullopt);
  /// GeneralTail sequence from a_2..a_N.
  static CoefficientSeq general(std::vector<Complex> coefficients,
                                double tail_bound,
                                std::optional<double> m = std::nullopt);
  /// f(z) = z, with an empty tail.
  static CoefficientSeq identity(SignConvention convention);

  SignConvention convention() const noexcept { return convention_; }
  bool is_negative() const noexcept {
    return convention_ == SignConvention::NegativeTail;
  }

  /// Highest stored power N (>= 2; an empty tail still reports N = 2).
  int truncation_order() const noexcept;
  double tail_bound() const noexcept { return tail_bound_; }
  /// Poisson parameter the sequence was generated from, if any.
  std::optional<double> m() const noexcept { return m_; }

  /// Coefficient of z^n in the z + sum a_n z^n form (sign applied);
  /// 0 beyond the stored range. n = 1 gives 1.
  Complex signed_coeff(int n) const noexcept;
  /// |a_n| for n >= 2, 0 beyond the stored range.
  double magnitude(int n) const noexcept;

  /// Stored NegativeTail magnitudes b_2..b_N. Empty for GeneralTail.
  std::span<const double> magnitudes() const noexcept { return neg_; }
  /// Stored GeneralTail coefficients a_2..a_N. Empty for NegativeTail.
  std::span<const Complex> coefficients() const noexcept { return gen_; }

  std::size_t size() const noexcept {
    return is_negative() ? neg_.size() : gen_.size();
  }

private:
  CoefficientSeq() = default;

  SignConvention convention_ = SignConvention::NegativeTail;
  std::vector<double> neg_;
  std::vector<Complex> gen_;
  double tail_bound_ = 0.0;
  std::optional<double> m_;
};

/// e^{-m} m^{n-1} / (n-1)!, the probability P(X = n-1).
double poisson_coeff(const PoissonParams& p, int n);

/// Smallest certified truncation order; see the implementation for the rule.
int choose_truncation(const PoissonParams& p, const TruncationPolicy& policy,
                      WeightGrowth growth);

/// F(m,z) = z - sum e^{-m} m^{n-1}/(n-1)! z^n.
CoefficientSeq coeffs_F(const PoissonParams& p,
                        const TruncationPolicy& policy = {});

/// G(m,z) = z - sum e^{-m} m^{n-1}/n! z^n.
CoefficientSeq coeffs_G(const PoissonParams& p,
                        const TruncationPolicy& policy = {});

/// I(m,z)f: termwise product with the Poisson probabilities. Requires a
/// GeneralTail input; truncation order is preserved.
CoefficientSeq apply_operator_I(const CoefficientSeq& f,
                                const PoissonParams& p);

/// NegativeTail companion z - sum |a_n| z^n of any sequence.
CoefficientSeq magnitudes(const CoefficientSeq& f);

/// Coefficients of z f'(z): a_n -> n a_n. Convention is kept.
CoefficientSeq z_derivative(const CoefficientSeq& f);

/// Closed forms of the shifted exponential sums:
///   Shift1        sum_{n>=2} m^{n-1}/(n-1)! = e^m - 1
///   Shift2        sum_{n>=2} m^{n-1}/(n-2)! = m e^m
///   Shift3        sum_{n>=3} m^{n-1}/(n-3)! = m^2 e^m
///   OverNFact     sum_{n>=2} m^{n-1}/n!     = (e^m - 1 - m)/m
///   PowNOverNFact sum_{n>=2} m^n/n!         = e^m - 1 - m
double shifted_exp_sum(const PoissonParams& p, ExpSumKind kind);

/// Term n of the series behind shifted_exp_sum (0 where the sum starts later).
/// Computed by direct evaluation for use in partial sums.
double shifted_exp_term(double m, ExpSumKind kind, int n);

/// Partial sum of shifted_exp_sum terms for n = 2..N.
double shifted_exp_partial(const PoissonParams& p, ExpSumKind kind, int N);

/// Growth class of the terms of each shifted sum, used to pick N.
WeightGrowth growth_of(ExpSumKind kind);

} // namespace gft
