#pragma once

/// \file
/// \brief Closed-form membership conditions for the Poisson series F, G and
/// the operator I(m,z)f, each with an independent series cross-check.
///
/// Every condition has the shape lhs(m, k, lambda[, A, B, tau]) <= 2k.
/// Corollary ids evaluate their parent theorem with lambda = 0.

#include "gft/class_criteria.hpp"
#include "gft/series_core.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace gft {

enum class PredicateId {
  T1_F_in_S,
  T2_F_in_C,
  T3_G_in_C,
  T4_G_in_S,
  T5_I_in_S,
  T6_I_in_C,
  C1_F_in_Sk,
  C2_F_in_Ck,
  C3_I_in_Sk,
  C4_I_in_Ck,
  C5_G_in_Ck,
  C6_G_in_Sk,
};

inline constexpr std::array<PredicateId, 12> kAllPredicates = {
    PredicateId::T1_F_in_S,  PredicateId::T2_F_in_C,  PredicateId::T3_G_in_C,
    PredicateId::T4_G_in_S,  PredicateId::T5_I_in_S,  PredicateId::T6_I_in_C,
    PredicateId::C1_F_in_Sk, PredicateId::C2_F_in_Ck, PredicateId::C3_I_in_Sk,
    PredicateId::C4_I_in_Ck, PredicateId::C5_G_in_Ck, PredicateId::C6_G_in_Sk};

std::string_view to_string(PredicateId pid);
std::optional<PredicateId> parse_predicate(std::string_view name);

/// Theorem a corollary specializes; theorems map to themselves.
PredicateId parent_of(PredicateId pid);
bool is_corollary(PredicateId pid);
bool needs_rparams(PredicateId pid);

/// Beyond this m the exponential conditions short-circuit to +inf.
inline constexpr double kOverflowM = 700.0;

/// ((1-lambda) + k(1+lambda)) m e^m
double t1_lhs(const PoissonParams& p, const ClassParams& c);
/// ((1-lambda) + k(1+lambda)) m^2 e^m + 2(1 + 2k + k lambda - lambda) m e^m
double t2_lhs(const PoissonParams& p, const ClassParams& c);
/// ((1-lambda) + k(1+lambda))(1 - e^{-m})
///   + ((1-lambda)(k-1)/m)(1 - e^{-m} - m e^{-m})
double t4_lhs(const PoissonParams& p, const ClassParams& c);
/// (A-B)|tau| * t4_lhs
double t5_lhs(const PoissonParams& p, const ClassParams& c, const RParams& r);
/// (A-B)|tau| [((1-lambda) + k(1+lambda)) m + 2k(1 - e^{-m})]
double t6_lhs(const PoissonParams& p, const ClassParams& c, const RParams& r);

/// Condition lhs for any predicate; corollaries drop lambda to 0.
double predicate_lhs(PredicateId pid, const PoissonParams& p,
                     const ClassParams& c,
                     const std::optional<RParams>& r = std::nullopt);

MembershipReport evaluate(PredicateId pid, const PoissonParams& p,
                          const ClassParams& c,
                          const std::optional<RParams>& r = std::nullopt);

struct CrosscheckDetail {
  double closed;   ///< closed form mapped to the coefficient-sum scale
  double series;   ///< weighted truncated coefficient sum
  double residual; ///< |closed - series|
  int truncation_order;
};

/// Recomputes the condition as a truncated weighted coefficient sum and
/// compares it with the closed form on the coefficient-sum scale.
///
/// For F in S and F in C (and G in C) the coefficient sum equals
/// 2k + e^{-m}(lhs - 2k); for G in S and the operator conditions the closed
/// form already is the coefficient sum.
CrosscheckDetail crosscheck_detail(PredicateId pid, const PoissonParams& p,
                                   const ClassParams& c,
                                   const std::optional<RParams>& r = std::nullopt,
                                   const TruncationPolicy& policy = {});

double crosscheck(PredicateId pid, const PoissonParams& p, const ClassParams& c,
                  const std::optional<RParams>& r = std::nullopt,
                  const TruncationPolicy& policy = {});

/// The sequence whose coefficient sum the predicate constrains, in the
/// negative-tail form used by the class criteria. For T5/T6 this is the
/// companion of I(m,z)f applied to the worst-case R^tau(A,B) coefficients.
CoefficientSeq predicate_function(PredicateId pid, const PoissonParams& p,
                                  const std::optional<RParams>& r,
                                  const TruncationPolicy& policy = {});

/// Lemma criterion (S or C) the predicate tests.
Criterion criterion_of(PredicateId pid);

} // namespace gft
