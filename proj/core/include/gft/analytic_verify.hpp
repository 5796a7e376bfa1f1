#pragma once

/// \file
/// \brief Direct sampling of the analytic class conditions inside the unit
/// disk, as empirical evidence for the coefficient criteria.

#include "gft/class_criteria.hpp"
#include "gft/series_core.hpp"

#include <string_view>
#include <variant>
#include <vector>

namespace gft {

struct GridSpec {
  std::vector<double> radii{0.25, 0.5, 0.75, 0.9};
  int points_per_circle = 256;
  double denominator_floor = 1e-12;

  /// Throws DomainError unless every radius is in (0,1), at least 8 points
  /// per circle and a positive floor.
  void validate() const;
};

enum class ConditionId { S_cond, C_cond, R_cond };

std::string_view to_string(ConditionId id);

struct GridReport {
  ConditionId condition = ConditionId::S_cond;
  double max_value = 0.0;
  Complex argmax{0.0, 0.0};
  int violations = 0;
  int skipped = 0;
};

struct ConditionValue {
  double value;
  bool valid;
};

/// f(z) by Horner's rule. Throws DomainError if |z| >= 1.
Complex eval_series(const CoefficientSeq& f, Complex z);
/// f'(z) by Horner's rule. Throws DomainError if |z| >= 1.
Complex eval_deriv(const CoefficientSeq& f, Complex z);

/// |(w-1)/(w+1)| with w = z f' / ((1-lambda) f + lambda z f'); membership
/// in S(k,lambda) requires this to stay below k. z = 0 gives the limit 0.
ConditionValue s_condition_value(const CoefficientSeq& f, Complex z,
                                 const ClassParams& c,
                                 double denominator_floor = 1e-12);

/// S condition of z f'.
ConditionValue c_condition_value(const CoefficientSeq& f, Complex z,
                                 const ClassParams& c,
                                 double denominator_floor = 1e-12);

/// |(f'-1) / ((A-B) tau - B (f'-1))|; membership requires < 1.
ConditionValue r_condition_value(const CoefficientSeq& f, Complex z,
                                 const RParams& r,
                                 double denominator_floor = 1e-12);

using ConditionParams = std::variant<ClassParams, RParams>;

/// Samples the condition on every circle of the grid. The threshold is k for
/// S/C and 1 for R. Ties in the maximum resolve to the lowest radius index,
/// then the lowest angle index; the result does not depend on evaluation
/// order.
GridReport grid_check(const CoefficientSeq& f, ConditionId id,
                      const ConditionParams& params,
                      const GridSpec& grid = {});

/// Failure-witness search: the default circles plus 0.95, 0.99 and
/// `radius`, and a dense scan of the real segment (0, radius].
GridReport witness_search(const CoefficientSeq& f, ConditionId id,
                          const ConditionParams& params,
                          double radius = 0.999, int radial_points = 2048);

} // namespace gft
