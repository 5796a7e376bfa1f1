#pragma once

#include "gft/theorems.hpp"

#include <optional>
#include <variant>

namespace gft {

struct FiniteThreshold {
  double m_star;
  double bracket_width;
};

struct AlwaysHolds {
  double scan_limit;
};

struct ThresholdResult {
  PredicateId predicate;
  std::variant<FiniteThreshold, AlwaysHolds> outcome;
  int evaluations = 0;

  bool finite() const noexcept {
    return std::holds_alternative<FiniteThreshold>(outcome);
  }
};

/// True for predicates whose lhs is strictly increasing in m (T1, T2, T3,
/// T6 and their corollaries).
bool is_monotone_in_m(PredicateId pid);

/// Boundary m* where the predicate stops holding, for fixed (k, lambda) and
/// (A, B, tau).
///
/// Monotone predicates: geometric bracket scan from m = 1e-3, then bisection
/// to a bracket narrower than `tol`; the root is unique. Bounded predicates
/// (T4, T5): scan m = 1e-3 * 2^j up to `scan_limit` and bisect the first
/// sign change; without one the result is AlwaysHolds. Re-entry into the
/// class past the first crossing is not searched.
ThresholdResult solve_m_star(PredicateId pid, const ClassParams& c,
                             const std::optional<RParams>& r, double tol,
                             double scan_limit = 50.0);

} // namespace gft
