#include "gft/threshold_solver.hpp"

#include "gft/errors.hpp"

#include <cmath>

namespace gft {

namespace {

constexpr double kScanStart = 1e-3;

class Margin {
public:
  Margin(PredicateId pid, const ClassParams& c, const std::optional<RParams>& r)
      : pid_(pid), c_(c), r_(r) {}

  double operator()(double m) {
    ++evaluations_;
    return 2.0 * c_.k() - predicate_lhs(pid_, PoissonParams(m), c_, r_);
  }

  int evaluations() const noexcept { return evaluations_; }

private:
  PredicateId pid_;
  ClassParams c_;
  std::optional<RParams> r_;
  int evaluations_ = 0;
};

// margin(lo) >= 0 > margin(hi)
FiniteThreshold bisect(Margin& margin, double lo, double hi, double tol) {
  while (hi - lo >= tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break; // bracket at double resolution
    }
    if (margin(mid) < 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {0.5 * (lo + hi), hi - lo};
}

// Walks down from `hi` (which fails) until the margin turns nonnegative.
// Every lhs vanishes as m -> 0, so this terminates.
double lower_bracket(Margin& margin, double hi) {
  double lo = hi;
  do {
    lo *= 0.5;
  } while (margin(lo) < 0.0 && lo > 1e-300);
  return lo;
}

} // namespace

bool is_monotone_in_m(PredicateId pid) {
  const auto base = parent_of(pid);
  return base != PredicateId::T4_G_in_S && base != PredicateId::T5_I_in_S;
}

ThresholdResult solve_m_star(PredicateId pid, const ClassParams& c,
                             const std::optional<RParams>& r, double tol,
                             double scan_limit) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidTolerance("tol must be a positive finite number");
  }
  if (!(scan_limit > kScanStart) || !std::isfinite(scan_limit)) {
    throw InvalidTolerance("scan_limit must be finite and > 1e-3");
  }
  if (needs_rparams(pid) && !r) {
    throw MissingRParams("threshold for this predicate needs A, B and tau");
  }

  Margin margin(pid, c, r);
  ThresholdResult result{pid, AlwaysHolds{scan_limit}, 0};

  if (margin(kScanStart) < 0.0) {
    const double lo = lower_bracket(margin, kScanStart);
    result.outcome = bisect(margin, lo, 2.0 * lo, tol);
    result.evaluations = margin.evaluations();
    return result;
  }

  double prev = kScanStart;
  double m = kScanStart;
  const bool monotone = is_monotone_in_m(pid);
  for (;;) {
    m *= 2.0;
    if (!monotone && m >= scan_limit) {
      m = scan_limit;
    }
    if (margin(m) < 0.0) {
      result.outcome = bisect(margin, prev, m, tol);
      break;
    }
    if (!monotone && m >= scan_limit) {
      break;
    }
    if (!std::isfinite(m)) {
      // monotone lhs must cross; reaching here means the lhs saturated
      throw TruncationNotReached("bracket scan did not find a sign change");
    }
    prev = m;
  }
  result.evaluations = margin.evaluations();
  return result;
}

} // namespace gft
