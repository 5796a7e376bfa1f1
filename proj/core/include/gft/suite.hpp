#pragma once

/// \file
/// \brief Seeded randomized property suite over every module, with a
/// deterministic JSON summary.

#include "gft/class_criteria.hpp"
#include "gft/report_json.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace gft {

/// Portable parameter sampler: mt19937_64 with a fixed 53-bit mantissa
/// mapping, so draws are identical across standard libraries.
class ParamSampler {
public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double unit();
  /// Uniform in (lo, hi].
  double open_closed(double lo, double hi);
  double m(double max_m = 10.0) { return open_closed(0.0, max_m); }
  ClassParams class_params();
  /// -1 <= B < A <= 1, |tau| in (0, 2], uniform phase.
  RParams r_params();

private:
  std::mt19937_64 rng_;
};

struct IdentityRow {
  ExpSumKind kind;
  double closed;
  double partial;
  int N;
  double error;
  double tolerance;
  bool passed;
};

/// Closed form vs partial sum for every shifted exponential sum at m.
/// Tolerance is max(1e-10, 1e-12 * |closed|).
std::vector<IdentityRow> identity_table(const PoissonParams& p,
                                        const TruncationPolicy& policy = {});

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  TruncationPolicy policy{};
};

/// Runs the property suite; the summary carries no timings so that equal
/// seeds give byte-identical canonical JSON.
Json run_suite(const SuiteOptions& options);

} // namespace gft
