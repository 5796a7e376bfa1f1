#include "gft/analytic_verify.hpp"

#include "gft/errors.hpp"

#include <cmath>
#include <numbers>

namespace gft {

namespace {

void require_in_disk(Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("|z| must be < 1");
  }
}

// threshold of the condition: k for S/C, 1 for R
double threshold_of(ConditionId id, const ConditionParams& params) {
  if (id == ConditionId::R_cond) {
    return 1.0;
  }
  return std::get<ClassParams>(params).k();
}

ConditionValue value_at(const CoefficientSeq& f, const CoefficientSeq* zf,
                        ConditionId id, const ConditionParams& params,
                        Complex z, double floor) {
  switch (id) {
  case ConditionId::S_cond:
    return s_condition_value(f, z, std::get<ClassParams>(params), floor);
  case ConditionId::C_cond:
    return s_condition_value(*zf, z, std::get<ClassParams>(params), floor);
  case ConditionId::R_cond:
    return r_condition_value(f, z, std::get<RParams>(params), floor);
  }
  return {0.0, false};
}

struct Sample {
  Complex z;
  ConditionValue v;
};

// Strict '>' keeps the first maximum in evaluation order.
GridReport reduce(ConditionId id, double threshold,
                  const std::vector<Sample>& samples) {
  GridReport rep;
  rep.condition = id;
  bool any = false;
  for (const auto& s : samples) {
    if (!s.v.valid) {
      ++rep.skipped;
      continue;
    }
    if (s.v.value >= threshold) {
      ++rep.violations;
    }
    if (!any || s.v.value > rep.max_value) {
      rep.max_value = s.v.value;
      rep.argmax = s.z;
      any = true;
    }
  }
  return rep;
}

void sample_circles(const CoefficientSeq& f, const CoefficientSeq* zf,
                    ConditionId id, const ConditionParams& params,
                    const GridSpec& grid, std::vector<Sample>& out) {
  const double step = 2.0 * std::numbers::pi / grid.points_per_circle;
  for (double r : grid.radii) {
    for (int j = 0; j < grid.points_per_circle; ++j) {
      const Complex z = std::polar(r, step * j);
      out.push_back({z, value_at(f, zf, id, params, z, grid.denominator_floor)});
    }
  }
}

} // namespace

void GridSpec::validate() const {
  if (radii.empty()) {
    throw DomainError("grid needs at least one radius");
  }
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) {
      throw DomainError("radii must be in (0,1)");
    }
  }
  if (points_per_circle < 8) {
    throw DomainError("points per circle must be >= 8");
  }
  if (!(denominator_floor > 0.0)) {
    throw DomainError("denominator floor must be > 0");
  }
}

std::string_view to_string(ConditionId id) {
  switch (id) {
  case ConditionId::S_cond:
    return "S_cond";
  case ConditionId::C_cond:
    return "C_cond";
  case ConditionId::R_cond:
    return "R_cond";
  }
  return "?";
}

Complex eval_series(const CoefficientSeq& f, Complex z) {
  require_in_disk(z);
  // f(z) = z (1 + sum_{n>=2} a_n z^{n-1})
  Complex acc{0.0, 0.0};
  for (int n = f.truncation_order(); n >= 2; --n) {
    acc = acc * z + f.signed_coeff(n);
  }
  return z * (1.0 + acc * z);
}

Complex eval_deriv(const CoefficientSeq& f, Complex z) {
  require_in_disk(z);
  // f'(z) = 1 + sum_{n>=2} n a_n z^{n-1}
  Complex acc{0.0, 0.0};
  for (int n = f.truncation_order(); n >= 2; --n) {
    acc = acc * z + static_cast<double>(n) * f.signed_coeff(n);
  }
  return 1.0 + acc * z;
}

ConditionValue s_condition_value(const CoefficientSeq& f, Complex z,
                                 const ClassParams& c, double floor) {
  require_in_disk(z);
  if (z == Complex{0.0, 0.0}) {
    return {0.0, true};
  }
  const Complex fz = eval_series(f, z);
  const Complex zfp = z * eval_deriv(f, z);
  const Complex den = (1.0 - c.lambda()) * fz + c.lambda() * zfp;
  if (std::abs(den) < floor) {
    return {0.0, false};
  }
  const Complex w = zfp / den;
  const double lower = std::abs(w + 1.0);
  if (lower < floor) {
    return {0.0, false};
  }
  return {std::abs(w - 1.0) / lower, true};
}

ConditionValue c_condition_value(const CoefficientSeq& f, Complex z,
                                 const ClassParams& c, double floor) {
  return s_condition_value(z_derivative(f), z, c, floor);
}

ConditionValue r_condition_value(const CoefficientSeq& f, Complex z,
                                 const RParams& r, double floor) {
  require_in_disk(z);
  const Complex d = eval_deriv(f, z) - 1.0;
  const Complex den = (r.A() - r.B()) * r.tau() - r.B() * d;
  if (std::abs(den) < floor) {
    return {0.0, false};
  }
  return {std::abs(d) / std::abs(den), true};
}

GridReport grid_check(const CoefficientSeq& f, ConditionId id,
                      const ConditionParams& params, const GridSpec& grid) {
  grid.validate();
  const CoefficientSeq zf = z_derivative(f);
  std::vector<Sample> samples;
  samples.reserve(grid.radii.size() * static_cast<std::size_t>(grid.points_per_circle));
  sample_circles(f, &zf, id, params, grid, samples);
  return reduce(id, threshold_of(id, params), samples);
}

GridReport witness_search(const CoefficientSeq& f, ConditionId id,
                          const ConditionParams& params, double radius,
                          int radial_points) {
  if (!(radius > 0.0 && radius < 1.0) || radial_points < 1) {
    throw DomainError("witness radius must be in (0,1) with >= 1 radial point");
  }
  GridSpec grid;
  for (double r : {0.95, 0.99, radius}) {
    grid.radii.push_back(r);
  }
  grid.validate();
  const CoefficientSeq zf = z_derivative(f);
  std::vector<Sample> samples;
  sample_circles(f, &zf, id, params, grid, samples);
  for (int j = 1; j <= radial_points; ++j) {
    const Complex z{radius * j / radial_points, 0.0};
    samples.push_back({z, value_at(f, &zf, id, params, z, grid.denominator_floor)});
  }
  return reduce(id, threshold_of(id, params), samples);
}

} // namespace gft
