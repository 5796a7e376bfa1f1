#include "gft/errors.hpp"
#include "gft/threshold_solver.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace gft;

namespace {

double m_star(const ThresholdResult& r) { return std::get<FiniteThreshold>(r.outcome).m_star; }
double width(const ThresholdResult& r) { return std::get<FiniteThreshold>(r.outcome).bracket_width; }

} // namespace

TEST_CASE("T1 at k = 1 is W(1)") {
  const long double w1 = oracle::bisect([](long double m) { return m * std::exp(m) - 1; }, 0, 1, 1e-15L);
  const auto res = solve_m_star(PredicateId::T1_F_in_S, ClassParams(1.0, 0.0), std::nullopt, 1e-10);
  REQUIRE(res.finite());
  CHECK(std::abs(m_star(res) - 0.5671432904097838) < 1e-9);
  CHECK(std::abs(m_star(res) - static_cast<double>(w1)) < 1e-9);
  CHECK(width(res) < 1e-10);
  CHECK(res.evaluations > 0);
}

TEST_CASE("T2 at k = 1, lambda = 0") {
  // independent oracle: bisection on 2 m^2 e^m + 6 m e^m = 2
  const long double ref = oracle::bisect(
      [](long double m) { return 2 * m * m * std::exp(m) + 6 * m * std::exp(m) - 2; }, 0, 1, 1e-15L);
  CHECK(static_cast<double>(ref) == doctest::Approx(0.24211528765542134).epsilon(1e-12));
  const auto res = solve_m_star(PredicateId::T2_F_in_C, ClassParams(1.0, 0.0), std::nullopt, 1e-10);
  REQUIRE(res.finite());
  CHECK(std::abs(m_star(res) - 0.24211528765542134) < 1e-9);
}

TEST_CASE("T4 at k = 1 always holds") {
  for (double lam : {0.0, 0.3, 0.9}) {
    const auto res = solve_m_star(PredicateId::T4_G_in_S, ClassParams(1.0, lam), std::nullopt, 1e-10);
    CHECK_FALSE(res.finite());
    CHECK(std::get<AlwaysHolds>(res.outcome).scan_limit == 50.0);
  }
}

TEST_CASE("bounded predicates can cross") {
  // T5 with a large scale fails for moderate m
  const RParams r(1.0, -1.0, {3.0, 0.0});
  const auto res = solve_m_star(PredicateId::T5_I_in_S, ClassParams(0.5, 0.2), r, 1e-10);
  REQUIRE(res.finite());
  const PoissonParams below(m_star(res) - width(res));
  const PoissonParams above(m_star(res) + width(res));
  CHECK(evaluate(PredicateId::T5_I_in_S, below, ClassParams(0.5, 0.2), r).margin > -kBoundaryTol);
  CHECK(evaluate(PredicateId::T5_I_in_S, above, ClassParams(0.5, 0.2), r).margin < kBoundaryTol);
}

TEST_CASE("finite results bracket a sign change") {
  const ClassParams cs[] = {{0.1, 0.0}, {0.5, 0.5}, {1.0, 0.99}, {0.33, 0.1}};
  const RParams r(0.7, -0.2, {0.4, -1.1});
  for (const auto& c : cs) {
    for (auto pid : {PredicateId::T1_F_in_S, PredicateId::T2_F_in_C, PredicateId::T6_I_in_C,
                     PredicateId::C1_F_in_Sk, PredicateId::C4_I_in_Ck}) {
      const auto res = solve_m_star(pid, c, r, 1e-10);
      REQUIRE(res.finite());
      const double ms = m_star(res);
      const double w = width(res);
      CHECK(evaluate(pid, PoissonParams(ms - w), c, r).margin > -kBoundaryTol);
      CHECK(evaluate(pid, PoissonParams(ms + w), c, r).margin < kBoundaryTol);
      CHECK(std::abs(evaluate(pid, PoissonParams(ms), c, r).margin) <= 1e-8);

      const auto finer = solve_m_star(pid, c, r, 1e-11);
      CHECK(std::abs(m_star(finer) - ms) <= w);
    }
  }
}

TEST_CASE("T1 threshold increases with k") {
  double prev = 0.0;
  for (int i = 1; i <= 10; ++i) {
    const auto res = solve_m_star(PredicateId::T1_F_in_S, ClassParams(0.1 * i, 0.0), std::nullopt, 1e-12);
    CHECK(m_star(res) > prev);
    prev = m_star(res);
  }
}

TEST_CASE("very large scale forces a downward bracket") {
  const RParams r(1.0, -1.0, {1e6, 0.0});
  const auto res = solve_m_star(PredicateId::T6_I_in_C, ClassParams(1.0, 0.0), r, 1e-14);
  REQUIRE(res.finite());
  CHECK(m_star(res) < 1e-3);
  CHECK(m_star(res) > 0.0);
}

TEST_CASE("argument errors") {
  CHECK_THROWS_AS(solve_m_star(PredicateId::T1_F_in_S, ClassParams(1.0, 0.0), std::nullopt, 0.0),
                  InvalidTolerance);
  CHECK_THROWS_AS(solve_m_star(PredicateId::T1_F_in_S, ClassParams(1.0, 0.0), std::nullopt, -1.0),
                  InvalidTolerance);
  CHECK_THROWS_AS(solve_m_star(PredicateId::T5_I_in_S, ClassParams(1.0, 0.0), std::nullopt, 1e-10),
                  MissingRParams);
}
