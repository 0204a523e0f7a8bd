#include <cmath>
#include <random>

#include "doctest.h"
#include "ivncg/linesearch.hpp"
#include "ivncg/subproblem.hpp"
#include "oracles.hpp"

using ivncg::Vector;
using ivncg::WolfeParams;

namespace {

Vector scalar(double a) { return Vector::Constant(1, a); }

ivncg::Ivmop half_square() {
  return ivncg::Ivmop("half-square", 1, {oracle::degenerate_quadratic(Vector::Zero(1))}, scalar(-2),
                      scalar(2));
}

ivncg::Ivmop quartic_interval() {
  ivncg::IntervalObjective g{
      [](const Vector& x) { return x[0] * x[0]; },
      [](const Vector& x) { return x[0] * x[0] + std::pow(x[0], 4) + 1; },
      [](const Vector& x) -> Vector { return scalar(2 * x[0]); },
      [](const Vector& x) -> Vector { return scalar(2 * x[0] + 4 * std::pow(x[0], 3)); }};
  return ivncg::Ivmop("quartic-interval", 1, {g}, scalar(-2), scalar(2));
}

void check_strict_endpoint_decrease(const ivncg::Ivmop& p, const Vector& x, const Vector& d, double t) {
  const auto before = ivncg::eval(p, x);
  const auto after = ivncg::eval(p, x + t * d);
  for (std::size_t i = 0; i < before.size(); ++i) {
    CHECK(after[i].lo() < before[i].lo());
    CHECK(after[i].hi() < before[i].hi());
  }
}

}  // namespace

TEST_SUITE("linesearch") {

TEST_CASE("analytic Wolfe interval for f = x^2/2 at x = 1 along d = -1") {
  // (8) holds for t <= 1.998 and (9) for t >= 0.9.
  const auto p = half_square();
  const WolfeParams w;
  CHECK(ivncg::wolfe_holds(p, scalar(1), scalar(-1), 1.0, w));
  const auto half = ivncg::wolfe_check(p, scalar(1), scalar(-1), 0.5, w);
  CHECK(half.sufficient_decrease);
  CHECK_FALSE(half.curvature);
  const auto far = ivncg::wolfe_check(p, scalar(1), scalar(-1), 2.5, w);
  CHECK_FALSE(far.sufficient_decrease);
  CHECK(far.first_failing_objective == 0);
  CHECK(ivncg::wolfe_holds(p, scalar(1), scalar(-1), 0.9, w));
  CHECK(ivncg::wolfe_holds(p, scalar(1), scalar(-1), 1.998, w));
  CHECK_FALSE(ivncg::wolfe_holds(p, scalar(1), scalar(-1), 0.89, w));
  CHECK_FALSE(ivncg::wolfe_holds(p, scalar(1), scalar(-1), 1.999, w));

  const auto r = ivncg::search(p, scalar(1), scalar(-1), w);
  REQUIRE(r.status == ivncg::SearchStatus::Accepted);
  CHECK(r.t >= 0.9);
  CHECK(r.t <= 1.998);
}

TEST_CASE("accepted steps stay inside the analytic interval for other starts") {
  const auto p = half_square();
  const WolfeParams w;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.1, 50);
  for (int k = 0; k < 100; ++k) {
    // f = x²/2 along d = −x·s: the accepted step in units of 1/s lies in [0.9, 1.998].
    const double x = u(rng), s = u(rng) / 10;
    const auto r = ivncg::search(p, scalar(x), scalar(-x * s), w);
    REQUIRE(r.status == ivncg::SearchStatus::Accepted);
    CHECK(r.t * s >= 0.9 - 1e-12);
    CHECK(r.t * s <= 1.998 + 1e-12);
  }
}

TEST_CASE("two convex quadratics along v(x)") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3, 3);
  Vector a(2), b(2);
  a << 1, 0;
  b << -1, 0.5;
  ivncg::Ivmop p("two-quad", 2,
                 {oracle::degenerate_quadratic(a, 2.0), oracle::degenerate_quadratic(b, 0.5)},
                 Vector::Constant(2, -3), Vector::Constant(2, 3));
  const WolfeParams w;
  int searched = 0;
  for (int k = 0; k < 200; ++k) {
    Vector x(2);
    x << u(rng), u(rng);
    const auto s = ivncg::solve_direction(p, x);
    if (s.xi > -1e-8) continue;
    const auto r = ivncg::search(p, x, s.v, w);
    REQUIRE(r.status == ivncg::SearchStatus::Accepted);
    CHECK(ivncg::wolfe_holds(p, x, s.v, r.t, w));
    check_strict_endpoint_decrease(p, x, s.v, r.t);
    ++searched;
  }
  CHECK(searched > 50);
}

TEST_CASE("interval objective [x^2, x^2 + x^4 + 1] at x = 1") {
  const auto p = quartic_interval();
  const WolfeParams w;
  const auto s = ivncg::solve_direction(p, scalar(1));
  // gH-gradient [2, 6] gives v = −2.
  CHECK(s.v[0] == doctest::Approx(-2));
  const auto r = ivncg::search(p, scalar(1), s.v, w);
  REQUIRE(r.status == ivncg::SearchStatus::Accepted);
  CHECK(ivncg::wolfe_holds(p, scalar(1), s.v, r.t, w));
  check_strict_endpoint_decrease(p, scalar(1), s.v, r.t);
  REQUIRE(r.model_at_step.has_value());
  CHECK(r.model_at_step->psi(s.v) == doctest::Approx(ivncg::psi_upsilon(p, scalar(1) + r.t * s.v, s.v)));
}

TEST_CASE("non-descent and stagnating directions") {
  const auto p = half_square();
  const WolfeParams w;
  CHECK_THROWS_AS(ivncg::search(p, scalar(1), scalar(1), w), ivncg::NonDescentError);
  CHECK_THROWS_AS(ivncg::wolfe_holds(p, scalar(1), scalar(1), 1.0, w), ivncg::NonDescentError);
  CHECK(ivncg::search(p, scalar(0), scalar(-1), w).status == ivncg::SearchStatus::Stagnation);
  CHECK(ivncg::search(p, scalar(1e-15), scalar(-1), w).status == ivncg::SearchStatus::Stagnation);
}

TEST_CASE("unbounded ray exhausts the search") {
  ivncg::Ivmop linear("linear", 1,
                      {oracle::degenerate([](const Vector& x) { return x[0]; },
                                          [](const Vector&) -> Vector { return scalar(1); })},
                      scalar(-1), scalar(1));
  const auto r = ivncg::search(linear, scalar(0), scalar(-1), WolfeParams{});
  CHECK(r.status == ivncg::SearchStatus::Exhausted);
  CHECK(std::isinf(r.bracket_hi));
}

TEST_CASE("parameter validation") {
  WolfeParams w;
  w.rho = 0.2;
  w.sigma = 0.1;
  CHECK_THROWS(w.validate());
  w = WolfeParams{};
  w.t_max = 0.5;
  CHECK_THROWS(w.validate());
  CHECK_NOTHROW(WolfeParams{}.validate());
}

}
