#include <cmath>
#include <random>

#include "doctest.h"
#include "ivncg/subproblem.hpp"
#include "oracles.hpp"

using ivncg::GhGradient;
using ivncg::Linearization;
using ivncg::Vector;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (double x : xs) v[k++] = x;
  return v;
}

ivncg::Ivmop half_norm() {
  return ivncg::Ivmop("half-norm", 2, {oracle::degenerate_quadratic(Vector::Zero(2))}, vec({-2, -2}),
                      vec({2, 2}));
}

// f1 = ½(x−1)², f2 = ½(x+1)² on the line: gradients +1/−1 at... x = 0.
ivncg::Ivmop opposite_pair() {
  return ivncg::Ivmop("opposite", 1,
                      {oracle::degenerate_quadratic(vec({1})), oracle::degenerate_quadratic(vec({-1}))},
                      vec({-2}), vec({2}));
}

Linearization random_model(std::mt19937_64& rng, int n, int m, double spread, double width) {
  std::uniform_real_distribution<double> u(-spread, spread), w(0, width);
  std::vector<GhGradient> gs;
  for (int i = 0; i < m; ++i) {
    Vector a(n), b(n);
    for (int j = 0; j < n; ++j) {
      a[j] = u(rng);
      b[j] = a[j] + w(rng);
    }
    gs.emplace_back(a, b);
  }
  return Linearization(std::move(gs));
}

void check_solution_invariants(const Linearization& model, const ivncg::SubproblemSolution& s) {
  CHECK(s.xi <= 1e-10);
  CHECK(std::abs(s.xi - (model.psi(s.v) + 0.5 * s.v.squaredNorm())) <= 1e-8);
  CHECK(s.tau >= model.psi(s.v) - 1e-8);
  // Ψ is positively homogeneous, so optimality along the ray through v(x)
  // forces Ψ(v) = −‖v‖² and ξ = −½‖v‖².
  CHECK(std::abs(model.psi(s.v) + s.v.squaredNorm()) <= 1e-9 * (1 + s.v.squaredNorm()));
  if (s.xi < -1e-8) CHECK(model.psi(s.v) < 0);
  CHECK(s.kkt_residual <= 1e-10);
}

}  // namespace

TEST_SUITE("subproblem") {

TEST_CASE("single smooth objective gives v = -grad") {
  const auto s = ivncg::solve_direction(half_norm(), vec({1, 0}));
  CHECK(s.v[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(s.v[1]) <= 1e-12);
  CHECK(s.xi == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("opposite gradients give a zero direction") {
  const auto s = ivncg::solve_direction(opposite_pair(), vec({0}));
  CHECK(std::abs(s.v[0]) <= 1e-12);
  CHECK(std::abs(s.xi) <= 1e-12);
}

TEST_CASE("small interval gradients match a dense grid search") {
  // Frozen instances: grid oracle on [−3,3]² with step 1e-3.
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3; ++trial) {
    const Linearization model = random_model(rng, 2, 2, 1.5, 0.5);
    const auto s = ivncg::solve_direction(model);
    const auto grid = oracle::grid_direction(model, 3.0, 1e-3);
    CHECK((s.v - grid.v).cwiseAbs().maxCoeff() <= 2e-3);
    CHECK(std::abs(s.xi - grid.value) <= 1e-5);
    check_solution_invariants(model, s);
  }
}

TEST_CASE("is_pareto_critical") {
  CHECK(ivncg::is_pareto_critical(half_norm(), vec({0, 0}), 1e-6));
  CHECK_FALSE(ivncg::is_pareto_critical(half_norm(), vec({1, 0}), 1e-6));
  CHECK(ivncg::is_pareto_critical(opposite_pair(), vec({0}), 1e-6));
  CHECK_THROWS(ivncg::is_pareto_critical(half_norm(), vec({0, 0}), 0.0));
  CHECK_THROWS_AS(ivncg::solve_direction(half_norm(), vec({0})), ivncg::DimensionError);
}

TEST_CASE("brute-force criticality oracle") {
  CHECK(ivncg::brute_force_critical_check(half_norm(), vec({0, 0})));
  CHECK_FALSE(ivncg::brute_force_critical_check(half_norm(), vec({1, 0})));
  CHECK(ivncg::brute_force_critical_check(opposite_pair(), vec({0})));
  CHECK(ivncg::sample_unit_directions(3, 720).size() == 720);
  for (const auto& d : ivncg::sample_unit_directions(3, 50)) CHECK(d.norm() == doctest::Approx(1.0));
}

TEST_CASE("randomized models satisfy the optimality invariants") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const int m = 1 + trial % 4;
    const double width = trial % 5 == 0 ? 0.0 : 1.0;
    const Linearization model = random_model(rng, n, m, 2.0, width);
    const auto s = ivncg::solve_direction(model);
    check_solution_invariants(model, s);
    // v(x) beats random competitors.
    std::normal_distribution<double> z(0, 1);
    for (int c = 0; c < 5; ++c) {
      Vector w(n);
      for (int j = 0; j < n; ++j) w[j] = s.v[j] + 0.3 * z(rng);
      CHECK(model.psi(w) + 0.5 * w.squaredNorm() >= s.xi - 1e-12);
    }
  }
}

TEST_CASE("critical models where zero lies inside the gradient hull") {
  // Interval gradient [−1, 1] in every coordinate: zero is a selection.
  std::vector<GhGradient> gs{GhGradient(vec({-1, -0.5, -2}), vec({1, 0.5, 2}))};
  const auto s = ivncg::solve_direction(Linearization(gs));
  CHECK(s.v.norm() <= 1e-12);
  CHECK(s.xi == 0.0);
}

TEST_CASE("degenerate biobjective matches the grid search") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 2; ++trial) {
    const auto model = oracle::constant_model({vec({u(rng), u(rng)}), vec({u(rng), u(rng)})});
    const auto s = ivncg::solve_direction(model);
    const auto grid = oracle::grid_direction(model, 3.0, 1e-3);
    CHECK((s.v - grid.v).cwiseAbs().maxCoeff() <= 2e-3);
  }
}

}
