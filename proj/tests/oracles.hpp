// Independent reference computations used only by the test suites. Nothing
// here calls the QP solver, the line search or the CG iteration.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ivncg/ivf.hpp"

namespace oracle {

using ivncg::GhGradient;
using ivncg::Linearization;
using ivncg::Vector;

/// max over all 2^n endpoint selections a_j ∈ {lo_j, hi_j} of Σ a_j v_j.
inline double enumerate_g_upper(const GhGradient& grad, const Vector& v) {
  const auto n = static_cast<int>(grad.size());
  double best = -std::numeric_limits<double>::infinity();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += ((mask >> j) & 1ul ? grad.upper()[j] : grad.lower()[j]) * v[j];
    best = std::max(best, s);
  }
  return best;
}

inline double enumerate_g_lower(const GhGradient& grad, const Vector& v) {
  const auto n = static_cast<int>(grad.size());
  double best = std::numeric_limits<double>::infinity();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += ((mask >> j) & 1ul ? grad.upper()[j] : grad.lower()[j]) * v[j];
    best = std::min(best, s);
  }
  return best;
}

struct GridMinimum {
  Vector v;
  double value;
};

/// Dense grid search of  max_i Σ_j max(lo_ij v_j, hi_ij v_j) + ½‖v‖²  over
/// the box centre ± radius for n ∈ {1, 2}.
inline GridMinimum grid_scan(const Linearization& model, const Vector& centre, double radius,
                             double step) {
  const auto n = static_cast<int>(model.n());
  const int m = model.m();
  std::vector<double> lo, hi;
  for (const auto& g : model.grads()) {
    for (int j = 0; j < n; ++j) {
      lo.push_back(g.lower()[j]);
      hi.push_back(g.upper()[j]);
    }
  }
  const long count = std::lround(2 * radius / step);
  auto slope = [&](int i, int j, double vj) {
    const double a = lo[static_cast<std::size_t>(i * n + j)] * vj;
    const double b = hi[static_cast<std::size_t>(i * n + j)] * vj;
    return std::max(a, b);
  };
  GridMinimum best{Vector::Zero(n), std::numeric_limits<double>::infinity()};
  if (n == 1) {
    for (long a = 0; a <= count; ++a) {
      const double v0 = centre[0] - radius + a * step;
      double psi = -std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) psi = std::max(psi, slope(i, 0, v0));
      const double val = psi + 0.5 * v0 * v0;
      if (val < best.value) best = {Vector::Constant(1, v0), val};
    }
  } else if (n == 2) {
    for (long a = 0; a <= count; ++a) {
      const double v0 = centre[0] - radius + a * step;
      for (long b = 0; b <= count; ++b) {
        const double v1 = centre[1] - radius + b * step;
        double psi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) psi = std::max(psi, slope(i, 0, v0) + slope(i, 1, v1));
        const double val = psi + 0.5 * (v0 * v0 + v1 * v1);
        if (val < best.value) {
          best.value = val;
          best.v = Vector(2);
          best.v << v0, v1;
        }
      }
    }
  }
  return best;
}

/// Grid search over [−radius, radius]^n with the given step, followed by
/// nested local grids around the incumbent. The objective grows only
/// linearly across its kinks, so a single grid pins the value to O(step)
/// but not the minimizer. Strong convexity (modulus 1) confines the
/// minimizer to a ball of radius sqrt(2 · value gap) around the incumbent,
/// and each local pass scans that ball.
inline GridMinimum grid_direction(const Linearization& model, double radius, double step,
                                  int refinements = 4) {
  double lip = radius;
  for (const auto& g : model.grads()) lip += g.lower().cwiseAbs().cwiseMax(g.upper().cwiseAbs()).norm();
  const double dim = std::sqrt(static_cast<double>(model.n()));
  GridMinimum best = grid_scan(model, Vector::Zero(model.n()), radius, step);
  for (int level = 0; level < refinements; ++level) {
    const double r = std::sqrt(2 * lip * step * dim) + step;
    step = r / 2000;
    const GridMinimum local = grid_scan(model, best.v, r, step);
    if (local.value <= best.value) best = local;
  }
  return best;
}

/// Objective with identical endpoints [f, f].
inline ivncg::IntervalObjective degenerate(ivncg::ScalarFn f, ivncg::GradientFn g) {
  return {f, f, g, g};
}

/// Objective [f, f + w] for a nonnegative width w.
inline ivncg::IntervalObjective widened(ivncg::ScalarFn f, ivncg::GradientFn g, ivncg::ScalarFn w,
                                        ivncg::GradientFn gw) {
  return {f, [f, w](const Vector& x) { return f(x) + w(x); }, g,
          [g, gw](const Vector& x) -> Vector { return g(x) + gw(x); }};
}

/// ½‖x − c‖² scaled by `a`, degenerate.
inline ivncg::IntervalObjective degenerate_quadratic(const Vector& centre, double a = 1.0) {
  return degenerate([centre, a](const Vector& x) { return 0.5 * a * (x - centre).squaredNorm(); },
                    [centre, a](const Vector& x) -> Vector { return a * (x - centre); });
}

/// Linearization with constant degenerate gradients.
inline Linearization constant_model(const std::vector<Vector>& grads) {
  std::vector<GhGradient> g;
  for (const auto& v : grads) g.emplace_back(v, v);
  return Linearization(std::move(g));
}

}  // namespace oracle
