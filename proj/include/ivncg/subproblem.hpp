#pragma once

#include "ivncg/ivf.hpp"
#include "ivncg/qp.hpp"

namespace ivncg {

using qp::QpError;

/// Solution of the direction-finding problem
///   min_v  Ψ∘Υ_x(v) + ½‖v‖².
struct SubproblemSolution {
  Vector v;                   // v(x)
  double xi = 0.0;            // ξ(x) = Ψ∘Υ_x(v) + ½‖v‖²
  double tau = 0.0;           // epigraph variable at the optimum
  double kkt_residual = 0.0;  // scaled KKT residual reported by the QP solver
  int qp_iterations = 0;
};

/// Solves the epigraph QP over (v, u, τ):
///   min τ + ½‖v‖²
///   s.t. (lo_i + hi_i)ᵀv + (hi_i − lo_i)ᵀu ≤ 2τ   for every objective i,
///        −u ≤ v ≤ u,  u ≥ 0.
/// Throws QpError when the active-set solver does not converge.
SubproblemSolution solve_direction(const Linearization& model);
SubproblemSolution solve_direction(const Ivmop& problem, const Vector& x);

/// ξ(x) > −eps.
bool is_pareto_critical(const Ivmop& problem, const Vector& x, double eps);

/// Sampled unit directions for the brute-force criticality oracle: ±1 for
/// n = 1, `count` equally spaced angles for n = 2, a Fibonacci lattice of
/// `count` points for n = 3.
std::vector<Vector> sample_unit_directions(int n, int count);

/// Direction-sampling criticality test with no QP involved: x is reported
/// critical iff no sampled unit direction d has Ψ∘Υ_x(d) < −slope_tol, i.e.
/// no sampled d makes every gH directional derivative strictly negative.
///
/// A point with ξ(x) > −eps has Ψ∘Υ_x(d) > −sqrt(2·eps) for every unit d, so
/// slope_tol = sqrt(2·eps) matches is_pareto_critical(..., eps). Limited to
/// n ≤ 3.
bool brute_force_critical_check(const Ivmop& problem, const Vector& x, int directions = 720,
                                double slope_tol = 0.0);

}  // namespace ivncg
