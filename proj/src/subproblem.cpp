#include "ivncg/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ivncg {

namespace {

// Variable layout: z = (v[0..n), u[n..2n), τ[2n]).
// Row layout: objectives first, then three rows per coordinate j:
//   −v_j − u_j ≤ 0,  v_j − u_j ≤ 0,  −u_j ≤ 0.
qp::Problem build_epigraph_qp(const Linearization& model) {
  const Eigen::Index n = model.n();
  const Eigen::Index m = model.m();
  const Eigen::Index nvar = 2 * n + 1;
  qp::Problem p;
  p.hessian = qp::Matrix::Zero(nvar, nvar);
  p.hessian.topLeftCorner(n, n).setIdentity();
  p.linear = Vector::Zero(nvar);
  p.linear[2 * n] = 1.0;
  p.constraints = qp::Matrix::Zero(m + 3 * n, nvar);
  p.bounds = Vector::Zero(m + 3 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& g = model.grads()[static_cast<std::size_t>(i)];
    p.constraints.row(i).segment(0, n) = (g.lower() + g.upper()).transpose();
    p.constraints.row(i).segment(n, n) = (g.upper() - g.lower()).transpose();
    p.constraints(i, 2 * n) = -2.0;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index r = m + 3 * j;
    p.constraints(r, j) = -1.0;
    p.constraints(r, n + j) = -1.0;
    p.constraints(r + 1, j) = 1.0;
    p.constraints(r + 1, n + j) = -1.0;
    p.constraints(r + 2, n + j) = -1.0;
  }
  return p;
}

}  // namespace

SubproblemSolution solve_direction(const Linearization& model) {
  const Eigen::Index n = model.n();
  const Eigen::Index m = model.m();
  if (m < 1 || n < 1) throw DimensionError("direction subproblem needs n >= 1 and m >= 1");
  const qp::Problem qp = build_epigraph_qp(model);

  // Feasible start: v = −(midpoint gradient of the first objective), u = |v|,
  // τ at the tightest objective row.
  const auto& g0 = model.grads().front();
  Vector z0 = Vector::Zero(2 * n + 1);
  z0.head(n) = -0.5 * (g0.lower() + g0.upper());
  z0.segment(n, n) = z0.head(n).cwiseAbs();
  const Vector row_values = qp.constraints.topRows(m).leftCols(2 * n) * z0.head(2 * n);
  Eigen::Index tight = 0;
  const double top = row_values.maxCoeff(&tight);
  z0[2 * n] = 0.5 * top;

  std::vector<int> working;
  working.push_back(static_cast<int>(tight));
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index r = m + 3 * j;
    working.push_back(static_cast<int>(z0[j] < 0.0 ? r : r + 1));
  }

  qp::Options opts;
  opts.max_iterations = static_cast<int>(100 * (2 * n + 1));
  const qp::Result res = qp::solve(qp, z0, std::move(working), opts);

  SubproblemSolution sol;
  sol.v = res.z.head(n);
  sol.tau = model.psi(sol.v);
  sol.xi = sol.tau + 0.5 * sol.v.squaredNorm();
  if (sol.xi > 0.0) {
    // v = 0 is always feasible with value 0.
    sol.v.setZero();
    sol.tau = 0.0;
    sol.xi = 0.0;
  }
  const double scale = std::max(1.0, qp.constraints.cwiseAbs().maxCoeff());
  sol.kkt_residual = res.kkt_residual / scale;
  sol.qp_iterations = res.iterations;
  return sol;
}

SubproblemSolution solve_direction(const Ivmop& problem, const Vector& x) {
  return solve_direction(linearize(problem, x));
}

bool is_pareto_critical(const Ivmop& problem, const Vector& x, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("criticality tolerance must be positive");
  return solve_direction(problem, x).xi > -eps;
}

std::vector<Vector> sample_unit_directions(int n, int count) {
  std::vector<Vector> dirs;
  if (n == 1) {
    dirs.push_back(Vector::Constant(1, 1.0));
    dirs.push_back(Vector::Constant(1, -1.0));
  } else if (n == 2) {
    for (int k = 0; k < count; ++k) {
      const double a = 2.0 * std::numbers::pi * k / count;
      Vector d(2);
      d << std::cos(a), std::sin(a);
      dirs.push_back(d);
    }
  } else if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double y = 1.0 - 2.0 * (k + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - y * y));
      const double a = golden * k;
      Vector d(3);
      d << r * std::cos(a), y, r * std::sin(a);
      dirs.push_back(d);
    }
  } else {
    throw std::invalid_argument("direction sampling is limited to n <= 3");
  }
  return dirs;
}

bool brute_force_critical_check(const Ivmop& problem, const Vector& x, int directions,
                                double slope_tol) {
  const Linearization model = linearize(problem, x);
  for (const Vector& d : sample_unit_directions(problem.n(), directions)) {
    if (model.psi(d) < -slope_tol) return false;
  }
  return true;
}

}  // namespace ivncg
