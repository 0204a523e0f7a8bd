#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <vector>

namespace ivncg::qp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class QpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// min ½ zᵀHz + cᵀz  s.t.  A z ≤ b, with H symmetric positive semidefinite.
struct Problem {
  Matrix hessian;
  Vector linear;
  Matrix constraints;
  Vector bounds;
};

struct Options {
  int max_iterations = 0;  // 0 means 100 * (number of variables)
  double step_tol = 1e-13;
  double multiplier_tol = 1e-12;
  double feasibility_tol = 1e-12;
};

struct Result {
  Vector z;
  Vector multipliers;  // one per constraint row, zero off the working set
  std::vector<int> working_set;
  int iterations = 0;
  double kkt_residual = 0.0;
};

/// Dense primal active-set method (null-space variant).
///
/// Starts from the feasible point z0 with working set `initial_working`,
/// whose rows must be active at z0 and linearly independent. Singular
/// reduced Hessians are handled by stepping along zero-curvature descent
/// directions until a constraint blocks.
Result solve(const Problem& qp, const Vector& z0, std::vector<int> initial_working,
             const Options& options = {});

/// max of stationarity, primal and dual infeasibility and complementarity,
/// all in the infinity norm.
double kkt_residual(const Problem& qp, const Vector& z, const Vector& multipliers);

}  // namespace ivncg::qp
