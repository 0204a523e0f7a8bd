#include "ivncg/qp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ivncg::qp {

namespace {

struct WorkingSetFactor {
  Matrix null_basis;     // N x (N-k)
  Eigen::HouseholderQR<Matrix> qr;  // of A_Wᵀ
  bool empty = true;
};

WorkingSetFactor factor_working_set(const Problem& qp, const std::vector<int>& working) {
  const Eigen::Index nvar = qp.hessian.rows();
  WorkingSetFactor f;
  const auto k = static_cast<Eigen::Index>(working.size());
  if (k == 0) {
    f.null_basis = Matrix::Identity(nvar, nvar);
    return f;
  }
  Matrix at(nvar, k);
  for (Eigen::Index c = 0; c < k; ++c) at.col(c) = qp.constraints.row(working[c]).transpose();
  f.qr.compute(at);
  f.empty = false;
  Matrix q = f.qr.householderQ();
  f.null_basis = q.rightCols(nvar - k);
  return f;
}

Vector working_multipliers(const WorkingSetFactor& f, const Vector& gradient, Eigen::Index k) {
  // A_Wᵀ λ = -g in the least-squares sense, via the thin QR of A_Wᵀ.
  Matrix q = f.qr.householderQ();
  Vector rhs = -(q.leftCols(k).transpose() * gradient);
  return f.qr.matrixQR().topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(rhs);
}

}  // namespace

double kkt_residual(const Problem& qp, const Vector& z, const Vector& multipliers) {
  const Vector grad = qp.hessian * z + qp.linear;
  double res = (grad + qp.constraints.transpose() * multipliers).cwiseAbs().maxCoeff();
  const Vector slack = qp.constraints * z - qp.bounds;
  for (Eigen::Index i = 0; i < slack.size(); ++i) {
    res = std::max(res, std::max(0.0, slack[i]));
    res = std::max(res, std::max(0.0, -multipliers[i]));
    res = std::max(res, std::abs(multipliers[i] * slack[i]));
  }
  return res;
}

Result solve(const Problem& qp, const Vector& z0, std::vector<int> working,
             const Options& options) {
  const Eigen::Index nvar = qp.hessian.rows();
  const Eigen::Index ncon = qp.constraints.rows();
  if (qp.hessian.cols() != nvar || qp.linear.size() != nvar || qp.constraints.cols() != nvar ||
      qp.bounds.size() != ncon || z0.size() != nvar) {
    throw QpError("inconsistent QP dimensions");
  }
  const int max_iter =
      options.max_iterations > 0 ? options.max_iterations : static_cast<int>(100 * nvar);

  const double row_scale =
      ncon > 0 ? std::max(1.0, qp.constraints.cwiseAbs().maxCoeff()) : 1.0;
  for (Eigen::Index i = 0; i < ncon; ++i) {
    if (qp.constraints.row(i).dot(z0) - qp.bounds[i] > options.feasibility_tol * row_scale) {
      throw QpError("starting point violates constraint " + std::to_string(i));
    }
  }

  Vector z = z0;
  std::vector<char> in_working(static_cast<std::size_t>(ncon), 0);
  for (int w : working) in_working[static_cast<std::size_t>(w)] = 1;

  int degenerate_run = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const Vector grad = qp.hessian * z + qp.linear;
    const WorkingSetFactor f = factor_working_set(qp, working);
    const Eigen::Index k = static_cast<Eigen::Index>(working.size());
    const Eigen::Index free_dim = nvar - k;

    Vector step = Vector::Zero(nvar);
    bool unbounded_ray = false;
    if (free_dim > 0) {
      const Matrix& basis = f.null_basis;
      const Matrix reduced_h = basis.transpose() * qp.hessian * basis;
      const Vector reduced_g = basis.transpose() * grad;
      Eigen::SelfAdjointEigenSolver<Matrix> eig(reduced_h);
      const double curvature_floor = 1e-10 * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff());
      Vector newton = Vector::Zero(free_dim);
      Vector flat = Vector::Zero(free_dim);
      for (Eigen::Index e = 0; e < free_dim; ++e) {
        const auto u = eig.eigenvectors().col(e);
        const double coeff = u.dot(reduced_g);
        if (eig.eigenvalues()[e] > curvature_floor) {
          newton -= (coeff / eig.eigenvalues()[e]) * u;
        } else {
          flat -= coeff * u;
        }
      }
      if (flat.norm() > options.step_tol * (1.0 + grad.norm())) {
        // Zero-curvature descent: the objective falls linearly along this ray.
        step = basis * flat;
        unbounded_ray = true;
      } else {
        step = basis * newton;
      }
    }

    if (!unbounded_ray && step.cwiseAbs().maxCoeff() <= options.step_tol * (1.0 + z.cwiseAbs().maxCoeff())) {
      Vector lambda_w = k > 0 ? working_multipliers(f, grad, k) : Vector();
      Eigen::Index drop = -1;
      double most_negative = -options.multiplier_tol * std::max(1.0, grad.cwiseAbs().maxCoeff());
      for (Eigen::Index c = 0; c < k; ++c) {
        if (degenerate_run > nvar) {
          // Bland-style: smallest constraint index with a negative multiplier.
          if (lambda_w[c] < most_negative &&
              (drop < 0 || working[static_cast<std::size_t>(c)] < working[static_cast<std::size_t>(drop)])) {
            drop = c;
          }
        } else if (lambda_w[c] < most_negative) {
          most_negative = lambda_w[c];
          drop = c;
        }
      }
      if (drop < 0) {
        Result r;
        r.z = z;
        r.multipliers = Vector::Zero(ncon);
        for (Eigen::Index c = 0; c < k; ++c) {
          r.multipliers[working[static_cast<std::size_t>(c)]] = std::max(0.0, lambda_w[c]);
        }
        r.working_set = working;
        r.iterations = iter;
        r.kkt_residual = kkt_residual(qp, z, r.multipliers);
        return r;
      }
      in_working[static_cast<std::size_t>(working[static_cast<std::size_t>(drop)])] = 0;
      working.erase(working.begin() + drop);
      continue;
    }

    double alpha = unbounded_ray ? std::numeric_limits<double>::infinity() : 1.0;
    int blocking = -1;
    const double step_scale = step.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < ncon; ++i) {
      if (in_working[static_cast<std::size_t>(i)]) continue;
      const double rate = qp.constraints.row(i).dot(step);
      if (rate <= 1e-14 * row_scale * step_scale) continue;
      const double room = std::max(0.0, qp.bounds[i] - qp.constraints.row(i).dot(z));
      const double ratio = room / rate;
      if (ratio < alpha) {
        alpha = ratio;
        blocking = static_cast<int>(i);
      }
    }
    if (!std::isfinite(alpha)) throw QpError("QP is unbounded below along a feasible ray");

    z += alpha * step;
    degenerate_run = alpha == 0.0 ? degenerate_run + 1 : 0;
    if (blocking >= 0) {
      working.push_back(blocking);
      in_working[static_cast<std::size_t>(blocking)] = 1;
    }
  }
  throw QpError("active-set iteration cap of " + std::to_string(max_iter) + " reached");
}

}  // namespace ivncg::qp
