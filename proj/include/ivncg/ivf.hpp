#pragma once

#include <Eigen/Core>

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ivncg/interval.hpp"

namespace ivncg {

using Vector = Eigen::VectorXd;
using ScalarFn = std::function<double(const Vector&)>;
using GradientFn = std::function<Vector(const Vector&)>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One interval-valued objective G = [G_lower, G_upper], given by its endpoint
/// functions and their analytic gradients. All four callables must be pure.
struct IntervalObjective {
  ScalarFn lower_fn;
  ScalarFn upper_fn;
  GradientFn lower_grad;
  GradientFn upper_grad;
};

/// gH-gradient of an interval objective: component j is the interval spanned
/// by the two endpoint partials.
class GhGradient {
 public:
  GhGradient() = default;
  /// Takes the raw endpoint gradients and orders them componentwise.
  GhGradient(const Vector& lower_endpoint_grad, const Vector& upper_endpoint_grad);
  explicit GhGradient(std::span<const Interval> components);

  Eigen::Index size() const { return lower_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  Interval component(Eigen::Index j) const { return Interval(lower_[j], upper_[j]); }
  std::vector<Interval> components() const;

 private:
  Vector lower_;
  Vector upper_;
};

/// Upper endpoint of grad^T ⊙ v:  ½(lo+hi)ᵀv + ½(hi−lo)ᵀ|v|.
double g_upper(const GhGradient& grad, const Vector& v);
/// Lower endpoint of grad^T ⊙ v:  ½(lo+hi)ᵀv − ½(hi−lo)ᵀ|v|.
double g_lower(const GhGradient& grad, const Vector& v);

/// Unconstrained interval-valued multiobjective problem.
class Ivmop {
 public:
  Ivmop(std::string name, int n, std::vector<IntervalObjective> objectives, Vector box_lo,
        Vector box_hi);

  const std::string& name() const { return name_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(objectives_.size()); }
  const std::vector<IntervalObjective>& objectives() const { return objectives_; }
  const IntervalObjective& objective(int i) const { return objectives_.at(i); }
  const Vector& box_lo() const { return box_lo_; }
  const Vector& box_hi() const { return box_hi_; }

  void check_dim(const Vector& x) const;

 private:
  std::string name_;
  int n_;
  std::vector<IntervalObjective> objectives_;
  Vector box_lo_;
  Vector box_hi_;
};

Interval eval(const IntervalObjective& obj, const Vector& x);
std::vector<Interval> eval(const Ivmop& problem, const Vector& x);

GhGradient gh_gradient(const IntervalObjective& obj, const Vector& x);

/// The gH-gradients of every objective at a fixed point x. Evaluates the
/// directional functional Ψ∘Υ_x without touching the objectives again.
class Linearization {
 public:
  Linearization() = default;
  explicit Linearization(std::vector<GhGradient> grads);

  int m() const { return static_cast<int>(grads_.size()); }
  Eigen::Index n() const { return grads_.empty() ? 0 : grads_.front().size(); }
  const std::vector<GhGradient>& grads() const { return grads_; }

  /// max_i g_upper(grad_i, v)
  double psi(const Vector& v) const;

 private:
  std::vector<GhGradient> grads_;
};

Linearization linearize(const Ivmop& problem, const Vector& x);

/// Ψ∘Υ_x(v). Recomputes the gradients at x; prefer linearize() in loops.
double psi_upsilon(const Ivmop& problem, const Vector& x, const Vector& v);

/// Central differences with step 1e-6·(1+|x_j|). Test use only.
Vector fd_gradient(const ScalarFn& f, const Vector& x);
GhGradient fd_gh_gradient(const IntervalObjective& obj, const Vector& x);

}  // namespace ivncg
