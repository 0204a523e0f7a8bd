#include "ivncg/ivf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ivncg {

GhGradient::GhGradient(const Vector& lower_endpoint_grad, const Vector& upper_endpoint_grad) {
  if (lower_endpoint_grad.size() != upper_endpoint_grad.size()) {
    throw DimensionError("endpoint gradients differ in length");
  }
  lower_ = lower_endpoint_grad.cwiseMin(upper_endpoint_grad);
  upper_ = lower_endpoint_grad.cwiseMax(upper_endpoint_grad);
}

GhGradient::GhGradient(std::span<const Interval> components)
    : lower_(static_cast<Eigen::Index>(components.size())),
      upper_(static_cast<Eigen::Index>(components.size())) {
  for (std::size_t j = 0; j < components.size(); ++j) {
    lower_[static_cast<Eigen::Index>(j)] = components[j].lo();
    upper_[static_cast<Eigen::Index>(j)] = components[j].hi();
  }
}

std::vector<Interval> GhGradient::components() const {
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Eigen::Index j = 0; j < size(); ++j) out.push_back(component(j));
  return out;
}

namespace {

void check_same_size(const GhGradient& grad, const Vector& v) {
  if (grad.size() != v.size()) throw DimensionError("direction length does not match gradient");
}

}  // namespace

double g_upper(const GhGradient& grad, const Vector& v) {
  check_same_size(grad, v);
  const double centre = 0.5 * (grad.lower() + grad.upper()).dot(v);
  const double spread = 0.5 * (grad.upper() - grad.lower()).dot(v.cwiseAbs());
  return centre + spread;
}

double g_lower(const GhGradient& grad, const Vector& v) {
  check_same_size(grad, v);
  const double centre = 0.5 * (grad.lower() + grad.upper()).dot(v);
  const double spread = 0.5 * (grad.upper() - grad.lower()).dot(v.cwiseAbs());
  return centre - spread;
}

Ivmop::Ivmop(std::string name, int n, std::vector<IntervalObjective> objectives, Vector box_lo,
             Vector box_hi)
    : name_(std::move(name)),
      n_(n),
      objectives_(std::move(objectives)),
      box_lo_(std::move(box_lo)),
      box_hi_(std::move(box_hi)) {
  if (n_ < 1) throw std::invalid_argument(name_ + ": dimension must be at least 1");
  if (objectives_.empty()) throw std::invalid_argument(name_ + ": needs at least one objective");
  if (box_lo_.size() != n_ || box_hi_.size() != n_) {
    throw DimensionError(name_ + ": sampling box does not match dimension");
  }
  for (int j = 0; j < n_; ++j) {
    if (!(box_lo_[j] < box_hi_[j])) {
      throw std::invalid_argument(name_ + ": sampling box must satisfy lo < hi componentwise");
    }
  }
  for (const auto& obj : objectives_) {
    if (!obj.lower_fn || !obj.upper_fn || !obj.lower_grad || !obj.upper_grad) {
      throw std::invalid_argument(name_ + ": objective is missing an endpoint callable");
    }
  }
}

void Ivmop::check_dim(const Vector& x) const {
  if (x.size() != n_) {
    throw DimensionError(name_ + ": expected a vector of length " + std::to_string(n_) +
                         ", got " + std::to_string(x.size()));
  }
}

Interval eval(const IntervalObjective& obj, const Vector& x) {
  return Interval(obj.lower_fn(x), obj.upper_fn(x));
}

std::vector<Interval> eval(const Ivmop& problem, const Vector& x) {
  problem.check_dim(x);
  std::vector<Interval> out;
  out.reserve(problem.objectives().size());
  for (const auto& obj : problem.objectives()) out.push_back(eval(obj, x));
  return out;
}

GhGradient gh_gradient(const IntervalObjective& obj, const Vector& x) {
  return GhGradient(obj.lower_grad(x), obj.upper_grad(x));
}

Linearization::Linearization(std::vector<GhGradient> grads) : grads_(std::move(grads)) {
  for (const auto& g : grads_) {
    if (g.size() != n()) throw DimensionError("gH-gradients differ in length");
  }
}

double Linearization::psi(const Vector& v) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& g : grads_) best = std::max(best, g_upper(g, v));
  return best;
}

Linearization linearize(const Ivmop& problem, const Vector& x) {
  problem.check_dim(x);
  std::vector<GhGradient> grads;
  grads.reserve(problem.objectives().size());
  for (const auto& obj : problem.objectives()) grads.push_back(gh_gradient(obj, x));
  return Linearization(std::move(grads));
}

double psi_upsilon(const Ivmop& problem, const Vector& x, const Vector& v) {
  problem.check_dim(v);
  return linearize(problem, x).psi(v);
}

Vector fd_gradient(const ScalarFn& f, const Vector& x) {
  Vector g(x.size());
  Vector probe = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double h = 1e-6 * (1.0 + std::abs(x[j]));
    probe[j] = x[j] + h;
    const double fp = f(probe);
    probe[j] = x[j] - h;
    const double fm = f(probe);
    probe[j] = x[j];
    g[j] = (fp - fm) / (2.0 * h);
  }
  return g;
}

GhGradient fd_gh_gradient(const IntervalObjective& obj, const Vector& x) {
  return GhGradient(fd_gradient(obj.lower_fn, x), fd_gradient(obj.upper_fn, x));
}

}  // namespace ivncg
