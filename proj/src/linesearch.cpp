#include "ivncg/linesearch.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace ivncg {

void WolfeParams::validate() const {
  if (!(0.0 < rho && rho < sigma && sigma < 1.0)) {
    throw std::invalid_argument("Wolfe parameters need 0 < rho < sigma < 1");
  }
  if (!(t_init > 0.0 && t_max >= t_init)) {
    throw std::invalid_argument("Wolfe step bounds need 0 < t_init <= t_max");
  }
  if (max_brackets < 1 || max_zoom < 0) {
    throw std::invalid_argument("Wolfe trial budgets must be non-negative");
  }
}

namespace {

struct RayProbe {
  const Ivmop& problem;
  const Vector& x;
  const Vector& d;
  const WolfeParams& params;
  std::vector<Interval> values_at_x;
  double slope;  // Ψ∘Υ_x(d) < 0

  // Fills `check`; leaves the model at x + t d in `model` when sufficient
  // decrease holds.
  WolfeCheck probe(double t, std::optional<Linearization>& model) const {
    WolfeCheck check;
    const Vector y = x + t * d;
    const Interval decrease = scalar_mul(slope, Interval::point(params.rho * t));
    check.sufficient_decrease = true;
    for (int i = 0; i < problem.m(); ++i) {
      const Interval target = add(values_at_x[static_cast<std::size_t>(i)], decrease);
      if (!dominates(target, eval(problem.objective(i), y))) {
        check.sufficient_decrease = false;
        check.first_failing_objective = i;
        break;
      }
    }
    if (!check.sufficient_decrease) return check;
    model = linearize(problem, y);
    check.curvature = model->psi(d) >= params.sigma * slope;
    return check;
  }
};

double checked_slope(const Linearization& model, const Vector& d) {
  const double slope = model.psi(d);
  if (slope >= kStagnationSlope) {
    throw NonDescentError("search direction is not a descent direction (slope " +
                          std::to_string(slope) + ")");
  }
  return slope;
}

}  // namespace

WolfeCheck wolfe_check(const Ivmop& problem, const Vector& x, const Vector& d, double t,
                       const WolfeParams& params) {
  problem.check_dim(d);
  if (!(t > 0.0)) throw std::invalid_argument("step size must be positive");
  const Linearization model = linearize(problem, x);
  const double slope = checked_slope(model, d);
  if (slope >= 0.0) throw NonDescentError("search direction has zero slope");
  RayProbe ray{problem, x, d, params, eval(problem, x), slope};
  std::optional<Linearization> scratch;
  return ray.probe(t, scratch);
}

bool wolfe_holds(const Ivmop& problem, const Vector& x, const Vector& d, double t,
                 const WolfeParams& params) {
  return wolfe_check(problem, x, d, t, params).holds();
}

SearchResult search(const Ivmop& problem, const Vector& x, const Linearization& model_at_x,
                    const Vector& d, const WolfeParams& params) {
  params.validate();
  problem.check_dim(d);
  const double slope = checked_slope(model_at_x, d);
  SearchResult result;
  if (slope > -kStagnationSlope) {
    result.status = SearchStatus::Stagnation;
    return result;
  }
  RayProbe ray{problem, x, d, params, eval(problem, x), slope};

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  double t = params.t_init;
  auto accept = [&](double step, std::optional<Linearization>& model) {
    result.status = SearchStatus::Accepted;
    result.t = step;
    result.bracket_lo = lo;
    result.bracket_hi = hi;
    result.model_at_step = std::move(model);
    return result;
  };

  for (int b = 0; b < params.max_brackets; ++b) {
    std::optional<Linearization> model;
    const WolfeCheck c = ray.probe(t, model);
    ++result.trials;
    if (!c.sufficient_decrease) {
      hi = t;
      result.first_failing_objective = c.first_failing_objective;
      break;
    }
    if (c.curvature) return accept(t, model);
    lo = t;
    t *= 2.0;
    if (t > params.t_max) break;
  }

  if (std::isfinite(hi)) {
    for (int z = 0; z < params.max_zoom; ++z) {
      t = 0.5 * (lo + hi);
      std::optional<Linearization> model;
      const WolfeCheck c = ray.probe(t, model);
      ++result.trials;
      if (!c.sufficient_decrease) {
        hi = t;
        result.first_failing_objective = c.first_failing_objective;
      } else if (c.curvature) {
        return accept(t, model);
      } else {
        lo = t;
      }
    }
  }

  result.status = SearchStatus::Exhausted;
  result.bracket_lo = lo;
  result.bracket_hi = hi;
  return result;
}

SearchResult search(const Ivmop& problem, const Vector& x, const Vector& d,
                    const WolfeParams& params) {
  return search(problem, x, linearize(problem, x), d, params);
}

}  // namespace ivncg
