#pragma once

#include <optional>
#include <stdexcept>

#include "ivncg/ivf.hpp"

namespace ivncg {

/// Parameters of the interval Wolfe line search. Defaults follow the
/// benchmark protocol (ρ = 0.001, σ = 0.1).
struct WolfeParams {
  double rho = 0.001;
  double sigma = 0.1;
  double t_init = 1.0;
  double t_max = 1e6;
  int max_brackets = 60;
  int max_zoom = 60;

  /// Throws std::invalid_argument unless 0 < ρ < σ < 1 and 0 < t_init ≤ t_max.
  void validate() const;
};

/// Raised when the search direction is not a descent direction, i.e.
/// Ψ∘Υ_x(d) ≥ kStagnationSlope.
class NonDescentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Slopes with |Ψ∘Υ_x(d)| below this are treated as numerical stagnation.
inline constexpr double kStagnationSlope = 1e-14;

struct WolfeCheck {
  bool sufficient_decrease = false;  // every endpoint of every objective
  bool curvature = false;
  int first_failing_objective = -1;  // first i violating sufficient decrease
  bool holds() const { return sufficient_decrease && curvature; }
};

/// Evaluates both standard Wolfe conditions at step t:
///   G_i(x+td) ⪯ G_i(x) ⊕ [ρt, ρt] ⊙ Ψ∘Υ_x(d)  for every i,
///   Ψ∘Υ_{x+td}(d) ≥ σ Ψ∘Υ_x(d).
WolfeCheck wolfe_check(const Ivmop& problem, const Vector& x, const Vector& d, double t,
                       const WolfeParams& params);
bool wolfe_holds(const Ivmop& problem, const Vector& x, const Vector& d, double t,
                 const WolfeParams& params);

enum class SearchStatus { Accepted, Stagnation, Exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  double t = 0.0;
  int trials = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;  // +inf while no upper bracket was found
  int first_failing_objective = -1;
  /// gH-gradients at x + t d when accepted; saves the caller a re-evaluation.
  std::optional<Linearization> model_at_step;
};

/// Bracket-and-bisect search for a step satisfying the standard Wolfe
/// conditions. Phase one doubles t from t_init until sufficient decrease
/// fails or both conditions hold; phase two bisects the bracket.
///
/// `model_at_x` must be linearize(problem, x). Returns Stagnation when
/// |Ψ∘Υ_x(d)| < kStagnationSlope and throws NonDescentError for larger
/// non-negative slopes.
SearchResult search(const Ivmop& problem, const Vector& x, const Linearization& model_at_x,
                    const Vector& d, const WolfeParams& params);
SearchResult search(const Ivmop& problem, const Vector& x, const Vector& d,
                    const WolfeParams& params);

}  // namespace ivncg
