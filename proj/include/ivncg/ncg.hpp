#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivncg/ivf.hpp"
#include "ivncg/linesearch.hpp"

namespace ivncg {

/// Conjugate-gradient parameter: steepest descent (β = 0) or one of the
/// Polak–Ribière–Polyak, Hestenes–Stiefel and Liu–Storey quotients.
enum class BetaKind { SD, PRP, HS, LS };

std::string_view to_string(BetaKind kind);
/// Accepts "sd", "prp", "hs", "ls" (case-insensitive).
BetaKind parse_beta_kind(std::string_view name);

struct VariantConfig {
  BetaKind beta_kind = BetaKind::PRP;
  double c = 0.1;       // sufficient-descent constant
  double eps = 1e-6;    // stop once ξ(x) > −eps
  int max_iters = 50000;
  WolfeParams wolfe;
  bool keep_history = true;  // false keeps only the final state

  void validate() const;
};

struct IterationState {
  int k = 0;
  Vector x;
  Vector v;
  double xi = 0.0;
  Vector d;            // empty on the terminal state
  double t = 0.0;      // accepted step, 0 on the terminal state
  double beta = 0.0;   // clipped β used for d
  double beta_raw = 0.0;  // unclipped quotient; NaN when not computed
  bool restarted = false;
};

enum class SolveStatus { Critical, MaxIters, LineSearchFail, QpFail };

std::string_view to_string(SolveStatus status);
SolveStatus parse_solve_status(std::string_view name);

struct SolveTrace {
  std::vector<IterationState> states;
  SolveStatus status = SolveStatus::MaxIters;
  double wall_time = 0.0;  // seconds
  int iterations = 0;      // accepted steps
  int restarts = 0;
  std::string message;     // failure detail, empty on success

  const IterationState& final_state() const { return states.back(); }
};

/// Threshold below which a β denominator triggers a restart.
inline constexpr double kBetaDenominatorFloor = 1e-14;

/// β^PRP = [−Ψ_k(v_k) + Ψ_{k−1}(v_k)] / [−Ψ_{k−1}(v_{k−1})], unclipped, where
/// Ψ_j is Ψ∘Υ at x^j. Empty when the denominator is below
/// kBetaDenominatorFloor in magnitude.
std::optional<double> beta_prp(const Linearization& prev_model, const Vector& prev_v,
                               const Linearization& cur_model, const Vector& cur_v);
/// β^HS: same numerator over Ψ_k(d_{k−1}) − Ψ_{k−1}(d_{k−1}).
std::optional<double> beta_hs(const Linearization& prev_model, const Vector& prev_d,
                              const Linearization& cur_model, const Vector& cur_v);
/// β^LS: same numerator over −Ψ_{k−1}(d_{k−1}).
std::optional<double> beta_ls(const Linearization& prev_model, const Vector& prev_d,
                              const Linearization& cur_model, const Vector& cur_v);

/// Dispatches on `kind`; SD always yields 0.
std::optional<double> beta_raw(BetaKind kind, const Linearization& prev_model,
                               const Vector& prev_v, const Vector& prev_d,
                               const Linearization& cur_model, const Vector& cur_v);

/// Overloads that rebuild both linearizations from the problem.
std::optional<double> beta_prp(const Ivmop& problem, const IterationState& prev,
                               const Vector& cur_x, const Vector& cur_v);
std::optional<double> beta_hs(const Ivmop& problem, const IterationState& prev,
                              const Vector& cur_x, const Vector& cur_v);
std::optional<double> beta_ls(const Ivmop& problem, const IterationState& prev,
                              const Vector& cur_x, const Vector& cur_v);

/// d = v on the first iteration (no previous direction), v + β d_prev otherwise.
Vector direction(const Vector& cur_v, double beta_clipped, const Vector* d_prev);

struct DescentCheck {
  Vector d;
  bool restarted = false;
};

/// Keeps d when Ψ∘Υ_x(d) ≤ c Ψ∘Υ_x(v), otherwise falls back to v.
DescentCheck enforce_sufficient_descent(const Linearization& model, const Vector& v,
                                        const Vector& d, double c);
DescentCheck enforce_sufficient_descent(const Ivmop& problem, const Vector& x, const Vector& v,
                                        const Vector& d, double c);

/// Nonlinear conjugate gradient iteration for Pareto critical points.
/// Never throws on numerical failure; the status field reports it instead.
SolveTrace solve(const Ivmop& problem, const Vector& x0, const VariantConfig& cfg);

}  // namespace ivncg
