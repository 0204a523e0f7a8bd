#include "ivncg/ncg.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ivncg/subproblem.hpp"

namespace ivncg {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::optional<double> guarded_quotient(double num, double den) {
  if (!(std::abs(den) >= kBetaDenominatorFloor)) return std::nullopt;
  return num / den;
}

double beta_numerator(const Linearization& prev_model, const Linearization& cur_model,
                      const Vector& cur_v) {
  return -cur_model.psi(cur_v) + prev_model.psi(cur_v);
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::string_view to_string(BetaKind kind) {
  switch (kind) {
    case BetaKind::SD: return "sd";
    case BetaKind::PRP: return "prp";
    case BetaKind::HS: return "hs";
    case BetaKind::LS: return "ls";
  }
  return "?";
}

BetaKind parse_beta_kind(std::string_view name) {
  const std::string s = lower(name);
  if (s == "sd") return BetaKind::SD;
  if (s == "prp") return BetaKind::PRP;
  if (s == "hs") return BetaKind::HS;
  if (s == "ls") return BetaKind::LS;
  throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected sd|prp|hs|ls)");
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Critical: return "critical";
    case SolveStatus::MaxIters: return "max_iters";
    case SolveStatus::LineSearchFail: return "line_search_fail";
    case SolveStatus::QpFail: return "qp_fail";
  }
  return "?";
}

SolveStatus parse_solve_status(std::string_view name) {
  for (auto s : {SolveStatus::Critical, SolveStatus::MaxIters, SolveStatus::LineSearchFail,
                 SolveStatus::QpFail}) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown solve status '" + std::string(name) + "'");
}

void VariantConfig::validate() const {
  if (!(c > 0.0)) throw std::invalid_argument("sufficient-descent constant c must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("criticality tolerance eps must be positive");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  wolfe.validate();
}

std::optional<double> beta_prp(const Linearization& prev_model, const Vector& prev_v,
                               const Linearization& cur_model, const Vector& cur_v) {
  return guarded_quotient(beta_numerator(prev_model, cur_model, cur_v), -prev_model.psi(prev_v));
}

std::optional<double> beta_hs(const Linearization& prev_model, const Vector& prev_d,
                              const Linearization& cur_model, const Vector& cur_v) {
  return guarded_quotient(beta_numerator(prev_model, cur_model, cur_v),
                          cur_model.psi(prev_d) - prev_model.psi(prev_d));
}

std::optional<double> beta_ls(const Linearization& prev_model, const Vector& prev_d,
                              const Linearization& cur_model, const Vector& cur_v) {
  return guarded_quotient(beta_numerator(prev_model, cur_model, cur_v), -prev_model.psi(prev_d));
}

std::optional<double> beta_raw(BetaKind kind, const Linearization& prev_model,
                               const Vector& prev_v, const Vector& prev_d,
                               const Linearization& cur_model, const Vector& cur_v) {
  switch (kind) {
    case BetaKind::SD: return 0.0;
    case BetaKind::PRP: return beta_prp(prev_model, prev_v, cur_model, cur_v);
    case BetaKind::HS: return beta_hs(prev_model, prev_d, cur_model, cur_v);
    case BetaKind::LS: return beta_ls(prev_model, prev_d, cur_model, cur_v);
  }
  return std::nullopt;
}

std::optional<double> beta_prp(const Ivmop& problem, const IterationState& prev,
                               const Vector& cur_x, const Vector& cur_v) {
  return beta_prp(linearize(problem, prev.x), prev.v, linearize(problem, cur_x), cur_v);
}

std::optional<double> beta_hs(const Ivmop& problem, const IterationState& prev,
                              const Vector& cur_x, const Vector& cur_v) {
  return beta_hs(linearize(problem, prev.x), prev.d, linearize(problem, cur_x), cur_v);
}

std::optional<double> beta_ls(const Ivmop& problem, const IterationState& prev,
                              const Vector& cur_x, const Vector& cur_v) {
  return beta_ls(linearize(problem, prev.x), prev.d, linearize(problem, cur_x), cur_v);
}

Vector direction(const Vector& cur_v, double beta_clipped, const Vector* d_prev) {
  if (beta_clipped < 0.0) throw std::invalid_argument("beta must be clipped at zero");
  if (d_prev == nullptr || beta_clipped == 0.0) return cur_v;
  if (d_prev->size() != cur_v.size()) throw DimensionError("previous direction has wrong length");
  return cur_v + beta_clipped * *d_prev;
}

DescentCheck enforce_sufficient_descent(const Linearization& model, const Vector& v,
                                        const Vector& d, double c) {
  if (model.psi(d) <= c * model.psi(v)) return {d, false};
  return {v, true};
}

DescentCheck enforce_sufficient_descent(const Ivmop& problem, const Vector& x, const Vector& v,
                                        const Vector& d, double c) {
  return enforce_sufficient_descent(linearize(problem, x), v, d, c);
}

SolveTrace solve(const Ivmop& problem, const Vector& x0, const VariantConfig& cfg) {
  cfg.validate();
  problem.check_dim(x0);
  const auto started = std::chrono::steady_clock::now();
  SolveTrace trace;

  auto push = [&](IterationState st) {
    if (!cfg.keep_history && !trace.states.empty()) trace.states.pop_back();
    trace.states.push_back(std::move(st));
  };
  auto finish = [&](SolveStatus status, std::string message = {}) {
    trace.status = status;
    trace.message = std::move(message);
    trace.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return std::move(trace);
  };

  Vector x = x0;
  Linearization model = linearize(problem, x);
  std::optional<Linearization> prev_model;
  Vector prev_v, prev_d;

  for (int k = 0;; ++k) {
    SubproblemSolution sub;
    try {
      sub = solve_direction(model);
    } catch (const QpError& e) {
      IterationState st;
      st.k = k;
      st.x = x;
      st.xi = kNaN;
      st.beta_raw = kNaN;
      push(std::move(st));
      return finish(SolveStatus::QpFail, e.what());
    }

    IterationState st;
    st.k = k;
    st.x = x;
    st.v = sub.v;
    st.xi = sub.xi;
    st.beta_raw = kNaN;

    if (sub.xi > -cfg.eps) {
      push(std::move(st));
      return finish(SolveStatus::Critical);
    }
    if (k >= cfg.max_iters) {
      push(std::move(st));
      return finish(SolveStatus::MaxIters);
    }

    Vector d = sub.v;
    bool restarted = false;
    if (prev_model) {
      const auto raw = beta_raw(cfg.beta_kind, *prev_model, prev_v, prev_d, model, sub.v);
      if (raw) {
        st.beta_raw = *raw;
        st.beta = std::max(*raw, 0.0);
        d = direction(sub.v, st.beta, &prev_d);
      } else {
        restarted = true;
      }
      const DescentCheck dc = enforce_sufficient_descent(model, sub.v, d, cfg.c);
      if (dc.restarted) restarted = true;
      d = dc.d;
    }
    if (restarted) st.beta = 0.0;

    SearchResult ls;
    try {
      ls = search(problem, x, model, d, cfg.wolfe);
      if (ls.status != SearchStatus::Accepted && d != sub.v) {
        d = sub.v;
        restarted = true;
        st.beta = 0.0;
        ls = search(problem, x, model, d, cfg.wolfe);
      }
    } catch (const NonDescentError& e) {
      st.d = d;
      push(std::move(st));
      return finish(SolveStatus::LineSearchFail, e.what());
    } catch (const IntervalError& e) {
      st.d = d;
      push(std::move(st));
      return finish(SolveStatus::LineSearchFail, e.what());
    }
    if (ls.status != SearchStatus::Accepted) {
      st.d = d;
      st.restarted = restarted;
      push(std::move(st));
      return finish(SolveStatus::LineSearchFail,
                    ls.status == SearchStatus::Stagnation ? "line search stagnated"
                                                          : "line search exhausted its trials");
    }

    if (restarted) ++trace.restarts;
    st.d = d;
    st.t = ls.t;
    st.restarted = restarted;
    push(std::move(st));
    ++trace.iterations;

    prev_model = std::move(model);
    prev_v = sub.v;
    prev_d = d;
    x += ls.t * d;
    model = std::move(*ls.model_at_step);
  }
}

}  // namespace ivncg
