#include "ivncg/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace ivncg {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw IntervalError("interval endpoints must be finite");
  }
  if (lo > hi) {
    if (lo - hi > kOrderSlack) {
      throw IntervalError("interval lower endpoint exceeds upper: " + std::to_string(lo) +
                          " > " + std::to_string(hi));
    }
    std::swap(lo_, hi_);
  }
}

Interval add(const Interval& p, const Interval& q) {
  return Interval(p.lo() + q.lo(), p.hi() + q.hi());
}

Interval sub(const Interval& p, const Interval& q) {
  return Interval(p.lo() - q.hi(), p.hi() - q.lo());
}

Interval scalar_mul(double lambda, const Interval& p) {
  if (lambda >= 0.0) return Interval(lambda * p.lo(), lambda * p.hi());
  return Interval(lambda * p.hi(), lambda * p.lo());
}

Interval gh_diff(const Interval& p, const Interval& q) {
  const double a = p.lo() - q.lo();
  const double b = p.hi() - q.hi();
  return Interval(std::min(a, b), std::max(a, b));
}

double norm(const Interval& p) { return std::max(std::abs(p.lo()), std::abs(p.hi())); }

bool dominates(const Interval& p, const Interval& q) {
  return p.lo() >= q.lo() && p.hi() >= q.hi();
}

bool strictly_dominates(const Interval& p, const Interval& q) {
  return (p.lo() > q.lo() && p.hi() >= q.hi()) || (p.lo() >= q.lo() && p.hi() > q.hi());
}

bool approx_equal(const Interval& p, const Interval& q, double tol) {
  return std::abs(p.lo() - q.lo()) <= tol && std::abs(p.hi() - q.hi()) <= tol;
}

std::string to_string(const Interval& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", p.lo(), p.hi());
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Interval& p) { return os << to_string(p); }

}  // namespace ivncg
