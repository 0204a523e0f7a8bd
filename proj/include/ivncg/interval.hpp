#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ivncg {

class IntervalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Compact real interval [lo, hi] with finite endpoints.
///
/// Endpoints reversed by at most kOrderSlack are swapped silently; anything
/// larger (or non-finite) throws IntervalError.
class Interval {
 public:
  static constexpr double kOrderSlack = 1e-12;

  constexpr Interval() = default;
  Interval(double lo, double hi);

  /// Degenerate interval [a, a].
  static Interval point(double a) { return Interval(a, a); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  bool is_degenerate() const { return lo_ == hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval add(const Interval& p, const Interval& q);
Interval sub(const Interval& p, const Interval& q);
Interval scalar_mul(double lambda, const Interval& p);

/// Generalized Hukuhara difference P -gH Q.
Interval gh_diff(const Interval& p, const Interval& q);

/// max{|lo|, |hi|}
double norm(const Interval& p);

/// P ⪰ Q, i.e. Q dominates P: both endpoints of P are at least those of Q.
bool dominates(const Interval& p, const Interval& q);

/// P ≻ Q: weak dominance with at least one strict endpoint inequality.
bool strictly_dominates(const Interval& p, const Interval& q);

/// Endpoint-wise comparison with absolute tolerance.
bool approx_equal(const Interval& p, const Interval& q, double tol);

inline Interval operator+(const Interval& p, const Interval& q) { return add(p, q); }
inline Interval operator-(const Interval& p, const Interval& q) { return sub(p, q); }
inline Interval operator*(double lambda, const Interval& p) { return scalar_mul(lambda, p); }

/// "[lo, hi]" with 17 significant digits.
std::string to_string(const Interval& p);
std::ostream& operator<<(std::ostream& os, const Interval& p);

}  // namespace ivncg
