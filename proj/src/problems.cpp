#include "ivncg/problems.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace ivncg {

namespace {

IntervalObjective widen(ScalarFn f, GradientFn g, ScalarFn w, GradientFn gw) {
  return {f, [f, w](const Vector& x) { return f(x) + w(x); }, g,
          [g, gw](const Vector& x) -> Vector { return g(x) + gw(x); }};
}

IntervalObjective widen(ScalarFn f, GradientFn g, double width) {
  return {f, [f, width](const Vector& x) { return f(x) + width; }, g, g};
}

Vector filled(int n, double a) { return Vector::Constant(n, a); }

Vector vec2(double a, double b) {
  Vector v(2);
  v << a, b;
  return v;
}

// a · exp(s · (−(x0−cx)² − (x1−cy)²)) and its gradient.
struct Bump {
  double a, s, cx, cy;
  double value(const Vector& x) const {
    return a * std::exp(s * (-(x[0] - cx) * (x[0] - cx) - (x[1] - cy) * (x[1] - cy)));
  }
  Vector grad(const Vector& x) const {
    const double e = value(x);
    return vec2(-2.0 * s * (x[0] - cx) * e, -2.0 * s * (x[1] - cy) * e);
  }
};

ScalarFn sum_of(std::vector<Bump> bumps) {
  return [bumps](const Vector& x) {
    double s = 0.0;
    for (const auto& b : bumps) s += b.value(x);
    return s;
  };
}

GradientFn grad_sum_of(std::vector<Bump> bumps) {
  return [bumps](const Vector& x) -> Vector {
    Vector g = Vector::Zero(2);
    for (const auto& b : bumps) g += b.grad(x);
    return g;
  };
}

// ½ Σ_j a_j (x_j − c)²
IntervalObjective weighted_quadratic(Vector weights, double centre, double width_scale,
                                     double width_const) {
  auto f = [weights, centre](const Vector& x) {
    return 0.5 * (weights.array() * (x.array() - centre).square()).sum();
  };
  auto g = [weights, centre](const Vector& x) -> Vector {
    return (weights.array() * (x.array() - centre)).matrix();
  };
  auto w = [width_scale, width_const](const Vector& x) {
    return width_scale * x.squaredNorm() + width_const;
  };
  auto gw = [width_scale](const Vector& x) -> Vector { return 2.0 * width_scale * x; };
  return widen(f, g, w, gw);
}

ProblemSpec sch1() {
  auto f1 = [](const Vector& x) { return x[0] * x[0]; };
  auto g1 = [](const Vector& x) -> Vector { return 2.0 * x; };
  auto f2 = [](const Vector& x) { return (x[0] - 2) * (x[0] - 2); };
  auto g2 = [](const Vector& x) -> Vector { return Vector::Constant(1, 2 * (x[0] - 2)); };
  auto w2 = [](const Vector& x) { return 0.1 * x[0] * x[0]; };
  auto gw2 = [](const Vector& x) -> Vector { return 0.2 * x; };
  return {Ivmop("iv-sch1", 1, {widen(f1, g1, 0.5), widen(f2, g2, w2, gw2)}, filled(1, -5),
                filled(1, 5)),
          ProblemFamily::ConvexQuadratic,
          {"x^2", "(x - 2)^2"},
          {"0.5", "0.1 x^2"},
          "Intervalized analogue of Schaffer's first biobjective problem.",
          "x in [0, 2]"};
}

ProblemSpec quad_tr1() {
  auto f1 = [](const Vector& x) { return (x[0] - 1) * (x[0] - 1) + 1.2 * (x[1] - 1) * (x[1] - 1); };
  auto g1 = [](const Vector& x) -> Vector { return vec2(2 * (x[0] - 1), 2.4 * (x[1] - 1)); };
  auto f2 = [](const Vector& x) { return 1.2 * (x[0] + 1) * (x[0] + 1) + (x[1] + 1) * (x[1] + 1); };
  auto g2 = [](const Vector& x) -> Vector { return vec2(2.4 * (x[0] + 1), 2 * (x[1] + 1)); };
  return {Ivmop("iv-quad-tr1", 2, {widen(f1, g1, 0.5), widen(f2, g2, 1.0)}, filled(2, -3),
                filled(2, 3)),
          ProblemFamily::ConvexQuadratic,
          {"(x1 - 1)^2 + 1.2 (x2 - 1)^2", "1.2 (x1 + 1)^2 + (x2 + 1)^2"},
          {"0.5", "1"},
          "Strongly convex biobjective quadratic with widths constant in x. "
          "Constant widths give degenerate gH-gradients, so the critical set is the classical "
          "Pareto set of the lower endpoints.",
          "the curve of points where grad f1 and grad f2 are opposite, joining (1, 1) and (-1, -1)"};
}

ProblemSpec bk1() {
  auto f1 = [](const Vector& x) { return x.squaredNorm(); };
  auto g1 = [](const Vector& x) -> Vector { return 2.0 * x; };
  auto w1 = [](const Vector& x) { return 0.05 * x.squaredNorm(); };
  auto gw1 = [](const Vector& x) -> Vector { return 0.1 * x; };
  auto f2 = [](const Vector& x) { return (x.array() - 5.0).square().sum(); };
  auto g2 = [](const Vector& x) -> Vector { return 2.0 * (x.array() - 5.0).matrix(); };
  return {Ivmop("iv-bk1", 2, {widen(f1, g1, w1, gw1), widen(f2, g2, 0.5)}, filled(2, -5),
                filled(2, 10)),
          ProblemFamily::ConvexQuadratic,
          {"x1^2 + x2^2", "(x1 - 5)^2 + (x2 - 5)^2"},
          {"0.05 (x1^2 + x2^2)", "0.5"},
          "Intervalized analogue of Binh and Korn's BK1.",
          "the segment x1 = x2 in [0, 5]"};
}

ProblemSpec ikk1() {
  auto f1 = [](const Vector& x) { return x[0] * x[0]; };
  auto g1 = [](const Vector& x) -> Vector { return vec2(2 * x[0], 0); };
  auto w1 = [](const Vector& x) { return 0.1 * x[0] * x[0]; };
  auto gw1 = [](const Vector& x) -> Vector { return vec2(0.2 * x[0], 0); };
  auto f2 = [](const Vector& x) { return (x[0] - 20) * (x[0] - 20); };
  auto g2 = [](const Vector& x) -> Vector { return vec2(2 * (x[0] - 20), 0); };
  auto f3 = [](const Vector& x) { return x[1] * x[1]; };
  auto g3 = [](const Vector& x) -> Vector { return vec2(0, 2 * x[1]); };
  auto w3 = [](const Vector& x) { return 0.05 * x[1] * x[1] + 0.2; };
  auto gw3 = [](const Vector& x) -> Vector { return vec2(0, 0.1 * x[1]); };
  return {Ivmop("iv-ikk1", 2,
                {widen(f1, g1, w1, gw1), widen(f2, g2, 1.0), widen(f3, g3, w3, gw3)},
                filled(2, -50), filled(2, 50)),
          ProblemFamily::ConvexQuadratic,
          {"x1^2", "(x1 - 20)^2", "x2^2"},
          {"0.1 x1^2", "1", "0.05 x2^2 + 0.2"},
          "Intervalized analogue of the triobjective IKK1.",
          "critical whenever x1 in [0, 20]; every such point has a zero-slope objective pair"};
}

ProblemSpec mhhm2() {
  auto centred = [](double cx, double cy) {
    return std::pair<ScalarFn, GradientFn>{
        [cx, cy](const Vector& x) { return (x[0] - cx) * (x[0] - cx) + (x[1] - cy) * (x[1] - cy); },
        [cx, cy](const Vector& x) -> Vector { return vec2(2 * (x[0] - cx), 2 * (x[1] - cy)); }};
  };
  auto [f1, g1] = centred(0.8, 0.6);
  auto [f2, g2] = centred(0.85, 0.7);
  auto [f3, g3] = centred(0.9, 0.6);
  auto w2 = [](const Vector& x) { return 0.02 * x.squaredNorm(); };
  auto gw2 = [](const Vector& x) -> Vector { return 0.04 * x; };
  return {Ivmop("iv-mhhm2", 2, {widen(f1, g1, 0.05), widen(f2, g2, w2, gw2), widen(f3, g3, 0.1)},
                filled(2, 0), filled(2, 1)),
          ProblemFamily::ConvexQuadratic,
          {"(x1 - 0.8)^2 + (x2 - 0.6)^2", "(x1 - 0.85)^2 + (x2 - 0.7)^2",
           "(x1 - 0.9)^2 + (x2 - 0.6)^2"},
          {"0.05", "0.02 (x1^2 + x2^2)", "0.1"},
          "Intervalized analogue of the triobjective MHHM2.",
          "a neighbourhood of the triangle with vertices (0.8, 0.6), (0.85, 0.7), (0.9, 0.6)"};
}

ProblemSpec vfm1() {
  auto f1 = [](const Vector& x) { return x[0] * x[0] + (x[1] - 1) * (x[1] - 1); };
  auto g1 = [](const Vector& x) -> Vector { return vec2(2 * x[0], 2 * (x[1] - 1)); };
  auto w1 = [](const Vector& x) { return 0.1 * (1 + x[0] * x[0]); };
  auto gw1 = [](const Vector& x) -> Vector { return vec2(0.2 * x[0], 0); };
  auto f2 = [](const Vector& x) { return x[0] * x[0] + (x[1] + 1) * (x[1] + 1) + 1; };
  auto g2 = [](const Vector& x) -> Vector { return vec2(2 * x[0], 2 * (x[1] + 1)); };
  auto f3 = [](const Vector& x) { return (x[0] - 1) * (x[0] - 1) + x[1] * x[1] + 2; };
  auto g3 = [](const Vector& x) -> Vector { return vec2(2 * (x[0] - 1), 2 * x[1]); };
  auto w3 = [](const Vector& x) { return 0.1 * x[1] * x[1]; };
  auto gw3 = [](const Vector& x) -> Vector { return vec2(0, 0.2 * x[1]); };
  return {Ivmop("iv-vfm1", 2, {widen(f1, g1, w1, gw1), widen(f2, g2, 0.2), widen(f3, g3, w3, gw3)},
                filled(2, -2), filled(2, 2)),
          ProblemFamily::ConvexQuadratic,
          {"x1^2 + (x2 - 1)^2", "x1^2 + (x2 + 1)^2 + 1", "(x1 - 1)^2 + x2^2 + 2"},
          {"0.1 (1 + x1^2)", "0.2", "0.1 x2^2"},
          "Intervalized analogue of Viennet-Fontiex-Marc's VFM1.",
          "a neighbourhood of the triangle (0, 1), (0, -1), (1, 0)"};
}

ProblemSpec ap1() {
  auto f1 = [](const Vector& x) {
    return 0.25 * (std::pow(x[0] - 1, 4) + 2 * std::pow(x[1] - 2, 4));
  };
  auto g1 = [](const Vector& x) -> Vector {
    return vec2(std::pow(x[0] - 1, 3), 2 * std::pow(x[1] - 2, 3));
  };
  auto f2 = [](const Vector& x) { return std::exp(0.5 * (x[0] + x[1])) + x.squaredNorm(); };
  auto g2 = [](const Vector& x) -> Vector {
    const double e = 0.5 * std::exp(0.5 * (x[0] + x[1]));
    return vec2(e + 2 * x[0], e + 2 * x[1]);
  };
  auto w2 = [](const Vector& x) { return 0.05 * x.squaredNorm(); };
  auto gw2 = [](const Vector& x) -> Vector { return 0.1 * x; };
  auto f3 = [](const Vector& x) { return (std::exp(-x[0]) + 2 * std::exp(-x[1])) / 6; };
  auto g3 = [](const Vector& x) -> Vector {
    return vec2(-std::exp(-x[0]) / 6, -2 * std::exp(-x[1]) / 6);
  };
  auto w3 = [](const Vector& x) { return 0.02 * std::exp(-x[0]); };
  auto gw3 = [](const Vector& x) -> Vector { return vec2(-0.02 * std::exp(-x[0]), 0); };
  return {Ivmop("iv-ap1", 2, {widen(f1, g1, 0.1), widen(f2, g2, w2, gw2), widen(f3, g3, w3, gw3)},
                filled(2, -3), filled(2, 3)),
          ProblemFamily::Convex,
          {"((x1 - 1)^4 + 2 (x2 - 2)^4) / 4", "exp((x1 + x2) / 2) + x1^2 + x2^2",
           "(exp(-x1) + 2 exp(-x2)) / 6"},
          {"0.1", "0.05 (x1^2 + x2^2)", "0.02 exp(-x1)"},
          "Intervalized analogue of Ansary and Panda's AP1 (convex, non-quadratic).",
          ""};
}

ProblemSpec quad_n10() {
  Vector a(10), b(10);
  for (int j = 0; j < 10; ++j) {
    a[j] = 1.0 + j;
    b[j] = 10.0 - j;
  }
  return {Ivmop("iv-quad-n10", 10,
                {weighted_quadratic(a, 1.0, 0.05, 0.0), weighted_quadratic(b, -1.0, 0.0, 0.5)},
                filled(10, -5), filled(10, 5)),
          ProblemFamily::ConvexQuadratic,
          {"sum_j (1 + j) (x_j - 1)^2 / 2,  j = 0..9", "sum_j (10 - j) (x_j + 1)^2 / 2"},
          {"0.05 |x|^2", "0.5"},
          "Ill-conditioned (ratio 10) biobjective quadratic in ten variables.",
          ""};
}

constexpr double kJosN = 30.0;

ProblemSpec jos1() {
  auto f1 = [](const Vector& x) { return x.squaredNorm() / kJosN; };
  auto g1 = [](const Vector& x) -> Vector { return 2.0 * x / kJosN; };
  auto f2 = [](const Vector& x) { return (x.array() - 2.0).square().sum() / kJosN; };
  auto g2 = [](const Vector& x) -> Vector { return 2.0 * (x.array() - 2.0).matrix() / kJosN; };
  auto w2 = [](const Vector& x) { return 0.05 * x.squaredNorm() / kJosN; };
  auto gw2 = [](const Vector& x) -> Vector { return 0.1 * x / kJosN; };
  return {Ivmop("iv-jos1", 30, {widen(f1, g1, 0.1), widen(f2, g2, w2, gw2)}, filled(30, -10),
                filled(30, 10)),
          ProblemFamily::ConvexQuadratic,
          {"|x|^2 / n", "|x - 2|^2 / n"},
          {"0.1", "0.05 |x|^2 / n"},
          "Intervalized analogue of Jin-Olhofer-Sendhoff JOS1 with n = 30.",
          "the segment x = s (1, ..., 1), s in [0, 2]"};
}

ProblemSpec fon() {
  const double c = 1.0 / std::sqrt(3.0);
  auto f1 = [c](const Vector& x) { return 1 - std::exp(-(x.array() - c).square().sum()); };
  auto g1 = [c](const Vector& x) -> Vector {
    return 2.0 * (x.array() - c).matrix() * std::exp(-(x.array() - c).square().sum());
  };
  auto f2 = [c](const Vector& x) { return 1 - std::exp(-(x.array() + c).square().sum()); };
  auto g2 = [c](const Vector& x) -> Vector {
    return 2.0 * (x.array() + c).matrix() * std::exp(-(x.array() + c).square().sum());
  };
  auto w1 = [](const Vector& x) { return 0.1 * std::exp(-x.squaredNorm()); };
  auto gw1 = [](const Vector& x) -> Vector { return -0.2 * x * std::exp(-x.squaredNorm()); };
  return {Ivmop("iv-fon-like", 3, {widen(f1, g1, w1, gw1), widen(f2, g2, 0.05)}, filled(3, -2),
                filled(3, 2)),
          ProblemFamily::Nonconvex,
          {"1 - exp(-|x - 1/sqrt(3)|^2)", "1 - exp(-|x + 1/sqrt(3)|^2)"},
          {"0.1 exp(-|x|^2)", "0.05"},
          "Intervalized analogue of Fonseca-Fleming FON; exponential endpoints, nonconvex.",
          "contains the diagonal segment between -1/sqrt(3) (1,1,1) and 1/sqrt(3) (1,1,1); far "
          "from the origin the gradients vanish numerically"};
}

ProblemSpec far1() {
  std::vector<Bump> b1{{-2, 15, 0.1, 0.0}, {-1, 20, 0.6, 0.6}, {1, 20, -0.6, 0.6},
                       {1, 20, 0.6, -0.6}, {1, 20, -0.6, -0.6}};
  std::vector<Bump> b2{{2, 20, 0.0, 0.0}, {1, 20, 0.4, 0.6}, {-1, 20, -0.5, 0.7},
                       {-1, 20, 0.5, -0.7}, {1, 20, -0.4, -0.8}};
  auto w2 = [](const Vector& x) { return 0.05 * (1 + x[0] * x[0]); };
  auto gw2 = [](const Vector& x) -> Vector { return vec2(0.1 * x[0], 0); };
  return {Ivmop("iv-far1", 2,
                {widen(sum_of(b1), grad_sum_of(b1), 0.1), widen(sum_of(b2), grad_sum_of(b2), w2, gw2)},
                filled(2, -1), filled(2, 1)),
          ProblemFamily::Nonconvex,
          {"-2 e^{15 q(0.1, 0)} - e^{20 q(0.6, 0.6)} + e^{20 q(-0.6, 0.6)} + e^{20 q(0.6, -0.6)} + "
           "e^{20 q(-0.6, -0.6)}",
           "2 e^{20 q(0, 0)} + e^{20 q(0.4, 0.6)} - e^{20 q(-0.5, 0.7)} - e^{20 q(0.5, -0.7)} + "
           "e^{20 q(-0.4, -0.8)}"},
          {"0.1", "0.05 (1 + x1^2)"},
          "Intervalized analogue of FAR1; q(a, b) = -(x1 - a)^2 - (x2 - b)^2. Multimodal.",
          ""};
}

ProblemSpec viennet() {
  auto f1 = [](const Vector& x) {
    const double r = x.squaredNorm();
    return 0.5 * r + std::sin(r);
  };
  auto g1 = [](const Vector& x) -> Vector { return x * (1 + 2 * std::cos(x.squaredNorm())); };
  auto f2 = [](const Vector& x) {
    const double a = 3 * x[0] - 2 * x[1] + 4, b = x[0] - x[1] + 1;
    return a * a / 8 + b * b / 27 + 15;
  };
  auto g2 = [](const Vector& x) -> Vector {
    const double a = 3 * x[0] - 2 * x[1] + 4, b = x[0] - x[1] + 1;
    return vec2(0.75 * a + 2 * b / 27, -0.5 * a - 2 * b / 27);
  };
  auto w2 = [](const Vector& x) { return 0.01 * x.squaredNorm(); };
  auto gw2 = [](const Vector& x) -> Vector { return 0.02 * x; };
  auto f3 = [](const Vector& x) {
    const double r = x.squaredNorm();
    return 1 / (r + 1) - 1.1 * std::exp(-r);
  };
  auto g3 = [](const Vector& x) -> Vector {
    const double r = x.squaredNorm();
    return x * (-2 / ((r + 1) * (r + 1)) + 2.2 * std::exp(-r));
  };
  return {Ivmop("iv-viennet", 2, {widen(f1, g1, 0.1), widen(f2, g2, w2, gw2), widen(f3, g3, 0.05)},
                filled(2, -3), filled(2, 3)),
          ProblemFamily::Nonconvex,
          {"r / 2 + sin(r), r = x1^2 + x2^2", "(3 x1 - 2 x2 + 4)^2 / 8 + (x1 - x2 + 1)^2 / 27 + 15",
           "1 / (r + 1) - 1.1 exp(-r)"},
          {"0.1", "0.01 r", "0.05"},
          "Intervalized analogue of Viennet's triobjective problem.",
          ""};
}

ProblemSpec rosen_bi() {
  constexpr int n = 4;
  auto f1 = [](const Vector& x) {
    double s = 0;
    for (int j = 0; j + 1 < n; ++j) {
      s += 100 * std::pow(x[j + 1] - x[j] * x[j], 2) + std::pow(1 - x[j], 2);
    }
    return s;
  };
  auto g1 = [](const Vector& x) -> Vector {
    Vector g = Vector::Zero(n);
    for (int j = 0; j + 1 < n; ++j) {
      const double r = x[j + 1] - x[j] * x[j];
      g[j] += -400 * x[j] * r - 2 * (1 - x[j]);
      g[j + 1] += 200 * r;
    }
    return g;
  };
  auto f2 = [](const Vector& x) { return x.squaredNorm(); };
  auto g2 = [](const Vector& x) -> Vector { return 2.0 * x; };
  auto w2 = [](const Vector& x) { return 0.05 * x[0] * x[0]; };
  auto gw2 = [](const Vector& x) -> Vector {
    Vector g = Vector::Zero(n);
    g[0] = 0.1 * x[0];
    return g;
  };
  return {Ivmop("iv-rosen-bi", n, {widen(f1, g1, 0.1), widen(f2, g2, w2, gw2)}, filled(n, -2),
                filled(n, 2)),
          ProblemFamily::Nonconvex,
          {"sum_{j<3} 100 (x_{j+1} - x_j^2)^2 + (1 - x_j)^2", "|x|^2"},
          {"0.1", "0.05 x1^2"},
          "Extended Rosenbrock paired with the squared norm; curved narrow valley.",
          ""};
}

std::vector<ProblemSpec> build_registry() {
  std::vector<ProblemSpec> r;
  r.push_back(sch1());
  r.push_back(quad_tr1());
  r.push_back(bk1());
  r.push_back(ikk1());
  r.push_back(mhhm2());
  r.push_back(vfm1());
  r.push_back(ap1());
  r.push_back(quad_n10());
  r.push_back(jos1());
  r.push_back(fon());
  r.push_back(far1());
  r.push_back(viennet());
  r.push_back(rosen_bi());
  return r;
}

}  // namespace

std::string_view to_string(ProblemFamily family) {
  switch (family) {
    case ProblemFamily::ConvexQuadratic: return "convex-quadratic";
    case ProblemFamily::Convex: return "convex";
    case ProblemFamily::Nonconvex: return "nonconvex";
  }
  return "?";
}

const std::vector<ProblemSpec>& registry() {
  static const std::vector<ProblemSpec> problems = build_registry();
  return problems;
}

const ProblemSpec& lookup(std::string_view name) {
  for (const auto& p : registry()) {
    if (p.name() == name) return p;
  }
  throw ProblemNotFound("unknown problem '" + std::string(name) + "'");
}

Vector sample_start(const Ivmop& problem, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector x(problem.n());
  for (int j = 0; j < problem.n(); ++j) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    x[j] = problem.box_lo()[j] + u * (problem.box_hi()[j] - problem.box_lo()[j]);
  }
  return x;
}

std::string datasheet(const ProblemSpec& spec) {
  std::ostringstream os;
  os << "## " << spec.name() << "\n\n";
  os << "- family: " << to_string(spec.family) << "\n";
  os << "- n = " << spec.n() << ", m = " << spec.m() << "\n";
  os << "- start box: ";
  const auto& lo = spec.definition.box_lo();
  const auto& hi = spec.definition.box_hi();
  bool uniform = (lo.array() == lo[0]).all() && (hi.array() == hi[0]).all();
  if (uniform) {
    os << "[" << lo[0] << ", " << hi[0] << "]^" << spec.n() << "\n";
  } else {
    for (int j = 0; j < spec.n(); ++j) os << (j ? " x " : "") << "[" << lo[j] << ", " << hi[j] << "]";
    os << "\n";
  }
  os << "\n| i | lower endpoint f_i | width w_i (upper = f_i + w_i) |\n|---|---|---|\n";
  for (int i = 0; i < spec.m(); ++i) {
    os << "| " << i + 1 << " | `" << spec.lower_formulas[static_cast<std::size_t>(i)] << "` | `"
       << spec.width_formulas[static_cast<std::size_t>(i)] << "` |\n";
  }
  os << "\n" << spec.reference_note << "\n";
  if (!spec.critical_note.empty()) os << "\nKnown critical set: " << spec.critical_note << ".\n";
  return os.str();
}

std::string datasheets() {
  std::string out = "# Shipped interval-valued test problems\n\n";
  for (const auto& p : registry()) out += datasheet(p) + "\n";
  return out;
}

}  // namespace ivncg
