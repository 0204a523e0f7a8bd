#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ivncg/bench.hpp"
#include "ivncg/interval.hpp"
#include "ivncg/ncg.hpp"
#include "ivncg/problems.hpp"
#include "ivncg/subproblem.hpp"

namespace py = pybind11;
using namespace ivncg;

namespace {

VariantConfig make_config(const std::string& variant, double eps, double rho, double sigma, double c,
                          int max_iters, bool history) {
  VariantConfig cfg;
  cfg.beta_kind = parse_beta_kind(variant);
  cfg.eps = eps;
  cfg.c = c;
  cfg.max_iters = max_iters;
  cfg.keep_history = history;
  cfg.wolfe.rho = rho;
  cfg.wolfe.sigma = sigma;
  cfg.validate();
  return cfg;
}

py::dict trace_to_dict(const SolveTrace& t) {
  py::dict out;
  out["status"] = std::string(to_string(t.status));
  out["iterations"] = t.iterations;
  out["restarts"] = t.restarts;
  out["wall_time"] = t.wall_time;
  out["message"] = t.message;
  out["x"] = t.final_state().x;
  out["xi"] = t.final_state().xi;
  py::list states;
  for (const auto& s : t.states) {
    py::dict d;
    d["k"] = s.k;
    d["x"] = s.x;
    d["v"] = s.v;
    d["xi"] = s.xi;
    d["d"] = s.d;
    d["t"] = s.t;
    d["beta"] = s.beta;
    d["beta_raw"] = s.beta_raw;
    d["restarted"] = s.restarted;
    states.append(std::move(d));
  }
  out["states"] = std::move(states);
  return out;
}

py::dict record_to_dict(const bench::RunRecord& r) {
  py::dict d;
  d["problem"] = r.problem;
  d["variant"] = r.variant;
  d["seed"] = r.seed;
  d["iterations"] = r.iterations;
  d["wall_time"] = r.wall_time;
  d["status"] = std::string(to_string(r.status));
  d["final_xi"] = r.final_xi;
  return d;
}

bench::RunRecord record_from_dict(const py::dict& d) {
  bench::RunRecord r;
  r.problem = d["problem"].cast<std::string>();
  r.variant = d["variant"].cast<std::string>();
  r.seed = d.contains("seed") ? d["seed"].cast<std::uint64_t>() : 0;
  r.iterations = d["iterations"].cast<int>();
  r.wall_time = d.contains("wall_time") ? d["wall_time"].cast<double>() : 0.0;
  r.status = d.contains("status") ? parse_solve_status(d["status"].cast<std::string>())
                                  : SolveStatus::Critical;
  r.final_xi = d.contains("final_xi") ? d["final_xi"].cast<double>() : 0.0;
  return r;
}

}  // namespace

PYBIND11_MODULE(_ivncg, m) {
  m.doc() = "Nonlinear conjugate gradient methods for interval-valued multiobjective problems";

  py::register_exception<IntervalError>(m, "IntervalError", PyExc_ValueError);
  py::register_exception<ProblemNotFound>(m, "ProblemNotFound", PyExc_KeyError);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def_property_readonly("width", &Interval::width)
      .def_property_readonly("mid", &Interval::mid)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const Interval& p, double l) { return scalar_mul(l, p); })
      .def("__mul__", [](const Interval& p, double l) { return scalar_mul(l, p); })
      .def("__repr__", [](const Interval& p) { return "Interval" + to_string(p); });

  m.def("gh_diff", &gh_diff, py::arg("p"), py::arg("q"));
  m.def("norm", py::overload_cast<const Interval&>(&norm), py::arg("p"));
  m.def("dominates", &dominates, py::arg("p"), py::arg("q"), "p >= q endpointwise");
  m.def("strictly_dominates", &strictly_dominates, py::arg("p"), py::arg("q"));

  py::class_<Ivmop>(m, "Problem")
      .def(py::init([](std::string name, int n,
                       std::vector<std::tuple<ScalarFn, ScalarFn, GradientFn, GradientFn>> objectives,
                       Vector box_lo, Vector box_hi) {
             std::vector<IntervalObjective> objs;
             for (auto& [fl, fu, gl, gu] : objectives) objs.push_back({fl, fu, gl, gu});
             return Ivmop(std::move(name), n, std::move(objs), std::move(box_lo), std::move(box_hi));
           }),
           py::arg("name"), py::arg("n"), py::arg("objectives"), py::arg("box_lo"), py::arg("box_hi"),
           "objectives: list of (lower_fn, upper_fn, lower_grad, upper_grad)")
      .def_property_readonly("name", &Ivmop::name)
      .def_property_readonly("n", &Ivmop::n)
      .def_property_readonly("m", &Ivmop::m)
      .def_property_readonly("box_lo", &Ivmop::box_lo)
      .def_property_readonly("box_hi", &Ivmop::box_hi)
      .def("evaluate", [](const Ivmop& p, const Vector& x) { return eval(p, x); }, py::arg("x"))
      .def("psi", [](const Ivmop& p, const Vector& x, const Vector& v) { return psi_upsilon(p, x, v); },
           py::arg("x"), py::arg("v"))
      .def("__repr__", [](const Ivmop& p) {
        std::ostringstream os;
        os << "Problem('" << p.name() << "', n=" << p.n() << ", m=" << p.m() << ")";
        return os.str();
      });

  m.def("problem_names", [] {
    std::vector<std::string> names;
    for (const auto& p : registry()) names.push_back(p.name());
    return names;
  });
  m.def("problem", [](const std::string& name) { return lookup(name).definition; }, py::arg("name"));
  m.def("problem_family", [](const std::string& name) { return std::string(to_string(lookup(name).family)); },
        py::arg("name"));
  m.def("datasheet", [](const std::string& name) { return datasheet(lookup(name)); }, py::arg("name"));
  m.def("datasheets", &datasheets);
  m.def("sample_start", py::overload_cast<const Ivmop&, std::uint64_t>(&sample_start), py::arg("problem"),
        py::arg("seed"));

  m.def("direction",
        [](const Ivmop& p, const Vector& x) {
          const auto s = solve_direction(p, x);
          return py::make_tuple(s.v, s.xi);
        },
        py::arg("problem"), py::arg("x"), "returns (v, xi)");
  m.def("is_pareto_critical", &is_pareto_critical, py::arg("problem"), py::arg("x"), py::arg("eps") = 1e-6);

  m.def("solve",
        [](const Ivmop& p, const Vector& x0, const std::string& variant, double eps, double rho,
           double sigma, double c, int max_iters, bool history) {
          return trace_to_dict(solve(p, x0, make_config(variant, eps, rho, sigma, c, max_iters, history)));
        },
        py::arg("problem"), py::arg("x0"), py::arg("variant") = "prp", py::arg("eps") = 1e-6,
        py::arg("rho") = 0.001, py::arg("sigma") = 0.1, py::arg("c") = 0.1, py::arg("max_iters") = 50000,
        py::arg("history") = true);

  m.def("run_grid",
        [](std::vector<std::string> problems, std::vector<std::string> variants, int starts,
           std::uint64_t seed, int jobs, double eps, int max_iters) {
          bench::GridSpec g;
          g.problems = std::move(problems);
          for (const auto& v : variants) g.variants.push_back(parse_beta_kind(v));
          g.n_starts = starts;
          g.base_seed = seed;
          g.jobs = jobs;
          g.config.eps = eps;
          g.config.max_iters = max_iters;
          std::vector<bench::RunRecord> records;
          {
            py::gil_scoped_release release;
            records = bench::run_grid(g);
          }
          py::list out;
          for (const auto& r : records) out.append(record_to_dict(r));
          return out;
        },
        py::arg("problems"), py::arg("variants") = std::vector<std::string>{"sd", "prp", "hs", "ls"},
        py::arg("starts") = 100, py::arg("seed") = 0, py::arg("jobs") = 1, py::arg("eps") = 1e-6,
        py::arg("max_iters") = 50000);

  m.def("performance_profile",
        [](const py::list& records, const std::string& metric) {
          std::vector<bench::RunRecord> recs;
          for (const auto& r : records) recs.push_back(record_from_dict(r.cast<py::dict>()));
          py::dict out;
          for (const auto& c : bench::performance_profile(recs, bench::parse_metric(metric))) {
            out[py::str(c.solver)] = c.points;
          }
          return out;
        },
        py::arg("records"), py::arg("metric") = "iters", "solver -> [(z, F(z)), ...]");
}
