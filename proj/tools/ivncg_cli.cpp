#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivncg/bench.hpp"
#include "ivncg/ncg.hpp"
#include "ivncg/problems.hpp"

namespace {

struct Tolerances {
  double eps = 1e-6;
  double rho = 0.001;
  double sigma = 0.1;
  double c = 0.1;
  int max_iters = 50000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--eps", eps, "criticality tolerance")->capture_default_str();
    cmd->add_option("--rho", rho, "sufficient-decrease constant")->capture_default_str();
    cmd->add_option("--sigma", sigma, "curvature constant")->capture_default_str();
    cmd->add_option("--c", c, "sufficient-descent constant")->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "iteration cap")->capture_default_str();
  }

  ivncg::VariantConfig config() const {
    ivncg::VariantConfig cfg;
    cfg.eps = eps;
    cfg.c = c;
    cfg.max_iters = max_iters;
    cfg.wolfe.rho = rho;
    cfg.wolfe.sigma = sigma;
    cfg.validate();
    return cfg;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  return f;
}

int cmd_solve(const std::string& problem, const std::string& variant, std::uint64_t seed,
              const Tolerances& tol, const std::string& trace_path) {
  const auto& spec = ivncg::lookup(problem);
  auto cfg = tol.config();
  cfg.beta_kind = ivncg::parse_beta_kind(variant);
  cfg.keep_history = !trace_path.empty();
  const ivncg::Vector x0 = ivncg::sample_start(spec, seed);
  const auto trace = ivncg::solve(spec.definition, x0, cfg);
  const auto& fin = trace.final_state();

  std::cout << "problem     " << spec.name() << "\n"
            << "variant     " << ivncg::to_string(cfg.beta_kind) << "\n"
            << "seed        " << seed << "\n"
            << "status      " << ivncg::to_string(trace.status) << "\n"
            << "iterations  " << trace.iterations << "\n"
            << "restarts    " << trace.restarts << "\n"
            << "final xi    " << g17(fin.xi) << "\n"
            << "wall time   " << g17(trace.wall_time) << " s\n";
  std::cout << "x0          ";
  for (Eigen::Index j = 0; j < x0.size(); ++j) std::cout << (j ? " " : "") << g17(x0[j]);
  std::cout << "\nx*          ";
  for (Eigen::Index j = 0; j < fin.x.size(); ++j) std::cout << (j ? " " : "") << g17(fin.x[j]);
  std::cout << "\n";
  if (!trace.message.empty()) std::cout << "note        " << trace.message << "\n";

  if (!trace_path.empty()) {
    auto f = open_out(trace_path);
    f << "k,xi,norm_v,beta,t,restarted\n";
    for (const auto& st : trace.states) {
      f << st.k << ',' << g17(st.xi) << ',' << g17(st.v.size() ? st.v.norm() : 0.0) << ','
        << g17(st.beta) << ',' << g17(st.t) << ',' << (st.restarted ? 1 : 0) << "\n";
    }
  }
  return trace.status == ivncg::SolveStatus::Critical ? 0 : 2;
}

int cmd_bench(const std::string& problems, const std::string& variants, int starts,
              std::uint64_t seed, int jobs, const Tolerances& tol, const std::string& out) {
  ivncg::bench::GridSpec grid;
  if (problems == "all") {
    for (const auto& p : ivncg::registry()) grid.problems.push_back(p.name());
  } else {
    grid.problems = split_list(problems);
  }
  for (const auto& v : split_list(variants)) grid.variants.push_back(ivncg::parse_beta_kind(v));
  if (grid.problems.empty() || grid.variants.empty()) {
    throw std::invalid_argument("need at least one problem and one variant");
  }
  grid.n_starts = starts;
  grid.base_seed = seed;
  grid.jobs = jobs;
  grid.config = tol.config();
  const auto records = ivncg::bench::run_grid(grid);
  if (!out.empty()) {
    auto f = open_out(out);
    ivncg::bench::write_records_csv(f, records);
  }
  ivncg::bench::write_summary(std::cout, ivncg::bench::summarize(records));
  return 0;
}

int cmd_profile(const std::string& in, const std::string& metric, const std::string& out,
                const std::string& svg) {
  std::ifstream f(in, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + in + "'");
  const auto records = ivncg::bench::read_records_csv(f);
  const auto m = ivncg::bench::parse_metric(metric);
  const auto curves = ivncg::bench::performance_profile(records, m);
  if (out.empty()) {
    ivncg::bench::write_profile_csv(std::cout, curves);
  } else {
    auto o = open_out(out);
    ivncg::bench::write_profile_csv(o, curves);
  }
  if (!svg.empty()) {
    auto o = open_out(svg);
    ivncg::bench::write_profile_svg(o, curves, m == ivncg::bench::Metric::Time
                                                   ? "performance profile: wall time"
                                                   : "performance profile: iterations");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonlinear conjugate gradient methods for interval-valued multiobjective problems"};
  app.require_subcommand(1);

  std::string problem, variant = "prp", trace_path;
  std::uint64_t seed = 0;
  Tolerances solve_tol;
  auto* solve = app.add_subcommand("solve", "run one variant from one seeded start");
  solve->add_option("--problem", problem, "problem name")->required();
  solve->add_option("--variant", variant, "sd|prp|hs|ls")->capture_default_str();
  solve->add_option("--seed", seed, "start seed")->capture_default_str();
  solve->add_option("--trace", trace_path, "per-iteration CSV");
  solve_tol.attach(solve);

  std::string problems = "all", variants = "sd,prp,hs,ls", out;
  int starts = 100, jobs = 1;
  std::uint64_t base_seed = 0;
  Tolerances bench_tol;
  auto* bench = app.add_subcommand("bench", "run a problem x variant x start grid");
  bench->add_option("--problems", problems, "comma-separated names, or all")->capture_default_str();
  bench->add_option("--variants", variants, "comma-separated variants")->capture_default_str();
  bench->add_option("--starts", starts, "starts per problem")->capture_default_str();
  bench->add_option("--seed", base_seed, "base seed")->capture_default_str();
  bench->add_option("--out", out, "records CSV");
  bench->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  bench_tol.attach(bench);

  std::string in, metric = "iters", profile_out, svg;
  auto* profile = app.add_subcommand("profile", "performance profiles from a records CSV");
  profile->add_option("--in", in, "records CSV")->required();
  profile->add_option("--metric", metric, "iters|time")->capture_default_str();
  profile->add_option("--out", profile_out, "profile CSV (stdout if omitted)");
  profile->add_option("--svg", svg, "step plot");

  auto* probs = app.add_subcommand("problems", "shipped problem suite");
  probs->require_subcommand(1);
  auto* doc = probs->add_subcommand("doc", "markdown datasheets");
  auto* list = probs->add_subcommand("list", "names and sizes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(problem, variant, seed, solve_tol, trace_path);
    if (*bench) return cmd_bench(problems, variants, starts, base_seed, jobs, bench_tol, out);
    if (*profile) return cmd_profile(in, metric, profile_out, svg);
    if (*doc) {
      std::cout << ivncg::datasheets();
      return 0;
    }
    if (*list) {
      for (const auto& p : ivncg::registry()) {
        std::printf("%-14s n=%-3d m=%d  %s\n", p.name().c_str(), p.n(), p.m(),
                    std::string(ivncg::to_string(p.family)).c_str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
