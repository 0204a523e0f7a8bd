#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ivncg/ncg.hpp"
#include "ivncg/problems.hpp"

namespace ivncg::bench {

struct RunRecord {
  std::string problem;
  std::string variant;
  std::uint64_t seed = 0;
  int iterations = 0;
  double wall_time = 0.0;  // seconds
  SolveStatus status = SolveStatus::Critical;
  double final_xi = 0.0;

  bool operator==(const RunRecord&) const = default;
};

class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seed of start `index` for `problem`; independent of the variant.
std::uint64_t start_seed(std::uint64_t base_seed, const std::string& problem, int index);

struct GridSpec {
  std::vector<std::string> problems;
  std::vector<BetaKind> variants;
  int n_starts = 100;
  std::uint64_t base_seed = 0;
  VariantConfig config;  // beta_kind is overridden per variant
  int jobs = 1;          // worker threads
};

/// One record per (problem, variant, start), sorted by (problem, variant, seed).
std::vector<RunRecord> run_grid(const GridSpec& spec);

struct Triple {
  double min = 0.0, mean = 0.0, max = 0.0;
};

struct Summary {
  std::string problem;
  std::string variant;
  int runs = 0;
  int critical = 0;
  Triple iterations;
  Triple wall_time;
};

/// Per-(problem, variant) min/mean/max, ordered by (problem, variant).
std::vector<Summary> summarize(const std::vector<RunRecord>& records);
/// "(4, 4.00, 4)"
std::string format_triple(const Triple& t, int mean_digits = 2);

enum class Metric { Iterations, Time };
Metric parse_metric(const std::string& name);

struct ProfileCurve {
  std::string solver;
  std::vector<std::pair<double, double>> points;  // (z, F(z)), z ascending

  /// Step-function value; 0 below the first ratio.
  double value_at(double z) const;
};

/// Ratio R_{p,s} = mean_{p,s} / min_s mean_{p,s} for every problem/solver.
std::map<std::string, std::map<std::string, double>> performance_ratios(
    const std::vector<RunRecord>& records, Metric metric);

/// One curve per solver, in solver-name order.
std::vector<ProfileCurve> performance_profile(const std::vector<RunRecord>& records, Metric metric);

inline constexpr const char* kRecordHeader =
    "problem,variant,seed,iterations,wall_time_s,status,final_xi";

void write_records_csv(std::ostream& os, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_records_csv(std::istream& is);
void write_profile_csv(std::ostream& os, const std::vector<ProfileCurve>& curves);
void write_profile_svg(std::ostream& os, const std::vector<ProfileCurve>& curves,
                       const std::string& title);
void write_summary(std::ostream& os, const std::vector<Summary>& rows);

}  // namespace ivncg::bench
