#include "ivncg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace ivncg::bench {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// RFC 4180 rows; quoted fields may contain separators and line breaks.
std::vector<std::vector<std::string>> parse_csv(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, field_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  char ch;
  while (is.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (is.peek() == '"') {
          is.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        if (field_started || !field.empty()) throw BenchError("stray quote in CSV field");
        quoted = true;
        field_started = true;
        break;
      case ',': end_field(); break;
      case '\r':
        if (is.peek() == '\n') is.get(ch);
        end_row();
        break;
      case '\n': end_row(); break;
      default:
        field += ch;
        field_started = true;
    }
  }
  if (quoted) throw BenchError("unterminated quoted CSV field");
  if (field_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw BenchError(std::string("bad ") + what + " '" + s + "'");
  }
  if (used != s.size()) throw BenchError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    throw BenchError(std::string("bad ") + what + " '" + s + "'");
  }
  if (used != s.size() || s.empty() || s[0] == '-') {
    throw BenchError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

Triple triple_of(const std::vector<double>& xs) {
  Triple t;
  t.min = *std::min_element(xs.begin(), xs.end());
  t.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0;
  for (double x : xs) sum += x;
  t.mean = sum / static_cast<double>(xs.size());
  return t;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::uint64_t start_seed(std::uint64_t base_seed, const std::string& problem, int index) {
  std::uint64_t s = splitmix64(base_seed);
  s = splitmix64(s ^ fnv1a(problem));
  return splitmix64(s ^ static_cast<std::uint64_t>(index));
}

std::vector<RunRecord> run_grid(const GridSpec& spec) {
  if (spec.n_starts < 1) throw std::invalid_argument("n_starts must be at least 1");
  if (spec.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  spec.config.validate();

  struct Task {
    const ProblemSpec* problem;
    BetaKind variant;
    std::uint64_t seed;
    const Vector* x0;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<Vector>> starts;
  starts.reserve(spec.problems.size());
  for (const auto& name : spec.problems) {
    const ProblemSpec& p = lookup(name);
    auto& xs = starts.emplace_back();
    for (int i = 0; i < spec.n_starts; ++i) {
      xs.push_back(sample_start(p, start_seed(spec.base_seed, name, i)));
    }
    for (auto v : spec.variants) {
      for (int i = 0; i < spec.n_starts; ++i) {
        tasks.push_back({&p, v, start_seed(spec.base_seed, name, i), &xs[static_cast<std::size_t>(i)]});
      }
    }
  }

  std::vector<RunRecord> records(tasks.size());

  auto run_one = [&](std::size_t k) {
    const Task& t = tasks[k];
    VariantConfig cfg = spec.config;
    cfg.beta_kind = t.variant;
    cfg.keep_history = false;
    RunRecord rec;
    rec.problem = t.problem->name();
    rec.variant = std::string(to_string(t.variant));
    rec.seed = t.seed;
    try {
      const SolveTrace trace = solve(t.problem->definition, *t.x0, cfg);
      rec.iterations = trace.iterations;
      rec.wall_time = trace.wall_time;
      rec.status = trace.status;
      rec.final_xi = trace.final_state().xi;
    } catch (const std::exception&) {
      rec.status = SolveStatus::LineSearchFail;
      rec.final_xi = std::numeric_limits<double>::quiet_NaN();
    }
    records[k] = std::move(rec);
  };

  if (spec.jobs == 1 || tasks.size() < 2) {
    for (std::size_t k = 0; k < tasks.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const auto n_workers = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), tasks.size());
    for (std::size_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) run_one(k);
      });
    }
    for (auto& th : workers) th.join();
  }

  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.problem, a.variant, a.seed) < std::tie(b.problem, b.variant, b.seed);
  });
  return records;
}

std::vector<Summary> summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw BenchError("cannot summarize an empty record set");
  std::map<std::pair<std::string, std::string>, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) groups[{r.problem, r.variant}].push_back(&r);
  std::vector<Summary> out;
  for (const auto& [key, recs] : groups) {
    Summary s;
    s.problem = key.first;
    s.variant = key.second;
    s.runs = static_cast<int>(recs.size());
    std::vector<double> its, times;
    for (const auto* r : recs) {
      its.push_back(r->iterations);
      times.push_back(r->wall_time);
      if (r->status == SolveStatus::Critical) ++s.critical;
    }
    s.iterations = triple_of(its);
    s.wall_time = triple_of(times);
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_triple(const Triple& t, int mean_digits) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "(%.10g, %.*f, %.10g)", t.min, mean_digits, t.mean, t.max);
  return buf;
}

Metric parse_metric(const std::string& name) {
  if (name == "iters" || name == "iterations") return Metric::Iterations;
  if (name == "time") return Metric::Time;
  throw std::invalid_argument("unknown metric '" + name + "' (expected iters|time)");
}

double ProfileCurve::value_at(double z) const {
  double f = 0.0;
  for (const auto& [r, v] : points) {
    if (r > z) break;
    f = v;
  }
  return f;
}

std::map<std::string, std::map<std::string, double>> performance_ratios(
    const std::vector<RunRecord>& records, Metric metric) {
  std::map<std::string, std::map<std::string, std::pair<double, int>>> acc;
  std::set<std::string> solvers;
  for (const auto& r : records) {
    auto& slot = acc[r.problem][r.variant];
    slot.first += metric == Metric::Iterations ? static_cast<double>(r.iterations) : r.wall_time;
    slot.second += 1;
    solvers.insert(r.variant);
  }
  if (acc.empty()) throw BenchError("no records to profile");

  std::map<std::string, std::map<std::string, double>> ratios;
  for (const auto& [problem, per_solver] : acc) {
    std::map<std::string, double> means;
    for (const auto& s : solvers) {
      auto it = per_solver.find(s);
      if (it == per_solver.end()) {
        throw BenchError("solver '" + s + "' has no runs on problem '" + problem + "'");
      }
      const double mean = it->second.first / it->second.second;
      if (!(mean > 0.0)) {
        throw BenchError("mean metric of solver '" + s + "' on problem '" + problem +
                         "' is not positive");
      }
      means[s] = mean;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [s, m] : means) best = std::min(best, m);
    for (const auto& [s, m] : means) ratios[problem][s] = m / best;
  }
  return ratios;
}

std::vector<ProfileCurve> performance_profile(const std::vector<RunRecord>& records, Metric metric) {
  const auto ratios = performance_ratios(records, metric);
  std::map<std::string, std::vector<double>> per_solver;
  for (const auto& [problem, row] : ratios) {
    for (const auto& [s, r] : row) per_solver[s].push_back(r);
  }
  const double n_problems = static_cast<double>(ratios.size());
  std::vector<ProfileCurve> curves;
  for (auto& [s, rs] : per_solver) {
    std::sort(rs.begin(), rs.end());
    ProfileCurve c;
    c.solver = s;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i + 1 < rs.size() && rs[i + 1] == rs[i]) continue;
      c.points.emplace_back(rs[i], static_cast<double>(i + 1) / n_problems);
    }
    curves.push_back(std::move(c));
  }
  return curves;
}

void write_records_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << kRecordHeader << "\n";
  for (const auto& r : records) {
    os << csv_field(r.problem) << ',' << csv_field(r.variant) << ',' << r.seed << ','
       << r.iterations << ',' << fmt17(r.wall_time) << ',' << to_string(r.status) << ','
       << fmt17(r.final_xi) << "\n";
  }
}

std::vector<RunRecord> read_records_csv(std::istream& is) {
  auto rows = parse_csv(is);
  if (rows.empty()) throw BenchError("missing CSV header");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) header += (i ? "," : "") + rows[0][i];
  if (header != kRecordHeader) throw BenchError("unexpected CSV header '" + header + "'");
  std::vector<RunRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != 7) {
      throw BenchError("CSV row " + std::to_string(i + 1) + " has " + std::to_string(f.size()) +
                       " fields");
    }
    RunRecord r;
    r.problem = f[0];
    r.variant = f[1];
    r.seed = parse_u64(f[2], "seed");
    const double its = parse_double(f[3], "iterations");
    if (its < 0 || its != std::floor(its)) throw BenchError("bad iterations '" + f[3] + "'");
    r.iterations = static_cast<int>(its);
    r.wall_time = parse_double(f[4], "wall time");
    try {
      r.status = parse_solve_status(f[5]);
    } catch (const std::invalid_argument& e) {
      throw BenchError(e.what());
    }
    r.final_xi = parse_double(f[6], "final_xi");
    out.push_back(std::move(r));
  }
  return out;
}

void write_profile_csv(std::ostream& os, const std::vector<ProfileCurve>& curves) {
  os << "solver,z,F\n";
  for (const auto& c : curves) {
    for (const auto& [z, f] : c.points) os << csv_field(c.solver) << ',' << fmt17(z) << ',' << fmt17(f) << "\n";
  }
}

void write_profile_svg(std::ostream& os, const std::vector<ProfileCurve>& curves,
                       const std::string& title) {
  constexpr double W = 640, H = 420, left = 60, right = 130, top = 40, bottom = 50;
  const double pw = W - left - right, ph = H - top - bottom;
  double zmax = 1.0;
  for (const auto& c : curves) {
    for (const auto& p : c.points) zmax = std::max(zmax, p.first);
  }
  const double lmax = std::max(std::log10(zmax) * 1.05, 0.05);
  auto sx = [&](double z) { return left + pw * std::log10(z) / lmax; };
  auto sy = [&](double f) { return top + ph * (1.0 - f); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
     << xml_escape(title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    os << "<text x=\"" << left - 8 << "\" y=\"" << sy(f) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
       << f << "</text>\n";
  }
  for (double z = 1.0; std::log10(z) <= lmax + 1e-12; z *= 2.0) {
    os << "<line x1=\"" << sx(z) << "\" y1=\"" << top + ph << "\" x2=\"" << sx(z) << "\" y2=\""
       << top + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << sx(z) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
       << z << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << H - 12
     << "\" text-anchor=\"middle\" font-size=\"12\">z (log scale)</text>\n";
  os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" font-size=\"12\" "
     << "transform=\"rotate(-90 16 " << top + ph / 2 << ")\">F(z)</text>\n";

  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& c = curves[i];
    const char* colour = palette[i % (sizeof palette / sizeof *palette)];
    std::ostringstream pts;
    double prev = 0.0;
    pts << sx(1.0) << ',' << sy(0.0);
    for (const auto& [z, f] : c.points) {
      pts << ' ' << sx(z) << ',' << sy(prev) << ' ' << sx(z) << ',' << sy(f);
      prev = f;
    }
    pts << ' ' << left + pw << ',' << sy(prev);
    os << "<polyline data-solver=\"" << xml_escape(c.solver) << "\" fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"2\" points=\"" << pts.str() << "\"/>\n";
    const double ly = top + 16 + 18.0 * static_cast<double>(i);
    os << "<line x1=\"" << left + pw + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + pw + 32
       << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + pw + 38 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">"
       << xml_escape(c.solver) << "</text>\n";
  }
  os << "</svg>\n";
}

void write_summary(std::ostream& os, const std::vector<Summary>& rows) {
  std::size_t pw = 7, vw = 7;
  for (const auto& r : rows) {
    pw = std::max(pw, r.problem.size());
    vw = std::max(vw, r.variant.size());
  }
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-*s  %-*s  %9s  %-28s  %s\n", static_cast<int>(pw), "problem",
                static_cast<int>(vw), "variant", "critical", "iterations (min, mean, max)",
                "time s (min, mean, max)");
  os << buf;
  for (const auto& r : rows) {
    char crit[32];
    std::snprintf(crit, sizeof crit, "%d/%d", r.critical, r.runs);
    char tbuf[128];
    std::snprintf(tbuf, sizeof tbuf, "(%.4f, %.4f, %.4f)", r.wall_time.min, r.wall_time.mean,
                  r.wall_time.max);
    std::snprintf(buf, sizeof buf, "%-*s  %-*s  %9s  %-28s  %s\n", static_cast<int>(pw),
                  r.problem.c_str(), static_cast<int>(vw), r.variant.c_str(), crit,
                  format_triple(r.iterations).c_str(), tbuf);
    os << buf;
  }
}

}  // namespace ivncg::bench
