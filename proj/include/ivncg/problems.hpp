#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ivncg/ivf.hpp"

namespace ivncg {

enum class ProblemFamily { ConvexQuadratic, Convex, Nonconvex };

std::string_view to_string(ProblemFamily family);

/// A shipped benchmark problem. Each objective is the intervalization
/// [f_i, f_i + w_i] of a classical smooth objective f_i with a smooth,
/// nonnegative width w_i, so the endpoint functions never cross.
struct ProblemSpec {
  Ivmop definition;
  ProblemFamily family;
  std::vector<std::string> lower_formulas;  // f_i
  std::vector<std::string> width_formulas;  // w_i
  std::string reference_note;
  std::string critical_note;  // known Pareto critical set, when analytic

  const std::string& name() const { return definition.name(); }
  int n() const { return definition.n(); }
  int m() const { return definition.m(); }
  bool is_convex() const { return family != ProblemFamily::Nonconvex; }
};

class ProblemNotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// All shipped problems, in a fixed order. Built once, immutable afterwards.
const std::vector<ProblemSpec>& registry();

const ProblemSpec& lookup(std::string_view name);

/// Uniform sample in [box_lo, box_hi]; a pure function of the seed.
Vector sample_start(const Ivmop& problem, std::uint64_t seed);
inline Vector sample_start(const ProblemSpec& spec, std::uint64_t seed) {
  return sample_start(spec.definition, seed);
}

/// Markdown datasheet of one problem (formulas, box, family, notes).
std::string datasheet(const ProblemSpec& spec);
/// Datasheets of the whole registry, concatenated.
std::string datasheets();

}  // namespace ivncg
