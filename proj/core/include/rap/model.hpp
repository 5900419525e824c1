#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rap/errors.hpp"

namespace rap {

using BigInt = boost::multiprecision::cpp_int;

/// One purchasable component type: its reliability and its integer cost and
/// weight in budget/weight units.
struct ComponentOption {
  double reliability = 0.0;  // in (0, 1]
  int cost = 0;              // >= 0
  int weight = 0;            // >= 0
};

/// One subsystem: the component types available to it (order significant; it
/// fixes the coordinate order of count vectors) and the allowed range for the
/// total number of components placed in parallel.
struct SubsystemSpec {
  std::vector<ComponentOption> options;
  int min_total = 1;
  int max_total = 8;
};

/// A full problem instance: subsystems in series, global cost and weight
/// ceilings, and an optional reliability lower bound from a known solution.
struct RapInstance {
  std::vector<SubsystemSpec> subsystems;
  int cost_ceiling = 0;
  int weight_ceiling = 0;
  std::optional<double> reliability_lb;

  int subsystem_count() const { return static_cast<int>(subsystems.size()); }
};

/// Component counts for one subsystem, one entry per component option.
using CountVector = std::vector<int>;

/// Reliability/weight/cost triple. Weight and cost are exact integers;
/// reliability is binary64.
struct Aggregates {
  double reliability = 1.0;
  int weight = 0;
  int cost = 0;
};

/// A complete solution: one count vector per subsystem plus its aggregates.
struct SolutionVector {
  std::vector<CountVector> configs;
  Aggregates aggregates;
};

/// Throws InvalidArgument-style errors when an instance violates the model
/// invariants (empty subsystems, bad bounds, reliabilities outside (0,1], ...).
void validate_instance(const RapInstance& instance);

/// Reliability, weight, and cost of a single subsystem configuration:
///   R = 1 - prod_j (1 - r_j)^(x_j),  W = sum x_j w_j,  C = sum x_j c_j.
/// Powers are evaluated by repeated multiplication so results are bit-stable.
/// Throws StructuralError when the count vector length does not match.
Aggregates subsystem_aggregates(const CountVector& config, const SubsystemSpec& spec);

/// Aggregates of a complete solution: subsystem reliabilities multiply in
/// subsystem order, weights and costs add.
Aggregates system_aggregates(const SolutionVector& solution, const RapInstance& instance);

/// Builds a SolutionVector from raw configs, computing its aggregates.
SolutionVector make_solution(std::vector<CountVector> configs, const RapInstance& instance);

/// One violated constraint of a candidate solution.
struct Violation {
  enum class Kind { kCostCeiling, kWeightCeiling, kMinTotal, kMaxTotal };
  Kind kind;
  int subsystem = -1;  // 0-based; -1 for the system-wide ceilings
  std::string describe() const;
};

struct FeasibilityReport {
  bool feasible = false;
  std::vector<Violation> violations;
};

/// Checks the cost ceiling, the weight ceiling, and every subsystem's
/// min/max component-count bounds. Violations are reported, not thrown.
FeasibilityReport is_feasible(const SolutionVector& solution, const RapInstance& instance);

/// Parses a solution string: one digit group per subsystem ("0030 200 ..."),
/// separated by spaces and/or commas, group length equal to the subsystem's
/// option count. Throws ParseError naming the offending position.
SolutionVector parse_solution_string(std::string_view text, const RapInstance& instance);

/// Inverse of parse_solution_string; groups joined by single spaces.
/// Counts above 9 are not representable and raise CodecError.
std::string format_solution_string(const SolutionVector& solution);

/// Size of the component-slot search space: prod_i (m_i + 1)^max_total_i.
BigInt space_size_component_based(const RapInstance& instance);

/// Size of the count-vector search space:
///   prod_i sum_{k=min_i}^{max_i} C(k + m_i - 1, m_i - 1).
BigInt space_size_number_based(const RapInstance& instance);

/// Scientific rendering with the given number of significant digits and an
/// explicit sign on the exponent, e.g. "1.20893E+72".
std::string scientific_string(const BigInt& value, int significant_digits = 6);

/// Instance JSON codec. The document shape is
///   { "subsystems": [ { "options": [ {"r":0.9,"c":1,"w":3}, ... ],
///       "min_total": 1, "max_total": 8 }, ... ],
///     "cost_ceiling": 130, "weight_ceiling": 159, "reliability_lb": 0.954564 }
/// with "reliability_lb" optional and min/max_total defaulting to 1/8.
RapInstance instance_from_json_text(std::string_view text);
std::string instance_to_json_text(const RapInstance& instance, int indent = 2);
RapInstance load_instance_file(const std::string& path);

}  // namespace rap
