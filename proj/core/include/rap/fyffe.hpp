#pragma once

#include <span>
#include <string>
#include <vector>

#include "rap/model.hpp"
#include "rap/solver.hpp"

namespace rap {

/// Expected optimum of one benchmark variant. Variant id runs 1..33 with
/// weight_ceiling = 159 + (id - 1) and cost_ceiling = 130. r_lb is the
/// published swarm-search reliability used as the solver's lower bound.
struct FyffeVariant {
  int id = 0;
  int weight_ceiling = 0;
  int cost_ceiling = 0;
  double r_lb = 0.0;
  double expected_reliability = 0.0;
  int expected_weight = 0;
  int expected_cost = 0;
  std::string expected_solution;
};

/// Absolute reliability tolerance for regression comparisons.
inline constexpr double kRegressionTolerance = 1e-11;

/// The 14-subsystem benchmark instance with variant 1's ceilings and bound.
/// Data is embedded from fyffe/instance.json at build time.
const RapInstance& fyffe_base_instance();

/// All 33 variants with their expected optima (from fyffe/expected.json).
const std::vector<FyffeVariant>& fyffe_variants();

/// The instance for one variant: benchmark data plus that variant's ceilings
/// and reliability bound. Throws ArgumentError for ids outside 1..33.
RapInstance fyffe_instance(int id);

struct RegressionRow {
  int id = 0;
  bool passed = false;
  SolveOutcome outcome = SolveOutcome::kInfeasible;
  Aggregates got;
  std::string solution;
  double seconds = 0.0;
  std::string error;  // nonempty when the solve itself failed
};

struct RegressionReport {
  std::vector<RegressionRow> rows;
  bool all_passed = true;
};

/// Solves the selected variants and compares against the expected optima:
/// reliability within kRegressionTolerance, weight and cost exact. A variant
/// passes even when its solution string differs from the recorded one,
/// provided the aggregates match. Solver resource errors are captured per
/// row rather than aborting the run. jobs <= 0 uses one worker per logical
/// core; rows always come back in id order.
RegressionReport run_regression(std::span<const int> ids, const SolverOptions& options = {},
                                int jobs = 0);

}  // namespace rap
