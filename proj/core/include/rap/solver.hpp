#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rap/enumeration.hpp"
#include "rap/model.hpp"
#include "rap/pruning.hpp"

namespace rap {

/// A prefix solution covering subsystems 1..stage.
struct PartialSolution {
  std::vector<CountVector> configs;
  Aggregates aggregates;  // fold of the subsystem aggregates
  int stage = 0;          // equals configs.size(); 0 is the empty prefix
};

/// Extends a prefix by one subsystem configuration: weight and cost add,
/// reliability multiplies. subsystem_stage is the 1-based stage the entry
/// belongs to; it must equal partial.stage + 1 or StructuralError is thrown.
PartialSolution concat(const PartialSolution& partial, const ScoredConfig& entry,
                       int subsystem_stage);

struct SolverOptions {
  bool use_rlb = true;            // honor the instance's reliability lower bound
  bool use_dominance = true;      // Pareto-filter tables and every stage set
  bool use_dynamic_bounds = true; // suffix-minima weight/cost pruning
  bool collect_stats = false;     // record per-stage set sizes
  // Cap on any one stage's candidate count; exceeding it raises
  // ResourceLimitError instead of exhausting memory.
  std::uint64_t intermediate_cap = 50'000'000;
};

enum class SolveOutcome {
  kOptimal,
  kInfeasible,             // no solution satisfies the ceilings
  kBelowReliabilityBound,  // reliability_lb was active and nothing reached it
};

struct StageStats {
  int stage = 0;                    // 1-based
  std::uint64_t generated = 0;      // extensions formed
  std::uint64_t after_bounds = 0;   // surviving the admission test
  std::uint64_t after_dominance = 0;
};

struct SolveReport {
  SolveOutcome outcome = SolveOutcome::kInfeasible;
  std::optional<SolutionVector> optimum;
  Aggregates optimal_aggregates;       // meaningful when outcome is kOptimal
  std::vector<StageStats> stage_stats; // filled when collect_stats was set
  double wall_time_seconds = 0.0;
};

/// Exact solve by staged convolution of subsystem tables.
///
/// Builds per-subsystem configuration tables, filters them by the
/// reliability lower bound and the dominance rule, then extends the
/// surviving set one subsystem at a time. Every extension is admission-
/// tested (exact ceilings always; suffix minima and the reliability bar per
/// options) and each stage's survivors are dominance-filtered again. The
/// optimum is the highest-reliability member of the final set; ties break to
/// lower cost, then lower weight, then the lexicographically smallest
/// solution. Deterministic for fixed inputs.
///
/// Throws ResourceLimitError when a stage would exceed options.intermediate_cap.
SolveReport solve(const RapInstance& instance, const SolverOptions& options = {});

/// Solution string of the report's optimum. Throws ArgumentError when the
/// report holds none.
std::string reconstruct(const SolveReport& report);

/// Stage statistics as CSV, header "stage,generated,after_bounds,after_dominance".
void write_stats_csv(std::ostream& out, const std::vector<StageStats>& stats);

/// Report as a JSON document (schema shipped in schemas/solve_report.schema.json).
std::string report_to_json_text(const SolveReport& report, int indent = 2);

const char* to_string(SolveOutcome outcome);

}  // namespace rap
