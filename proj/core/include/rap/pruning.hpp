#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rap/enumeration.hpp"
#include "rap/model.hpp"

namespace rap {

/// Per-stage pruning data. min_weight/min_cost are the minima over the
/// stage's own table; suffix_weight/suffix_cost are the sums of those minima
/// over all later stages (zero at the last stage).
struct StageBound {
  int min_weight = 0;
  int min_cost = 0;
  int suffix_weight = 0;
  int suffix_cost = 0;
};

struct SuffixBounds {
  std::vector<StageBound> stages;  // index k-1 holds stage k

  const StageBound& at_stage(int k) const { return stages.at(static_cast<std::size_t>(k - 1)); }
};

/// Exact minima and suffix sums for a table list. Must be recomputed whenever
/// the tables shrink (filtering can raise the minima). Throws
/// InfeasibleInstanceError naming the subsystem when a table is empty.
SuffixBounds compute_suffix_bounds(std::span<const SubsystemTable> tables);

/// Removes exactly the entries with reliability strictly below r_lb,
/// preserving order. Entries at the bound survive, so a bound taken from a
/// feasible solution can never prune the optimum.
SubsystemTable filter_by_rlb(const SubsystemTable& table, double r_lb);

/// A (weight, cost, reliability) point for dominance filtering.
struct Scored {
  int weight = 0;
  int cost = 0;
  double reliability = 0.0;
};

/// Keep-mask of the 3-criteria Pareto filter. An item is dropped when some
/// kept item has weight <=, cost <=, and reliability >= with the triples not
/// all equal; among identical triples only the earliest survives. Sort-and-
/// staircase sweep, O(m log m); reliability comparisons are exact binary64.
std::vector<std::uint8_t> dominance_keep_mask(std::span<const Scored> items);

/// Convenience wrappers preserving input order among survivors.
std::vector<Scored> dominance_filter(std::span<const Scored> items);
SubsystemTable dominance_filter(const SubsystemTable& table);

/// Stage admission test: a prefix over subsystems 1..k is rejected when even
/// the lightest/cheapest completion would breach a ceiling, or when its
/// reliability is already below the instance's bound:
///   W + suffix_weight(k) > weight_ceiling, or
///   C + suffix_cost(k)   > cost_ceiling,  or
///   reliability_lb set and R < reliability_lb.
/// At k = n the suffix terms are zero, so this is exact feasibility plus the
/// reliability bar.
bool admit_partial(const Aggregates& aggregates, int stage_k, const SuffixBounds& bounds,
                   const RapInstance& instance);

}  // namespace rap
