#pragma once

#include <cstdint>

#include "rap/model.hpp"
#include "rap/solver.hpp"

namespace rap {

/// Exhaustive reference solver. Enumerates every per-subsystem count vector
/// within the min/max totals (by plain odometer counting, independent of the
/// carry-style enumerators), keeps complete solutions within both ceilings,
/// and returns the best under the same tie rule as solve(). Applies no
/// pruning at all. Refuses instances whose count-vector space exceeds
/// 10^7 (OracleRefusalError reporting the computed size).
SolveReport brute_force_solve(const RapInstance& instance);

/// Size caps for generated instances; the defaults keep everything well
/// inside the oracle's range.
struct RandomInstanceLimits {
  int min_subsystems = 2;
  int max_subsystems = 4;
  int max_options = 3;
  int max_total = 4;
};

/// Deterministic pseudo-random instance. The generator is a 64-bit linear
/// congruential scheme documented in the README so fixtures can be
/// reproduced elsewhere: state <- state * 6364136223846793005 +
/// 1442695040888963407 (mod 2^64), drawing the top 32 bits. Reliabilities
/// are drawn from {0.50, ..., 0.99}, costs and weights from 1..9, and the
/// ceilings near a cheap reference solution so roughly two thirds of the
/// instances are feasible.
RapInstance random_instance(std::uint64_t seed, const RandomInstanceLimits& limits = {});

}  // namespace rap
