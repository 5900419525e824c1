#pragma once

#include <vector>

#include "rap/model.hpp"

namespace rap {

/// A materialized enumeration: all vectors in emission order. cap is the
/// per-coordinate state count (2 for the binary enumerator); the sum-bounded
/// enumerator additionally keeps every coordinate sum at most cap - 1.
struct EnumerationOrder {
  int mu = 0;
  int cap = 0;
  std::vector<CountVector> vectors;
};

/// Resumable carry-style vector generator. next() returns each vector in
/// emission order (the zero vector first) and nullptr when exhausted. The
/// returned pointer stays valid until the following call.
class BatGenerator {
 public:
  /// All 2^mu binary vectors; coordinate 1 toggles fastest.
  static BatGenerator forward(int mu);

  /// All mu-tuples of nonnegative integers with coordinate sum < u,
  /// coordinate 1 saturating first. C(mu + u - 1, mu) vectors in total.
  static BatGenerator sum_bounded(int mu, int u);

  const CountVector* next();

 private:
  enum class Kind { kForward, kSumBounded };
  BatGenerator(Kind kind, int mu, int u);

  Kind kind_;
  int mu_;
  int u_;
  int sum_ = 0;
  bool started_ = false;
  bool done_ = false;
  CountVector current_;
};

/// Materialized binary enumeration (cap = 2). Throws ArgumentError for mu < 1.
EnumerationOrder forward_bat(int mu);

/// Materialized sum-bounded enumeration (cap = u). Throws ArgumentError for
/// mu < 1 or u <= 1.
EnumerationOrder upper_bound_bat(int mu, int u);

/// Distinct j-coordinate prefixes of an enumeration, in first-occurrence
/// order. For these carry-style orders the result equals the width-j
/// enumeration with the same cap.
EnumerationOrder prefix_restrict(const EnumerationOrder& order, int j);

/// One subsystem configuration with its cached aggregates.
struct ScoredConfig {
  CountVector config;
  Aggregates aggregates;
};

/// All admissible configurations of one subsystem, in emission order.
struct SubsystemTable {
  int subsystem_index = 0;  // 0-based
  std::vector<ScoredConfig> entries;
};

/// Enumerates sum_bounded(m_i, max_total + 1), drops vectors whose coordinate
/// sum is below min_total (the zero vector among them), and scores the rest.
SubsystemTable build_subsystem_table(const SubsystemSpec& spec, int subsystem_index = 0);

/// Tables for every subsystem of an instance, in subsystem order.
std::vector<SubsystemTable> build_subsystem_tables(const RapInstance& instance);

}  // namespace rap
