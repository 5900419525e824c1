#include "rap/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace rap {

namespace {

// All count vectors for one subsystem with min_total <= sum <= max_total,
// by odometer counting over 0..max_total per coordinate.
std::vector<CountVector> all_configs(const SubsystemSpec& spec) {
  const std::size_t m = spec.options.size();
  std::vector<CountVector> out;
  CountVector x(m, 0);
  while (true) {
    int total = 0;
    for (int v : x) total += v;
    if (total >= spec.min_total && total <= spec.max_total) {
      out.push_back(x);
    }
    std::size_t i = 0;
    while (i < m && x[i] == spec.max_total) {
      x[i] = 0;
      ++i;
    }
    if (i == m) break;
    ++x[i];
  }
  return out;
}

struct BestTracker {
  bool found = false;
  Aggregates aggregates;
  std::vector<CountVector> configs;

  void offer(const Aggregates& a, const std::vector<CountVector>& candidate) {
    if (found) {
      if (a.reliability < aggregates.reliability) return;
      if (a.reliability == aggregates.reliability) {
        if (a.cost > aggregates.cost) return;
        if (a.cost == aggregates.cost) {
          if (a.weight > aggregates.weight) return;
          if (a.weight == aggregates.weight && !(candidate < configs)) return;
        }
      }
    }
    found = true;
    aggregates = a;
    configs = candidate;
  }
};

void search(const RapInstance& instance, const std::vector<std::vector<CountVector>>& tables,
            std::size_t stage, std::vector<CountVector>& prefix, const Aggregates& acc,
            BestTracker& best) {
  if (stage == tables.size()) {
    if (acc.cost <= instance.cost_ceiling && acc.weight <= instance.weight_ceiling) {
      best.offer(acc, prefix);
    }
    return;
  }
  for (const CountVector& config : tables[stage]) {
    const Aggregates a = subsystem_aggregates(config, instance.subsystems[stage]);
    Aggregates next;
    next.reliability = acc.reliability * a.reliability;
    next.weight = acc.weight + a.weight;
    next.cost = acc.cost + a.cost;
    prefix.push_back(config);
    search(instance, tables, stage + 1, prefix, next, best);
    prefix.pop_back();
  }
}

}  // namespace

SolveReport brute_force_solve(const RapInstance& instance) {
  validate_instance(instance);
  const auto t_start = std::chrono::steady_clock::now();
  const BigInt size = space_size_number_based(instance);
  if (size > 10'000'000) {
    throw OracleRefusalError("count-vector space has " + size.str() +
                             " elements; the oracle refuses above 10000000");
  }
  std::vector<std::vector<CountVector>> tables;
  tables.reserve(instance.subsystems.size());
  for (const SubsystemSpec& spec : instance.subsystems) {
    tables.push_back(all_configs(spec));
  }
  BestTracker best;
  std::vector<CountVector> prefix;
  search(instance, tables, 0, prefix, Aggregates{}, best);

  SolveReport report;
  if (best.found) {
    report.outcome = SolveOutcome::kOptimal;
    report.optimum = make_solution(best.configs, instance);
    report.optimal_aggregates = report.optimum->aggregates;
  } else {
    report.outcome = SolveOutcome::kInfeasible;
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

namespace {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  // inclusive range
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint32_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace

RapInstance random_instance(std::uint64_t seed, const RandomInstanceLimits& limits) {
  if (limits.min_subsystems < 1 || limits.max_subsystems < limits.min_subsystems ||
      limits.max_options < 1 || limits.max_total < 1) {
    throw ArgumentError("bad random-instance limits");
  }
  Lcg rng(seed);
  RapInstance instance;
  const int n = rng.uniform(limits.min_subsystems, limits.max_subsystems);
  int ref_cost = 0;
  int ref_weight = 0;
  for (int i = 0; i < n; ++i) {
    SubsystemSpec spec;
    spec.min_total = 1;
    spec.max_total = rng.uniform(1, limits.max_total);
    const int m = rng.uniform(1, limits.max_options);
    for (int j = 0; j < m; ++j) {
      ComponentOption o;
      o.reliability = rng.uniform(50, 99) / 100.0;
      o.cost = rng.uniform(1, 9);
      o.weight = rng.uniform(1, 9);
      spec.options.push_back(o);
    }
    // cheapest single-component choice anchors the ceilings
    int best = 0;
    for (int j = 1; j < m; ++j) {
      const ComponentOption& a = spec.options[static_cast<std::size_t>(j)];
      const ComponentOption& b = spec.options[static_cast<std::size_t>(best)];
      if (a.cost + a.weight < b.cost + b.weight ||
          (a.cost + a.weight == b.cost + b.weight && a.cost < b.cost)) {
        best = j;
      }
    }
    ref_cost += spec.options[static_cast<std::size_t>(best)].cost;
    ref_weight += spec.options[static_cast<std::size_t>(best)].weight;
    instance.subsystems.push_back(std::move(spec));
  }
  instance.cost_ceiling = std::max(0, ref_cost + rng.uniform(-1, 6));
  instance.weight_ceiling = std::max(0, ref_weight + rng.uniform(-1, 6));
  validate_instance(instance);
  return instance;
}

}  // namespace rap
