#include "rap/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

namespace rap {

PartialSolution concat(const PartialSolution& partial, const ScoredConfig& entry,
                       int subsystem_stage) {
  if (static_cast<int>(partial.configs.size()) != partial.stage) {
    throw StructuralError("partial solution stage disagrees with its config count");
  }
  if (subsystem_stage != partial.stage + 1) {
    throw StructuralError("entry belongs to stage " + std::to_string(subsystem_stage) +
                          ", expected " + std::to_string(partial.stage + 1));
  }
  PartialSolution out = partial;
  out.configs.push_back(entry.config);
  out.aggregates.reliability *= entry.aggregates.reliability;
  out.aggregates.weight += entry.aggregates.weight;
  out.aggregates.cost += entry.aggregates.cost;
  out.stage = partial.stage + 1;
  return out;
}

namespace {

// One stage's surviving prefixes, flat configs in a shared arena.
struct StageSet {
  std::vector<int> weight;
  std::vector<int> cost;
  std::vector<double> reliability;
  std::vector<std::uint8_t> flat;
  std::size_t stride = 0;

  std::size_t size() const { return weight.size(); }
};

struct Candidate {
  int weight;
  int cost;
  double reliability;
  std::uint32_t parent;
  std::uint32_t entry;
};

std::vector<std::uint8_t> candidate_keep_mask(const std::vector<Candidate>& cands) {
  std::vector<Scored> view;
  view.reserve(cands.size());
  for (const Candidate& c : cands) {
    view.push_back({c.weight, c.cost, c.reliability});
  }
  return dominance_keep_mask(view);
}

}  // namespace

SolveReport solve(const RapInstance& instance, const SolverOptions& options) {
  validate_instance(instance);
  const auto t_start = std::chrono::steady_clock::now();
  const int n = instance.subsystem_count();
  const bool rlb_on = options.use_rlb && instance.reliability_lb.has_value();
  const double r_lb = rlb_on ? *instance.reliability_lb : -1.0;

  SolveReport report;
  auto finish = [&](SolveOutcome outcome) {
    report.outcome = outcome;
    if (options.collect_stats) {
      while (static_cast<int>(report.stage_stats.size()) < n) {
        report.stage_stats.push_back({static_cast<int>(report.stage_stats.size()) + 1, 0, 0, 0});
      }
    } else {
      report.stage_stats.clear();
    }
    report.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return report;
  };

  std::vector<SubsystemTable> tables = build_subsystem_tables(instance);
  if (rlb_on) {
    for (SubsystemTable& t : tables) {
      t = filter_by_rlb(t, r_lb);
      if (t.entries.empty()) {
        return finish(SolveOutcome::kBelowReliabilityBound);
      }
    }
  }
  if (options.use_dominance) {
    for (SubsystemTable& t : tables) {
      t = dominance_filter(t);
    }
  }

  // Suffix minima over the filtered tables; zeroed when dynamic bounds are
  // off so the admission test degrades to exact ceiling feasibility.
  SuffixBounds bounds = compute_suffix_bounds(tables);
  if (!options.use_dynamic_bounds) {
    for (StageBound& b : bounds.stages) {
      b.suffix_weight = 0;
      b.suffix_cost = 0;
    }
  }

  // Tables as parallel arrays for the extension loop.
  struct FlatTable {
    std::vector<int> weight, cost;
    std::vector<double> reliability;
    std::vector<CountVector> config;
    int width = 0;
  };
  std::vector<FlatTable> flat_tables(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    FlatTable& ft = flat_tables[static_cast<std::size_t>(i)];
    ft.width = static_cast<int>(instance.subsystems[static_cast<std::size_t>(i)].options.size());
    for (const ScoredConfig& e : tables[static_cast<std::size_t>(i)].entries) {
      ft.weight.push_back(e.aggregates.weight);
      ft.cost.push_back(e.aggregates.cost);
      ft.reliability.push_back(e.aggregates.reliability);
      ft.config.push_back(e.config);
    }
  }

  // The admission test honors the reliability bar only when it is enabled.
  RapInstance effective = instance;
  if (!rlb_on) {
    effective.reliability_lb.reset();
  }

  // Stage 1: the first table's admitted entries.
  StageSet current;
  {
    const FlatTable& ft = flat_tables[0];
    const std::uint64_t generated = ft.weight.size();
    std::vector<Candidate> cands;
    for (std::uint32_t j = 0; j < ft.weight.size(); ++j) {
      const Aggregates a{ft.reliability[j], ft.weight[j], ft.cost[j]};
      if (!admit_partial(a, 1, bounds, effective)) continue;
      cands.push_back({a.weight, a.cost, a.reliability, 0, j});
    }
    const std::uint64_t after_bounds = cands.size();
    if (options.use_dominance) {
      const std::vector<std::uint8_t> keep = candidate_keep_mask(cands);
      std::size_t out = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (keep[i]) cands[out++] = cands[i];
      }
      cands.resize(out);
    }
    current.stride = static_cast<std::size_t>(ft.width);
    current.flat.reserve(cands.size() * current.stride);
    for (const Candidate& c : cands) {
      current.weight.push_back(c.weight);
      current.cost.push_back(c.cost);
      current.reliability.push_back(c.reliability);
      for (int x : ft.config[c.entry]) {
        current.flat.push_back(static_cast<std::uint8_t>(x));
      }
    }
    if (options.collect_stats) {
      report.stage_stats.push_back({1, generated, after_bounds, current.size()});
    }
  }

  // Stages 2..n: extend, admission-test, dominance-filter.
  std::vector<Candidate> cands;
  for (int stage = 2; stage <= n; ++stage) {
    const FlatTable& ft = flat_tables[static_cast<std::size_t>(stage - 1)];
    const std::uint64_t generated =
        static_cast<std::uint64_t>(current.size()) * ft.weight.size();
    if (generated > options.intermediate_cap) {
      throw ResourceLimitError(
          "stage " + std::to_string(stage) + " would generate " + std::to_string(generated) +
          " candidates (cap " + std::to_string(options.intermediate_cap) +
          "); enable the dominance rule and dynamic bounds or raise the cap");
    }
    const StageBound& b = bounds.at_stage(stage);
    const int weight_limit = instance.weight_ceiling - b.suffix_weight;
    const int cost_limit = instance.cost_ceiling - b.suffix_cost;
    cands.clear();
    const std::size_t entry_count = ft.weight.size();
    for (std::uint32_t p = 0; p < current.size(); ++p) {
      const int wp = current.weight[p];
      const int cp = current.cost[p];
      const double rp = current.reliability[p];
      for (std::uint32_t j = 0; j < entry_count; ++j) {
        const int w2 = wp + ft.weight[j];
        if (w2 > weight_limit) continue;
        const int c2 = cp + ft.cost[j];
        if (c2 > cost_limit) continue;
        const double r2 = rp * ft.reliability[j];
        if (rlb_on && r2 < r_lb) continue;
        cands.push_back({w2, c2, r2, p, j});
      }
    }
    const std::uint64_t after_bounds = cands.size();
    if (options.use_dominance) {
      const std::vector<std::uint8_t> keep = candidate_keep_mask(cands);
      std::size_t out = 0;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (keep[i]) cands[out++] = cands[i];
      }
      cands.resize(out);
    }

    StageSet next;
    next.stride = current.stride + static_cast<std::size_t>(ft.width);
    next.weight.reserve(cands.size());
    next.cost.reserve(cands.size());
    next.reliability.reserve(cands.size());
    next.flat.reserve(cands.size() * next.stride);
    for (const Candidate& c : cands) {
      next.weight.push_back(c.weight);
      next.cost.push_back(c.cost);
      next.reliability.push_back(c.reliability);
      const std::uint8_t* parent_flat = current.flat.data() + c.parent * current.stride;
      next.flat.insert(next.flat.end(), parent_flat, parent_flat + current.stride);
      for (int x : ft.config[c.entry]) {
        next.flat.push_back(static_cast<std::uint8_t>(x));
      }
    }
    if (options.collect_stats) {
      report.stage_stats.push_back({stage, generated, after_bounds, next.size()});
    }
    current = std::move(next);
  }

  if (current.size() == 0) {
    return finish(rlb_on ? SolveOutcome::kBelowReliabilityBound : SolveOutcome::kInfeasible);
  }

  // Best by reliability, then cost, then weight, then smallest solution string.
  std::size_t best = 0;
  auto flat_of = [&](std::size_t i) {
    return current.flat.data() + i * current.stride;
  };
  for (std::size_t i = 1; i < current.size(); ++i) {
    if (current.reliability[i] != current.reliability[best]) {
      if (current.reliability[i] > current.reliability[best]) best = i;
      continue;
    }
    if (current.cost[i] != current.cost[best]) {
      if (current.cost[i] < current.cost[best]) best = i;
      continue;
    }
    if (current.weight[i] != current.weight[best]) {
      if (current.weight[i] < current.weight[best]) best = i;
      continue;
    }
    if (std::lexicographical_compare(flat_of(i), flat_of(i) + current.stride, flat_of(best),
                                     flat_of(best) + current.stride)) {
      best = i;
    }
  }

  std::vector<CountVector> configs(static_cast<std::size_t>(n));
  const std::uint8_t* cursor = flat_of(best);
  for (int i = 0; i < n; ++i) {
    const int width = flat_tables[static_cast<std::size_t>(i)].width;
    configs[static_cast<std::size_t>(i)].assign(cursor, cursor + width);
    cursor += width;
  }
  SolutionVector solution = make_solution(std::move(configs), instance);
  report.optimum = solution;
  report.optimal_aggregates = solution.aggregates;
  return finish(SolveOutcome::kOptimal);
}

std::string reconstruct(const SolveReport& report) {
  if (!report.optimum) {
    throw ArgumentError("report holds no optimum to reconstruct");
  }
  return format_solution_string(*report.optimum);
}

void write_stats_csv(std::ostream& out, const std::vector<StageStats>& stats) {
  out << "stage,generated,after_bounds,after_dominance\n";
  for (const StageStats& s : stats) {
    out << s.stage << ',' << s.generated << ',' << s.after_bounds << ',' << s.after_dominance
        << '\n';
  }
}

std::string report_to_json_text(const SolveReport& report, int indent) {
  nlohmann::json doc;
  doc["outcome"] = to_string(report.outcome);
  doc["wall_time_seconds"] = report.wall_time_seconds;
  if (report.outcome == SolveOutcome::kOptimal && report.optimum) {
    doc["reliability"] = report.optimal_aggregates.reliability;
    doc["weight"] = report.optimal_aggregates.weight;
    doc["cost"] = report.optimal_aggregates.cost;
    doc["solution"] = format_solution_string(*report.optimum);
  } else {
    doc["reliability"] = nullptr;
    doc["weight"] = nullptr;
    doc["cost"] = nullptr;
    doc["solution"] = nullptr;
  }
  doc["stage_stats"] = nlohmann::json::array();
  for (const StageStats& s : report.stage_stats) {
    doc["stage_stats"].push_back({{"stage", s.stage},
                                  {"generated", s.generated},
                                  {"after_bounds", s.after_bounds},
                                  {"after_dominance", s.after_dominance}});
  }
  return doc.dump(indent);
}

const char* to_string(SolveOutcome outcome) {
  switch (outcome) {
    case SolveOutcome::kOptimal:
      return "optimal";
    case SolveOutcome::kInfeasible:
      return "infeasible";
    case SolveOutcome::kBelowReliabilityBound:
      return "below_reliability_bound";
  }
  return "unknown";
}

}  // namespace rap
