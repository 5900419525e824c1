#include "rap/pruning.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rap {

SuffixBounds compute_suffix_bounds(std::span<const SubsystemTable> tables) {
  SuffixBounds bounds;
  bounds.stages.resize(tables.size());
  for (std::size_t k = 0; k < tables.size(); ++k) {
    if (tables[k].entries.empty()) {
      throw InfeasibleInstanceError("subsystem " + std::to_string(k + 1) +
                                    " admits no configuration");
    }
    int min_w = tables[k].entries.front().aggregates.weight;
    int min_c = tables[k].entries.front().aggregates.cost;
    for (const ScoredConfig& e : tables[k].entries) {
      min_w = std::min(min_w, e.aggregates.weight);
      min_c = std::min(min_c, e.aggregates.cost);
    }
    bounds.stages[k].min_weight = min_w;
    bounds.stages[k].min_cost = min_c;
  }
  for (std::size_t k = tables.size(); k-- > 0;) {
    if (k + 1 < tables.size()) {
      bounds.stages[k].suffix_weight =
          bounds.stages[k + 1].suffix_weight + bounds.stages[k + 1].min_weight;
      bounds.stages[k].suffix_cost =
          bounds.stages[k + 1].suffix_cost + bounds.stages[k + 1].min_cost;
    }
  }
  return bounds;
}

SubsystemTable filter_by_rlb(const SubsystemTable& table, double r_lb) {
  if (!(r_lb >= 0.0 && r_lb < 1.0)) {
    throw ArgumentError("r_lb must lie in [0, 1)");
  }
  SubsystemTable out;
  out.subsystem_index = table.subsystem_index;
  out.entries.reserve(table.entries.size());
  for (const ScoredConfig& e : table.entries) {
    if (e.aggregates.reliability >= r_lb) {
      out.entries.push_back(e);
    }
  }
  return out;
}

std::vector<std::uint8_t> dominance_keep_mask(std::span<const Scored> items) {
  const std::size_t n = items.size();
  std::vector<std::uint8_t> keep(n, 0);
  if (n == 0) {
    return keep;
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Scored& x = items[a];
    const Scored& y = items[b];
    if (x.weight != y.weight) return x.weight < y.weight;
    if (x.cost != y.cost) return x.cost < y.cost;
    if (x.reliability != y.reliability) return x.reliability > y.reliability;
    return a < b;  // full ties: earliest input index first
  });

  // Staircase of kept (cost, reliability) maxima; both strictly increasing.
  // Items arrive weight-ascending, so a staircase hit means weak dominance.
  std::map<int, double> stair;
  for (std::uint32_t idx : order) {
    const Scored& item = items[idx];
    auto it = stair.upper_bound(item.cost);
    if (it != stair.begin()) {
      if (std::prev(it)->second >= item.reliability) {
        continue;  // dominated by an earlier kept item
      }
    }
    keep[idx] = 1;
    // insert and drop staircase points this item covers
    auto at = stair.lower_bound(item.cost);
    while (at != stair.end() && at->second <= item.reliability) {
      at = stair.erase(at);
    }
    stair.emplace(item.cost, item.reliability);
  }
  return keep;
}

std::vector<Scored> dominance_filter(std::span<const Scored> items) {
  const std::vector<std::uint8_t> keep = dominance_keep_mask(items);
  std::vector<Scored> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (keep[i]) {
      out.push_back(items[i]);
    }
  }
  return out;
}

SubsystemTable dominance_filter(const SubsystemTable& table) {
  std::vector<Scored> view;
  view.reserve(table.entries.size());
  for (const ScoredConfig& e : table.entries) {
    view.push_back({e.aggregates.weight, e.aggregates.cost, e.aggregates.reliability});
  }
  const std::vector<std::uint8_t> keep = dominance_keep_mask(view);
  SubsystemTable out;
  out.subsystem_index = table.subsystem_index;
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    if (keep[i]) {
      out.entries.push_back(table.entries[i]);
    }
  }
  return out;
}

bool admit_partial(const Aggregates& aggregates, int stage_k, const SuffixBounds& bounds,
                   const RapInstance& instance) {
  const StageBound& b = bounds.at_stage(stage_k);
  if (aggregates.weight + b.suffix_weight > instance.weight_ceiling) {
    return false;
  }
  if (aggregates.cost + b.suffix_cost > instance.cost_ceiling) {
    return false;
  }
  if (instance.reliability_lb && aggregates.reliability < *instance.reliability_lb) {
    return false;
  }
  return true;
}

}  // namespace rap
