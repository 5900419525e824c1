#include "rap/enumeration.hpp"

#include <algorithm>
#include <set>

namespace rap {

BatGenerator::BatGenerator(Kind kind, int mu, int u) : kind_(kind), mu_(mu), u_(u) {
  current_.assign(static_cast<std::size_t>(mu), 0);
}

BatGenerator BatGenerator::forward(int mu) {
  if (mu < 1) {
    throw ArgumentError("forward enumeration needs mu >= 1");
  }
  return BatGenerator(Kind::kForward, mu, 2);
}

BatGenerator BatGenerator::sum_bounded(int mu, int u) {
  if (mu < 1) {
    throw ArgumentError("sum-bounded enumeration needs mu >= 1");
  }
  if (u <= 1) {
    throw ArgumentError("sum-bounded enumeration needs u > 1");
  }
  return BatGenerator(Kind::kSumBounded, mu, u);
}

const CountVector* BatGenerator::next() {
  if (done_) {
    return nullptr;
  }
  if (!started_) {
    started_ = true;
    return &current_;  // the zero vector
  }
  if (kind_ == Kind::kForward) {
    // binary increment: zero out trailing ones, flip the first zero
    int i = 0;
    while (i < mu_ && current_[static_cast<std::size_t>(i)] == 1) {
      current_[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == mu_) {
      done_ = true;
      return nullptr;
    }
    current_[static_cast<std::size_t>(i)] = 1;
    return &current_;
  }
  // sum-bounded: bump coordinate 1 while the sum allows, otherwise carry
  int i = 0;
  while (true) {
    if (sum_ < u_ - 1) {
      ++current_[static_cast<std::size_t>(i)];
      ++sum_;
      return &current_;
    }
    if (i == mu_ - 1) {
      done_ = true;
      return nullptr;
    }
    sum_ -= current_[static_cast<std::size_t>(i)];
    current_[static_cast<std::size_t>(i)] = 0;
    ++i;
  }
}

EnumerationOrder forward_bat(int mu) {
  BatGenerator gen = BatGenerator::forward(mu);
  EnumerationOrder order{mu, 2, {}};
  order.vectors.reserve(std::size_t{1} << std::min(mu, 24));
  while (const CountVector* v = gen.next()) {
    order.vectors.push_back(*v);
  }
  return order;
}

EnumerationOrder upper_bound_bat(int mu, int u) {
  BatGenerator gen = BatGenerator::sum_bounded(mu, u);
  EnumerationOrder order{mu, u, {}};
  while (const CountVector* v = gen.next()) {
    order.vectors.push_back(*v);
  }
  return order;
}

EnumerationOrder prefix_restrict(const EnumerationOrder& order, int j) {
  if (j < 1 || j > order.mu) {
    throw ArgumentError("prefix width out of range");
  }
  EnumerationOrder out{j, order.cap, {}};
  std::set<CountVector> seen;
  for (const CountVector& v : order.vectors) {
    CountVector prefix(v.begin(), v.begin() + j);
    if (seen.insert(prefix).second) {
      out.vectors.push_back(std::move(prefix));
    }
  }
  return out;
}

SubsystemTable build_subsystem_table(const SubsystemSpec& spec, int subsystem_index) {
  SubsystemTable table;
  table.subsystem_index = subsystem_index;
  BatGenerator gen =
      BatGenerator::sum_bounded(static_cast<int>(spec.options.size()), spec.max_total + 1);
  while (const CountVector* v = gen.next()) {
    int total = 0;
    for (int x : *v) {
      total += x;
    }
    if (total < spec.min_total) {
      continue;
    }
    table.entries.push_back(ScoredConfig{*v, subsystem_aggregates(*v, spec)});
  }
  return table;
}

std::vector<SubsystemTable> build_subsystem_tables(const RapInstance& instance) {
  std::vector<SubsystemTable> tables;
  tables.reserve(instance.subsystems.size());
  for (std::size_t i = 0; i < instance.subsystems.size(); ++i) {
    tables.push_back(build_subsystem_table(instance.subsystems[i], static_cast<int>(i)));
  }
  return tables;
}

}  // namespace rap
