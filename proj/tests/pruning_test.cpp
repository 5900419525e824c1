#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "rap/enumeration.hpp"
#include "rap/fyffe.hpp"
#include "rap/oracle.hpp"
#include "rap/pruning.hpp"

#include "support.hpp"

using namespace rap;

namespace {

// all index tuples over tables[first..last)
void for_each_combo(const std::vector<SubsystemTable>& tables, std::size_t first,
                    std::size_t last, const std::function<void(const Aggregates&)>& fn) {
  Aggregates acc;
  std::function<void(std::size_t, const Aggregates&)> rec = [&](std::size_t i,
                                                                const Aggregates& a) {
    if (i == last) {
      fn(a);
      return;
    }
    for (const ScoredConfig& e : tables[i].entries) {
      Aggregates next;
      next.reliability = a.reliability * e.aggregates.reliability;
      next.weight = a.weight + e.aggregates.weight;
      next.cost = a.cost + e.aggregates.cost;
      rec(i + 1, next);
    }
  };
  rec(first, acc);
}

}  // namespace

TEST_CASE("suffix bounds reproduce the benchmark minima") {
  const std::vector<SubsystemTable> tables = build_subsystem_tables(fyffe_base_instance());
  const SuffixBounds bounds = compute_suffix_bounds(tables);
  REQUIRE(bounds.stages.size() == 14);

  CHECK(bounds.at_stage(1).min_weight == 2);
  CHECK(bounds.at_stage(1).min_cost == 1);
  CHECK(bounds.at_stage(1).suffix_weight == 66);
  CHECK(bounds.at_stage(1).suffix_cost == 33);

  CHECK(bounds.at_stage(13).min_weight == 5);
  CHECK(bounds.at_stage(13).min_cost == 2);
  CHECK(bounds.at_stage(13).suffix_weight == 6);
  CHECK(bounds.at_stage(13).suffix_cost == 4);

  CHECK(bounds.at_stage(14).suffix_weight == 0);
  CHECK(bounds.at_stage(14).suffix_cost == 0);

  // recurrence between adjacent stages
  for (int k = 1; k < 14; ++k) {
    CHECK(bounds.at_stage(k).suffix_weight ==
          bounds.at_stage(k + 1).suffix_weight + bounds.at_stage(k + 1).min_weight);
    CHECK(bounds.at_stage(k).suffix_cost ==
          bounds.at_stage(k + 1).suffix_cost + bounds.at_stage(k + 1).min_cost);
  }
}

TEST_CASE("suffix bounds on a single subsystem have empty suffixes") {
  RapInstance one;
  one.subsystems.push_back(fyffe_base_instance().subsystems[0]);
  one.cost_ceiling = one.weight_ceiling = 100;
  const SuffixBounds bounds = compute_suffix_bounds(build_subsystem_tables(one));
  CHECK(bounds.at_stage(1).suffix_weight == 0);
  CHECK(bounds.at_stage(1).suffix_cost == 0);
}

TEST_CASE("suffix bounds reject empty tables by name") {
  std::vector<SubsystemTable> tables = build_subsystem_tables(fyffe_base_instance());
  tables[4].entries.clear();
  try {
    compute_suffix_bounds(tables);
    FAIL("expected InfeasibleInstanceError");
  } catch (const InfeasibleInstanceError& e) {
    CHECK(std::string(e.what()).find("subsystem 5") != std::string::npos);
  }
}

TEST_CASE("reliability bound filtering is strict and order preserving") {
  const SubsystemTable table = build_subsystem_table(fyffe_base_instance().subsystems[0], 0);

  const SubsystemTable filtered = filter_by_rlb(table, 0.954565);
  CHECK(filtered.entries.size() == 490);
  for (const ScoredConfig& e : filtered.entries) {
    CHECK(e.aggregates.reliability >= 0.954565);
    CHECK(e.config != CountVector{1, 0, 0, 0});
  }

  // survivors keep their relative emission order
  std::size_t cursor = 0;
  for (const ScoredConfig& e : table.entries) {
    if (cursor < filtered.entries.size() && filtered.entries[cursor].config == e.config) {
      ++cursor;
    }
  }
  CHECK(cursor == filtered.entries.size());

  CHECK(filter_by_rlb(table, 0.0).entries.size() == table.entries.size());

  // an entry exactly at the bound survives
  const double at_bound = table.entries[0].aggregates.reliability;
  const SubsystemTable exact = filter_by_rlb(table, at_bound);
  bool found = false;
  for (const ScoredConfig& e : exact.entries) {
    if (e.config == table.entries[0].config) found = true;
  }
  CHECK(found);

  CHECK_THROWS_AS(filter_by_rlb(table, 1.0), ArgumentError);
}

TEST_CASE("dominance removes covered entries from the first subsystem table") {
  const SubsystemTable table = build_subsystem_table(fyffe_base_instance().subsystems[0], 0);
  const SubsystemTable front = dominance_filter(table);
  CHECK(front.entries.size() < table.entries.size());
  bool has_3000 = false;
  bool has_0101 = false;
  for (const ScoredConfig& e : front.entries) {
    if (e.config == CountVector{3, 0, 0, 0}) has_3000 = true;
    if (e.config == CountVector{0, 1, 0, 1}) has_0101 = true;
  }
  CHECK(has_3000);       // W=9 C=3 R=0.999
  CHECK_FALSE(has_0101); // W=9 C=3 R=0.9965, covered by the former
}

TEST_CASE("dominance on plain scored items") {
  SUBCASE("weakly better in all three removes the other") {
    const std::vector<Scored> items = {{2, 2, 0.95}, {3, 2, 0.94}};
    const std::vector<Scored> kept = dominance_filter(items);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].weight == 2);
  }

  SUBCASE("incomparable items both survive") {
    const std::vector<Scored> items = {{6, 2, 0.99}, {7, 2, 0.993}};
    CHECK(dominance_filter(items).size() == 2);
  }

  SUBCASE("exact duplicates keep only the earliest") {
    const std::vector<Scored> items = {{5, 4, 0.9}, {5, 4, 0.9}, {5, 4, 0.9}};
    const std::vector<std::uint8_t> keep = dominance_keep_mask(items);
    CHECK(keep == std::vector<std::uint8_t>{1, 0, 0});
  }

  SUBCASE("output preserves input order") {
    const std::vector<Scored> items = {{7, 1, 0.5}, {1, 7, 0.6}, {4, 4, 0.7}};
    const std::vector<Scored> kept = dominance_filter(items);
    REQUIRE(kept.size() == 3);
    CHECK(kept[0].weight == 7);
    CHECK(kept[1].weight == 1);
    CHECK(kept[2].weight == 4);
  }
}

TEST_CASE("dominance agrees with the quadratic reference and is idempotent") {
  std::mt19937 rng(987654);
  for (const std::size_t size : {1u, 2u, 50u, 400u, 2000u}) {
    const std::vector<Scored> items = test::random_scored(rng, size);
    const std::vector<std::uint8_t> fast = dominance_keep_mask(items);
    const std::vector<std::uint8_t> slow = test::reference_dominance_keep(items);
    CHECK(fast == slow);

    const std::vector<Scored> once = dominance_filter(items);
    const std::vector<Scored> twice = dominance_filter(once);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(once[i].weight == twice[i].weight);
      CHECK(once[i].cost == twice[i].cost);
      CHECK(once[i].reliability == twice[i].reliability);
    }
  }
}

TEST_CASE("admission test") {
  const RapInstance instance = fyffe_instance(1);  // W_UB 159, C_UB 130
  const std::vector<SubsystemTable> tables = build_subsystem_tables(instance);
  const SuffixBounds bounds = compute_suffix_bounds(tables);

  SUBCASE("prefix too heavy for any completion") {
    RapInstance no_bar = instance;
    no_bar.reliability_lb.reset();
    const Aggregates heavy{0.999, 100, 50};
    CHECK_FALSE(admit_partial(heavy, 1, bounds, no_bar));  // 100 + 66 > 159
    const Aggregates light{0.999, 93, 50};
    CHECK(admit_partial(light, 1, bounds, no_bar));  // 93 + 66 = 159
  }

  SUBCASE("final stage reduces to exact feasibility") {
    RapInstance no_bar = instance;
    no_bar.reliability_lb.reset();
    CHECK(admit_partial({0.5, 159, 130}, 14, bounds, no_bar));
    CHECK_FALSE(admit_partial({0.5, 160, 130}, 14, bounds, no_bar));
  }

  SUBCASE("reliability bar is strict") {
    RapInstance bar = instance;
    bar.reliability_lb = 0.954565;
    CHECK_FALSE(admit_partial({0.95, 10, 10}, 14, bounds, bar));
    CHECK(admit_partial({0.954565, 10, 10}, 14, bounds, bar));
  }
}

TEST_CASE("rejected prefixes have no feasible completion") {
  std::mt19937 rng(31415);
  int rejected_seen = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const RapInstance instance = random_instance(rng());
    const std::vector<SubsystemTable> tables = build_subsystem_tables(instance);
    const SuffixBounds bounds = compute_suffix_bounds(tables);
    const std::size_t n = tables.size();
    for (std::size_t k = 1; k < n; ++k) {
      for_each_combo(tables, 0, k, [&](const Aggregates& prefix) {
        if (admit_partial(prefix, static_cast<int>(k), bounds, instance)) {
          return;
        }
        ++rejected_seen;
        for_each_combo(tables, k, n, [&](const Aggregates& suffix) {
          const int w = prefix.weight + suffix.weight;
          const int c = prefix.cost + suffix.cost;
          const double r = prefix.reliability * suffix.reliability;
          const bool feasible = w <= instance.weight_ceiling && c <= instance.cost_ceiling &&
                                (!instance.reliability_lb || r >= *instance.reliability_lb);
          CHECK_FALSE(feasible);
        });
      });
    }
  }
  CHECK(rejected_seen > 0);  // the property was actually exercised
}

TEST_CASE("entries removed by the reliability bound join no qualifying solution") {
  std::mt19937 rng(2718);
  int removed_seen = 0;
  for (int trial = 0; trial < 25; ++trial) {
    RapInstance instance = random_instance(rng());
    const SolveReport oracle = brute_force_solve(instance);
    const double r_lb = oracle.outcome == SolveOutcome::kOptimal
                            ? test::truncate6(oracle.optimal_aggregates.reliability)
                            : 0.9;
    instance.reliability_lb = r_lb;
    const std::vector<SubsystemTable> tables = build_subsystem_tables(instance);
    const std::size_t n = tables.size();
    for (std::size_t i = 0; i < n; ++i) {
      const SubsystemTable filtered = filter_by_rlb(tables[i], r_lb);
      if (filtered.entries.size() == tables[i].entries.size()) {
        continue;
      }
      for (const ScoredConfig& e : tables[i].entries) {
        if (e.aggregates.reliability >= r_lb) {
          continue;
        }
        ++removed_seen;
        // best possible system reliability through this entry
        double best = e.aggregates.reliability;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          double top = 0.0;
          for (const ScoredConfig& other : tables[j].entries) {
            top = std::max(top, other.aggregates.reliability);
          }
          best *= top;
        }
        CHECK(best < r_lb);
      }
    }
  }
  CHECK(removed_seen > 0);
}
