#include "rap/fyffe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "rap/fyffe_data.inc"

namespace rap {

const RapInstance& fyffe_base_instance() {
  static const RapInstance instance = instance_from_json_text(detail::kFyffeInstanceJson);
  return instance;
}

const std::vector<FyffeVariant>& fyffe_variants() {
  static const std::vector<FyffeVariant> variants = [] {
    const nlohmann::json doc = nlohmann::json::parse(detail::kFyffeExpectedJson);
    std::vector<FyffeVariant> out;
    for (const nlohmann::json& row : doc) {
      FyffeVariant v;
      v.id = row.at("id").get<int>();
      v.weight_ceiling = row.at("weight_ceiling").get<int>();
      v.cost_ceiling = row.at("cost_ceiling").get<int>();
      v.r_lb = row.at("r_lb").get<double>();
      v.expected_reliability = row.at("reliability").get<double>();
      v.expected_weight = row.at("weight").get<int>();
      v.expected_cost = row.at("cost").get<int>();
      v.expected_solution = row.at("solution").get<std::string>();
      out.push_back(std::move(v));
    }
    return out;
  }();
  return variants;
}

RapInstance fyffe_instance(int id) {
  const std::vector<FyffeVariant>& variants = fyffe_variants();
  if (id < 1 || id > static_cast<int>(variants.size())) {
    throw ArgumentError("variant id " + std::to_string(id) + " outside 1.." +
                        std::to_string(variants.size()));
  }
  const FyffeVariant& v = variants[static_cast<std::size_t>(id - 1)];
  RapInstance instance = fyffe_base_instance();
  instance.weight_ceiling = v.weight_ceiling;
  instance.cost_ceiling = v.cost_ceiling;
  instance.reliability_lb = v.r_lb;
  return instance;
}

RegressionReport run_regression(std::span<const int> ids, const SolverOptions& options,
                                int jobs) {
  const std::vector<FyffeVariant>& variants = fyffe_variants();
  for (int id : ids) {
    if (id < 1 || id > static_cast<int>(variants.size())) {
      throw ArgumentError("variant id " + std::to_string(id) + " outside 1.." +
                          std::to_string(variants.size()));
    }
  }

  RegressionReport report;
  report.rows.resize(ids.size());

  auto solve_one = [&](std::size_t slot) {
    const int id = ids[slot];
    const FyffeVariant& expected = variants[static_cast<std::size_t>(id - 1)];
    RegressionRow& row = report.rows[slot];
    row.id = id;
    try {
      const SolveReport solved = solve(fyffe_instance(id), options);
      row.outcome = solved.outcome;
      row.seconds = solved.wall_time_seconds;
      if (solved.outcome == SolveOutcome::kOptimal) {
        row.got = solved.optimal_aggregates;
        row.solution = reconstruct(solved);
        row.passed =
            std::abs(row.got.reliability - expected.expected_reliability) <=
                kRegressionTolerance &&
            row.got.weight == expected.expected_weight &&
            row.got.cost == expected.expected_cost;
      }
    } catch (const Error& e) {
      row.error = e.what();
    }
  };

  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min<int>(workers, static_cast<int>(ids.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      solve_one(i);
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t slot = cursor.fetch_add(1);
          if (slot >= report.rows.size()) {
            return;
          }
          solve_one(slot);
        }
      });
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }

  for (const RegressionRow& row : report.rows) {
    if (!row.passed) {
      report.all_passed = false;
    }
  }
  return report;
}

}  // namespace rap
