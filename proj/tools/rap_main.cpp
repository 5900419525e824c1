// Command line front end: solve instances, run the benchmark regression,
// verify candidate solutions, and dump enumerations.
//
// Exit codes: 0 success/pass, 1 infeasible or regression fail,
//             2 usage/parse error, 3 resource limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rap/enumeration.hpp"
#include "rap/fyffe.hpp"
#include "rap/model.hpp"
#include "rap/oracle.hpp"
#include "rap/pruning.hpp"
#include "rap/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string format_reliability(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11f", r);
  return buf;
}

// "1,3,5-8" -> {1,3,5,6,7,8}
std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> ids;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (part.empty()) {
      throw rap::ParseError("empty id in list");
    }
    const std::size_t dash = part.find('-');
    if (dash == std::string::npos) {
      ids.push_back(std::stoi(part));
    } else {
      const int lo = std::stoi(part.substr(0, dash));
      const int hi = std::stoi(part.substr(dash + 1));
      if (hi < lo) {
        throw rap::ParseError("bad id range: " + part);
      }
      for (int i = lo; i <= hi; ++i) {
        ids.push_back(i);
      }
    }
  }
  return ids;
}

int cmd_solve(const std::string& instance_path, bool no_rlb, bool no_dominance, bool no_bounds,
              const std::string& stats_path, bool as_json) {
  rap::RapInstance instance;
  try {
    instance = rap::load_instance_file(instance_path);
  } catch (const rap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  rap::SolverOptions options;
  options.use_rlb = !no_rlb;
  options.use_dominance = !no_dominance;
  options.use_dynamic_bounds = !no_bounds;
  options.collect_stats = !stats_path.empty() || as_json;

  rap::SolveReport report;
  try {
    report = rap::solve(instance, options);
  } catch (const rap::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  }

  if (!stats_path.empty()) {
    std::ofstream out(stats_path);
    if (!out) {
      std::cerr << "error: cannot write " << stats_path << "\n";
      return kExitUsage;
    }
    rap::write_stats_csv(out, report.stage_stats);
  }

  if (as_json) {
    std::cout << rap::report_to_json_text(report) << "\n";
    return report.outcome == rap::SolveOutcome::kOptimal ? kExitOk : kExitInfeasible;
  }

  switch (report.outcome) {
    case rap::SolveOutcome::kOptimal:
      std::cout << "R=" << format_reliability(report.optimal_aggregates.reliability)
                << " W=" << report.optimal_aggregates.weight
                << " C=" << report.optimal_aggregates.cost << "\n"
                << "solution: " << rap::reconstruct(report) << "\n";
      std::printf("time: %.3fs\n", report.wall_time_seconds);
      return kExitOk;
    case rap::SolveOutcome::kBelowReliabilityBound:
      std::cout << "infeasible: no solution at or above reliability_lb\n";
      return kExitInfeasible;
    case rap::SolveOutcome::kInfeasible:
    default:
      std::cout << "infeasible: no solution satisfies the ceilings\n";
      return kExitInfeasible;
  }
}

int cmd_bench(const std::string& id_list, bool no_rlb, const std::string& csv_path, int jobs) {
  std::vector<int> ids;
  try {
    if (id_list.empty()) {
      ids.resize(rap::fyffe_variants().size());
      std::iota(ids.begin(), ids.end(), 1);
    } else {
      ids = parse_id_list(id_list);
      for (int id : ids) {
        if (id < 1 || id > static_cast<int>(rap::fyffe_variants().size())) {
          std::cerr << "error: variant id " << id << " outside 1.."
                    << rap::fyffe_variants().size() << "\n";
          return kExitUsage;
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: bad --ids list: " << e.what() << "\n";
    return kExitUsage;
  }

  rap::SolverOptions options;
  options.use_rlb = !no_rlb;
  const rap::RegressionReport report = rap::run_regression(ids, options, jobs);

  std::printf("%3s %5s %5s %15s %9s %s\n", "id", "W", "C", "R", "time", "status");
  int passed = 0;
  for (const rap::RegressionRow& row : report.rows) {
    if (!row.error.empty()) {
      std::printf("%3d %5s %5s %15s %9s error: %s\n", row.id, "-", "-", "-", "-",
                  row.error.c_str());
      continue;
    }
    std::printf("%3d %5d %5d %15s %8.3fs %s\n", row.id, row.got.weight, row.got.cost,
                format_reliability(row.got.reliability).c_str(), row.seconds,
                row.passed ? "pass" : "FAIL");
    if (row.passed) {
      ++passed;
    }
  }
  std::printf("summary: %d/%zu pass\n", passed, report.rows.size());

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return kExitUsage;
    }
    out << "id,weight,cost,reliability,seconds,pass\n";
    for (const rap::RegressionRow& row : report.rows) {
      out << row.id << ',' << row.got.weight << ',' << row.got.cost << ','
          << format_reliability(row.got.reliability) << ',' << row.seconds << ','
          << (row.passed ? 1 : 0) << '\n';
    }
  }
  return report.all_passed ? kExitOk : kExitInfeasible;
}

int cmd_verify(const std::string& instance_path, const std::vector<std::string>& groups) {
  rap::RapInstance instance;
  rap::SolutionVector solution;
  try {
    instance = rap::load_instance_file(instance_path);
    std::string text;
    for (const std::string& g : groups) {
      if (!text.empty()) {
        text.push_back(' ');
      }
      text += g;
    }
    solution = rap::parse_solution_string(text, instance);
  } catch (const rap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const rap::Aggregates a = solution.aggregates;
  std::cout << "R=" << format_reliability(a.reliability) << " W=" << a.weight
            << " C=" << a.cost << "\n";
  const rap::FeasibilityReport feas = rap::is_feasible(solution, instance);
  std::cout << "cost ceiling " << instance.cost_ceiling << ": "
            << (a.cost <= instance.cost_ceiling ? "ok" : "violated") << "\n";
  std::cout << "weight ceiling " << instance.weight_ceiling << ": "
            << (a.weight <= instance.weight_ceiling ? "ok" : "violated") << "\n";
  bool totals_ok = true;
  for (const rap::Violation& v : feas.violations) {
    if (v.kind == rap::Violation::Kind::kMinTotal || v.kind == rap::Violation::Kind::kMaxTotal) {
      totals_ok = false;
      std::cout << "subsystem totals: " << v.describe() << "\n";
    }
  }
  if (totals_ok) {
    std::cout << "subsystem totals: ok\n";
  }
  std::cout << (feas.feasible ? "feasible" : "infeasible") << "\n";
  return feas.feasible ? kExitOk : kExitInfeasible;
}

int cmd_enumerate(int mu, int cap, const std::string& csv_path) {
  rap::EnumerationOrder order;
  try {
    order = cap == 2 ? rap::forward_bat(mu) : rap::upper_bound_bat(mu, cap);
  } catch (const rap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream body;
  for (int j = 1; j <= order.mu; ++j) {
    body << 'x' << j << ',';
  }
  body << "sum\n";
  for (const rap::CountVector& v : order.vectors) {
    int sum = 0;
    for (int x : v) {
      sum += x;
    }
    for (int x : v) {
      body << x << ',';
    }
    body << sum << '\n';
  }

  if (csv_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(csv_path);
    if (!out) {
      std::cerr << "error: cannot write " << csv_path << "\n";
      return kExitUsage;
    }
    out << body.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the series-parallel redundancy allocation problem"};
  app.require_subcommand(1);

  // solve
  std::string instance_path;
  bool no_rlb = false;
  bool no_dominance = false;
  bool no_bounds = false;
  std::string stats_path;
  bool as_json = false;
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance file");
  solve->add_option("instance", instance_path, "Instance JSON file")->required();
  solve->add_flag("--no-rlb", no_rlb, "Ignore the instance's reliability lower bound");
  solve->add_flag("--no-dominance", no_dominance, "Disable the dominance rule");
  solve->add_flag("--no-bounds", no_bounds, "Disable the dynamic weight/cost bounds");
  solve->add_option("--stats", stats_path, "Write per-stage set sizes as CSV");
  solve->add_flag("--json", as_json, "Emit the report as JSON");

  // bench
  std::string id_list;
  bool bench_no_rlb = false;
  std::string bench_csv;
  int jobs = 0;
  CLI::App* bench = app.add_subcommand("bench", "Run the 33-variant benchmark regression");
  bench->add_option("--ids", id_list, "Variant ids, e.g. 1,3,5-8 (default: all)");
  bench->add_flag("--no-rlb", bench_no_rlb, "Solve without the reliability lower bounds");
  bench->add_option("--csv", bench_csv, "Write per-variant results as CSV");
  bench->add_option("--jobs", jobs, "Worker threads (default: logical cores)");

  // verify
  std::string verify_instance;
  std::vector<std::string> verify_groups;
  CLI::App* verify = app.add_subcommand("verify", "Evaluate and check a solution string");
  verify->add_option("instance", verify_instance, "Instance JSON file")->required();
  verify->add_option("solution", verify_groups, "Solution string (digit groups)")->required();

  // enumerate
  int mu = 0;
  int cap = 0;
  std::string enum_csv;
  CLI::App* enumerate = app.add_subcommand("enumerate", "Dump an enumeration order as CSV");
  enumerate->add_option("--mu", mu, "Vector width")->required();
  enumerate->add_option("--cap", cap, "Coordinate cap (2 = binary order)")->required();
  enumerate->add_option("--csv", enum_csv, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(instance_path, no_rlb, no_dominance, no_bounds, stats_path, as_json);
    }
    if (bench->parsed()) {
      return cmd_bench(id_list, bench_no_rlb, bench_csv, jobs);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_instance, verify_groups);
    }
    if (enumerate->parsed()) {
      return cmd_enumerate(mu, cap, enum_csv);
    }
  } catch (const rap::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const rap::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
