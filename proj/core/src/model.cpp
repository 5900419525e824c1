#include "rap/model.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rap {

using nlohmann::json;

void validate_instance(const RapInstance& instance) {
  if (instance.subsystems.empty()) {
    throw ArgumentError("instance has no subsystems");
  }
  if (instance.cost_ceiling < 0 || instance.weight_ceiling < 0) {
    throw ArgumentError("ceilings must be nonnegative");
  }
  if (instance.reliability_lb && !(*instance.reliability_lb >= 0.0 && *instance.reliability_lb < 1.0)) {
    throw ArgumentError("reliability_lb must lie in [0, 1)");
  }
  for (std::size_t i = 0; i < instance.subsystems.size(); ++i) {
    const SubsystemSpec& s = instance.subsystems[i];
    const std::string where = "subsystem " + std::to_string(i + 1);
    if (s.options.empty()) {
      throw ArgumentError(where + " has no component options");
    }
    if (s.min_total < 1 || s.min_total > s.max_total) {
      throw ArgumentError(where + ": need 1 <= min_total <= max_total");
    }
    for (const ComponentOption& o : s.options) {
      if (!(o.reliability > 0.0 && o.reliability <= 1.0)) {
        throw ArgumentError(where + ": option reliability outside (0, 1]");
      }
      if (o.cost < 0 || o.weight < 0) {
        throw ArgumentError(where + ": negative cost or weight");
      }
    }
  }
}

Aggregates subsystem_aggregates(const CountVector& config, const SubsystemSpec& spec) {
  if (config.size() != spec.options.size()) {
    throw StructuralError("count vector length " + std::to_string(config.size()) +
                          " does not match option count " + std::to_string(spec.options.size()));
  }
  double miss = 1.0;  // product of (1 - r_j)^(x_j)
  int weight = 0;
  int cost = 0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    const int x = config[j];
    if (x < 0) {
      throw StructuralError("negative component count");
    }
    const ComponentOption& o = spec.options[j];
    const double q = 1.0 - o.reliability;
    for (int k = 0; k < x; ++k) {
      miss *= q;
    }
    weight += x * o.weight;
    cost += x * o.cost;
  }
  return Aggregates{1.0 - miss, weight, cost};
}

Aggregates system_aggregates(const SolutionVector& solution, const RapInstance& instance) {
  if (solution.configs.size() != instance.subsystems.size()) {
    throw StructuralError("solution has " + std::to_string(solution.configs.size()) +
                          " configs for " + std::to_string(instance.subsystems.size()) +
                          " subsystems");
  }
  Aggregates total;
  for (std::size_t i = 0; i < solution.configs.size(); ++i) {
    const Aggregates a = subsystem_aggregates(solution.configs[i], instance.subsystems[i]);
    total.reliability *= a.reliability;
    total.weight += a.weight;
    total.cost += a.cost;
  }
  return total;
}

SolutionVector make_solution(std::vector<CountVector> configs, const RapInstance& instance) {
  SolutionVector s;
  s.configs = std::move(configs);
  s.aggregates = system_aggregates(s, instance);
  return s;
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::kCostCeiling:
      return "cost exceeds ceiling";
    case Kind::kWeightCeiling:
      return "weight exceeds ceiling";
    case Kind::kMinTotal:
      return "subsystem " + std::to_string(subsystem + 1) + " below min_total";
    case Kind::kMaxTotal:
      return "subsystem " + std::to_string(subsystem + 1) + " above max_total";
  }
  return "unknown";
}

FeasibilityReport is_feasible(const SolutionVector& solution, const RapInstance& instance) {
  FeasibilityReport report;
  const Aggregates a = system_aggregates(solution, instance);
  if (a.cost > instance.cost_ceiling) {
    report.violations.push_back({Violation::Kind::kCostCeiling, -1});
  }
  if (a.weight > instance.weight_ceiling) {
    report.violations.push_back({Violation::Kind::kWeightCeiling, -1});
  }
  for (std::size_t i = 0; i < solution.configs.size(); ++i) {
    int total = 0;
    for (int x : solution.configs[i]) {
      total += x;
    }
    const SubsystemSpec& spec = instance.subsystems[i];
    if (total < spec.min_total) {
      report.violations.push_back({Violation::Kind::kMinTotal, static_cast<int>(i)});
    } else if (total > spec.max_total) {
      report.violations.push_back({Violation::Kind::kMaxTotal, static_cast<int>(i)});
    }
  }
  report.feasible = report.violations.empty();
  return report;
}

SolutionVector parse_solution_string(std::string_view text, const RapInstance& instance) {
  std::vector<std::string> groups;
  std::string current;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\n' || ch == '\r') {
      if (!current.empty()) {
        groups.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    groups.push_back(std::move(current));
  }
  const std::size_t n = instance.subsystems.size();
  if (groups.size() != n) {
    throw ParseError("expected " + std::to_string(n) + " groups, got " +
                     std::to_string(groups.size()));
  }
  std::vector<CountVector> configs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& g = groups[i];
    const std::size_t m = instance.subsystems[i].options.size();
    if (g.size() != m) {
      throw ParseError("group " + std::to_string(i + 1) + " has length " +
                       std::to_string(g.size()) + ", expected " + std::to_string(m));
    }
    configs[i].resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (!std::isdigit(static_cast<unsigned char>(g[j]))) {
        throw ParseError("group " + std::to_string(i + 1) + ", position " +
                         std::to_string(j + 1) + ": not a digit");
      }
      configs[i][j] = g[j] - '0';
    }
  }
  return make_solution(std::move(configs), instance);
}

std::string format_solution_string(const SolutionVector& solution) {
  std::string out;
  for (std::size_t i = 0; i < solution.configs.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
    }
    for (int x : solution.configs[i]) {
      if (x < 0 || x > 9) {
        throw CodecError("count " + std::to_string(x) + " in subsystem " +
                         std::to_string(i + 1) + " is not representable as one digit");
      }
      out.push_back(static_cast<char>('0' + x));
    }
  }
  return out;
}

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace

BigInt space_size_component_based(const RapInstance& instance) {
  BigInt total = 1;
  for (const SubsystemSpec& s : instance.subsystems) {
    const BigInt base = static_cast<int>(s.options.size()) + 1;
    BigInt subsystem = 1;
    for (int k = 0; k < s.max_total; ++k) {
      subsystem *= base;
    }
    total *= subsystem;
  }
  return total;
}

BigInt space_size_number_based(const RapInstance& instance) {
  BigInt total = 1;
  for (const SubsystemSpec& s : instance.subsystems) {
    const int m = static_cast<int>(s.options.size());
    BigInt subsystem = 0;
    for (int k = s.min_total; k <= s.max_total; ++k) {
      subsystem += binomial(k + m - 1, m - 1);
    }
    total *= subsystem;
  }
  return total;
}

std::string scientific_string(const BigInt& value, int significant_digits) {
  if (significant_digits < 1) {
    throw ArgumentError("need at least one significant digit");
  }
  if (value == 0) {
    std::string zero = "0.";
    zero.append(static_cast<std::size_t>(significant_digits - 1), '0');
    return zero + "E+00";
  }
  std::string digits = value.str();
  std::string sign;
  if (digits[0] == '-') {
    sign = "-";
    digits.erase(digits.begin());
  }
  int exponent = static_cast<int>(digits.size()) - 1;
  std::string head = digits.substr(0, static_cast<std::size_t>(significant_digits));
  while (static_cast<int>(head.size()) < significant_digits) {
    head.push_back('0');
  }
  // round half up on the first dropped digit
  if (static_cast<int>(digits.size()) > significant_digits && digits[significant_digits] >= '5') {
    int i = static_cast<int>(head.size()) - 1;
    while (i >= 0 && head[i] == '9') {
      head[i] = '0';
      --i;
    }
    if (i < 0) {
      head.insert(head.begin(), '1');
      head.pop_back();
      ++exponent;
    } else {
      ++head[i];
    }
  }
  std::ostringstream out;
  out << sign << head[0] << '.' << head.substr(1) << "E+";
  if (exponent < 10) {
    out << '0';
  }
  out << exponent;
  return out.str();
}

namespace {

RapInstance instance_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("subsystems")) {
    throw ParseError("instance document must be an object with a \"subsystems\" array");
  }
  RapInstance instance;
  for (const json& sub : doc.at("subsystems")) {
    SubsystemSpec spec;
    spec.min_total = sub.value("min_total", 1);
    spec.max_total = sub.value("max_total", 8);
    for (const json& opt : sub.at("options")) {
      ComponentOption o;
      o.reliability = opt.at("r").get<double>();
      o.cost = opt.at("c").get<int>();
      o.weight = opt.at("w").get<int>();
      spec.options.push_back(o);
    }
    instance.subsystems.push_back(std::move(spec));
  }
  instance.cost_ceiling = doc.at("cost_ceiling").get<int>();
  instance.weight_ceiling = doc.at("weight_ceiling").get<int>();
  if (doc.contains("reliability_lb") && !doc.at("reliability_lb").is_null()) {
    instance.reliability_lb = doc.at("reliability_lb").get<double>();
  }
  validate_instance(instance);
  return instance;
}

}  // namespace

RapInstance instance_from_json_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return instance_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  }
}

std::string instance_to_json_text(const RapInstance& instance, int indent) {
  json doc;
  doc["subsystems"] = json::array();
  for (const SubsystemSpec& s : instance.subsystems) {
    json sub;
    sub["options"] = json::array();
    for (const ComponentOption& o : s.options) {
      sub["options"].push_back({{"r", o.reliability}, {"c", o.cost}, {"w", o.weight}});
    }
    sub["min_total"] = s.min_total;
    sub["max_total"] = s.max_total;
    doc["subsystems"].push_back(std::move(sub));
  }
  doc["cost_ceiling"] = instance.cost_ceiling;
  doc["weight_ceiling"] = instance.weight_ceiling;
  if (instance.reliability_lb) {
    doc["reliability_lb"] = *instance.reliability_lb;
  }
  return doc.dump(indent);
}

RapInstance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open instance file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json_text(buffer.str());
}

}  // namespace rap
