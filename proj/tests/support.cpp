#include "support.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

namespace rap::test {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string temp_name(const char* tag) {
  static int counter = 0;
  return "/tmp/rap_test_" + std::to_string(::getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

}  // namespace

CliResult run_cli(const std::string& args) {
  const std::string out_path = temp_name("out");
  const std::string err_path = temp_name("err");
  const std::string command =
      std::string(RAP_CLI_BIN) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::vector<std::uint8_t> reference_dominance_keep(const std::vector<Scored>& items) {
  const std::size_t n = items.size();
  std::vector<std::uint8_t> keep(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Scored& a = items[j];
      const Scored& b = items[i];
      const bool covers = a.weight <= b.weight && a.cost <= b.cost &&
                          a.reliability >= b.reliability;
      if (!covers) continue;
      const bool same = a.weight == b.weight && a.cost == b.cost &&
                        a.reliability == b.reliability;
      if (!same || j < i) {
        keep[i] = 0;
        break;
      }
    }
  }
  return keep;
}

std::vector<Scored> random_scored(std::mt19937& rng, std::size_t count) {
  std::uniform_int_distribution<int> small(0, 30);
  std::uniform_int_distribution<int> milli(0, 999);
  std::vector<Scored> items;
  items.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    items.push_back({small(rng), small(rng), milli(rng) / 1000.0});
  }
  return items;
}

std::vector<std::vector<std::string>> load_csv(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream stream(line);
    std::string cell;
    while (std::getline(stream, cell, ',')) {
      cells.push_back(cell);
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

namespace {

using nlohmann::json;

bool type_matches(const json& value, const std::string& type) {
  if (type == "null") return value.is_null();
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "boolean") return value.is_boolean();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  return false;
}

std::string validate(const json& value, const json& schema, const std::string& where) {
  if (schema.contains("enum")) {
    bool hit = false;
    for (const json& option : schema.at("enum")) {
      if (value == option) {
        hit = true;
        break;
      }
    }
    if (!hit) return where + ": value not in enum";
  }
  if (schema.contains("type")) {
    const json& t = schema.at("type");
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const json& option : t) {
        if (type_matches(value, option.get<std::string>())) {
          ok = true;
          break;
        }
      }
    }
    if (!ok) return where + ": type mismatch";
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const json& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          return where + ": missing required key " + key.get<std::string>();
        }
      }
    }
    const json props = schema.value("properties", json::object());
    for (const auto& [key, member] : value.items()) {
      if (props.contains(key)) {
        const std::string err = validate(member, props.at(key), where + "." + key);
        if (!err.empty()) return err;
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties") == false) {
        return where + ": unexpected key " + key;
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      const std::string err =
          validate(value[i], schema.at("items"), where + "[" + std::to_string(i) + "]");
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace

std::string check_against_schema(const std::string& document_text,
                                 const std::string& schema_path) {
  json document;
  json schema;
  try {
    document = json::parse(document_text);
  } catch (const json::exception& e) {
    return std::string("document is not JSON: ") + e.what();
  }
  try {
    schema = json::parse(slurp(schema_path));
  } catch (const json::exception& e) {
    return std::string("schema is not JSON: ") + e.what();
  }
  return validate(document, schema, "$");
}

}  // namespace rap::test
