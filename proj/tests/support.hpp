#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rap/model.hpp"
#include "rap/pruning.hpp"

namespace rap::test {

inline std::string data_path(const std::string& relative) {
  return std::string(RAP_DATA_DIR) + "/" + relative;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs the rap binary with the given arguments, capturing stdout/stderr.
CliResult run_cli(const std::string& args);

/// Quadratic reference dominance filter, straight from the definition:
/// drop item i when some j has weight<=, cost<=, reliability>= and either a
/// different triple or a smaller index. Returns the keep mask.
std::vector<std::uint8_t> reference_dominance_keep(const std::vector<Scored>& items);

/// Random scored items with deliberately narrow ranges so ties occur.
std::vector<Scored> random_scored(std::mt19937& rng, std::size_t count);

/// Simple CSV loader; returns rows of cells, header row included.
std::vector<std::vector<std::string>> load_csv(const std::string& path);

/// Truncation to six decimal digits (always <= r).
inline double truncate6(double r) {
  return static_cast<double>(static_cast<long long>(r * 1e6)) / 1e6;
}

/// Minimal JSON-schema checker covering the subset used by the shipped
/// schemas: type (single or list, with "null"), enum, required, properties,
/// additionalProperties (boolean), items. Returns an empty string on
/// success, else the first violation found.
std::string check_against_schema(const std::string& document_text,
                                 const std::string& schema_path);

}  // namespace rap::test
