#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbsym/algebra/numeric.hpp"

namespace hilbsym::cli {

enum class Precision { f64, ext };

std::string to_string(Precision p);

/// An invalid command line or configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 3;
  unsigned order = 12;
  std::optional<double> tol;
  std::vector<std::uint64_t> seeds;
  algebra::Branch branch = algebra::Branch::minus_pi;
  Precision precision = Precision::f64;
  std::string out;
  bool timings = false;
};

/// Throws ConfigError unless n >= 1, order >= 4, tol > 0 and the command is known.
void validate(const RunConfig& config);

const std::vector<std::string>& commands();

struct CheckRecord {
  std::string name;
  std::string index;
  /// Empty for exact checks.
  std::optional<double> value;
  /// "<" for deviations, ">=" for negative controls, empty for exact checks.
  std::string relation;
  double threshold = 0;
  bool passed = false;
  std::string error;
  double runtime = 0;
};

struct Report {
  RunConfig config;
  std::vector<CheckRecord> checks;
  /// Parameter points used, in seed order.
  nlohmann::ordered_json parameters = nlohmann::ordered_json::array();
  /// Command-specific data (tables for dump, step statistics for verify-connection).
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool passed() const;
};

/// Runs one command. Numeric-domain errors are recorded per check; ConfigError propagates.
Report run(const RunConfig& config);

/// Stable-order JSON; runtimes only when config.timings is set, so default reports are byte-identical.
nlohmann::ordered_json to_json(const Report& report);

}  // namespace hilbsym::cli
