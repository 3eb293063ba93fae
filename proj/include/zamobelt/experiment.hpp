#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zamobelt/laurent.hpp"

namespace zamobelt {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFalsified = 1;
inline constexpr int kExitInputError = 2;

/// Term guard default, overridden by ZAMOBELT_TERM_GUARD when set.
std::size_t default_term_guard();

struct ExperimentConfig {
  std::string command;  // belt | halfperiod | green | tropical | census | dual-check | catalog-list
  std::string target;   // catalog name or path to a bigraph JSON file
  std::optional<int> steps;
  std::optional<std::string> lambda;  // "-1" or "1/2,-3,4"
  std::uint64_t seed = 0;
  std::string format = "json";  // json | csv (census only)
  std::size_t term_guard = default_term_guard();
  int max_steps = 400;
  int labelings = 100;
  bool symbolic = true;  // green: compare the frozen isomorphism with the belt σ

  /// Throws Error(invalid_input) when the config is unusable.
  void validate() const;
  static ExperimentConfig from_json(const nlohmann::json& doc);
};

struct ExperimentResult {
  int exit_code = kExitVerified;
  nlohmann::json report;    // always an object
  std::string document;     // rendered report (JSON or CSV)
  std::string diagnostic;   // human-readable failure reason, empty on success
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct SuiteResult {
  int exit_code = kExitVerified;  // max over entries
  nlohmann::json report;
  std::string document;
};

/// Runs configs on up to `jobs` threads; results are assembled in config order.
SuiteResult run_suite(const std::vector<ExperimentConfig>& configs, int jobs);

}  // namespace zamobelt
