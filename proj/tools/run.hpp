#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scenario.hpp"

namespace dqgm {

/// Command-line overrides; unset fields fall back to scenario params, then defaults.
struct RunOptions {
  std::optional<std::size_t> window_budget;
  std::optional<std::size_t> patience;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  bool timing = false;
};

struct RunResult {
  nlohmann::ordered_json report;
  /// 0 success, 1 error, 2 window budget exhausted.
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

RunResult run(const std::string& command, const Scenario& scenario, const RunOptions& options = {});

/// Parses the scenario text first; parse and validation failures become error reports.
RunResult run_text(const std::string& command, std::string_view scenario_text, const RunOptions& options = {});

}  // namespace dqgm
