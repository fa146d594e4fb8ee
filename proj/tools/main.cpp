#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dqgm: discrete quantum groups, multipliers and slice maps"};
  app.set_version_flag("--version", "dqgm 0.1.0");

  std::string command;
  std::string scenario_path;
  std::string out_path;
  std::size_t budget = 0, patience = 0;
  double tolerance = 0.0;
  dqgm::RunOptions options;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(dqgm::command_names()));
  app.add_option("--scenario", scenario_path, "Scenario JSON file")->required()->check(CLI::ExistingFile);
  auto* budget_opt = app.add_option("--window-budget", budget, "Number of windows to evaluate")->check(CLI::PositiveNumber);
  auto* patience_opt = app.add_option("--patience", patience, "Unchanged expansions needed to stop");
  auto* tol_opt = app.add_option("--tolerance", tolerance, "Float rank tolerance (relative to the largest singular value)")
                      ->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "Seed for randomized checks");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_flag("--timing", options.timing, "Include wall-clock timing in the report");

  CLI11_PARSE(app, argc, argv);

  if (*budget_opt) options.window_budget = budget;
  if (*patience_opt) options.patience = patience;
  if (*tol_opt) options.tolerance = tolerance;

  std::ifstream in(scenario_path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();

  const auto result = dqgm::run_text(command, text.str(), options);
  const std::string doc = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << doc;
  }
  for (const auto& e : result.report["errors"])
    std::cerr << e["type"].get<std::string>() << ": " << e["message"].get<std::string>() << "\n";
  return result.exit_code;
}
