// Command line front end: one experiment per invocation, or a suite file.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zamobelt/experiment.hpp"

namespace {

int emit(const std::string& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << document;
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return zamobelt::kExitInputError;
  }
  out << document;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite belt periodicity experiments"};
  app.require_subcommand(1);

  zamobelt::ExperimentConfig cfg;
  std::string out_path;
  int steps = -1;

  const char* commands[] = {"belt", "halfperiod", "green", "tropical", "census", "dual-check",
                            "catalog-list"};
  for (const char* name : commands) {
    auto* sub = app.add_subcommand(name, std::string(name) + " experiment");
    if (std::string(name) != "catalog-list") {
      sub->add_option("target", cfg.target, "catalog name or bigraph JSON file")->required();
    }
    sub->add_option("--steps", steps, "belt steps");
    sub->add_option("--lambda", cfg.lambda, "labeling: one value for all vertices, or a1,a2,...");
    sub->add_option("--seed", cfg.seed, "seed of the random labelings");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--term-guard", cfg.term_guard, "maximum number of terms per polynomial");
    sub->add_option("--max-steps", cfg.max_steps, "maximum number of belt steps");
    sub->add_option("--labelings", cfg.labelings, "number of random labelings");
    sub->add_flag("!--no-symbolic", cfg.symbolic, "skip the symbolic cross-checks");
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->callback([&, name] { cfg.command = name; });
  }

  std::string suite_file;
  int jobs = 1;
  auto* suite = app.add_subcommand("suite", "run a JSON list of experiments");
  suite->add_option("config", suite_file, "JSON array of experiment configs")->required();
  suite->add_option("--jobs", jobs, "parallel workers")->check(CLI::PositiveNumber);
  suite->add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : zamobelt::kExitInputError;
  }

  if (suite->parsed()) {
    std::vector<zamobelt::ExperimentConfig> configs;
    try {
      std::ifstream in(suite_file);
      if (!in) throw zamobelt::Error(zamobelt::ErrorCode::invalid_input, "cannot open " + suite_file);
      nlohmann::json doc;
      try {
        in >> doc;
      } catch (const nlohmann::json::exception& e) {
        throw zamobelt::Error(zamobelt::ErrorCode::invalid_input, e.what());
      }
      const auto& list = doc.is_object() ? doc.at("experiments") : doc;
      for (const auto& entry : list) configs.push_back(zamobelt::ExperimentConfig::from_json(entry));
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return zamobelt::kExitInputError;
    }
    const auto result = zamobelt::run_suite(configs, jobs);
    for (const auto& entry : result.report.at("entries")) {
      if (entry.at("exitCode").get<int>() != 0) {
        std::cerr << entry.at("report").value("message", std::string()) << "\n";
      }
    }
    if (const int rc = emit(result.document, out_path)) return rc;
    return result.exit_code;
  }

  if (steps >= 0) cfg.steps = steps;
  const auto result = zamobelt::run_experiment(cfg);
  if (!result.diagnostic.empty()) std::cerr << result.diagnostic << "\n";
  if (const int rc = emit(result.document, out_path)) return rc;
  return result.exit_code;
}
