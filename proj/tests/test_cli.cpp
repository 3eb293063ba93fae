#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "zamobelt/experiment.hpp"

using namespace zamobelt;

namespace {

ExperimentConfig make(const std::string& command, const std::string& target) {
  ExperimentConfig cfg;
  cfg.command = command;
  cfg.target = target;
  return cfg;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("single experiments") {
  const auto hp = run_experiment(make("halfperiod", "fig1-A5starD4"));
  CHECK(hp.exit_code == kExitVerified);
  CHECK(hp.report["N"] == 10);
  CHECK(hp.report["sigma"] == "(8 9)");
  CHECK(hp.report["colorBehavior"] == "preserving");
  CHECK(hp.report["period"] == 20);
  CHECK(hp.report.contains("catalogVersion"));
  CHECK(hp.report["seed"] == 0);

  auto census = make("census", "A2");
  census.lambda = "-1";
  const auto c = run_experiment(census);
  CHECK(c.exit_code == kExitVerified);
  CHECK(c.report["primary"]["red"] == 6);
  CHECK(c.report["primary"]["blue"] == 4);
  CHECK(c.report["primary"]["ties"] == 0);

  auto belt = make("belt", "A2");
  belt.steps = 0;
  const auto b = run_experiment(belt);
  CHECK(b.exit_code == kExitVerified);
  CHECK(b.report["cluster"] == "x1, x2");
}

TEST_CASE("other commands") {
  CHECK(run_experiment(make("green", "B2xB2")).report["frozenIsomorphism"] == "()");
  auto trop = make("tropical", "A3");
  trop.labelings = 10;
  const auto t = run_experiment(trop);
  CHECK(t.exit_code == kExitVerified);
  CHECK(t.report["periods"]["12"] == 10);
  CHECK(t.report["degreeConvention"]["maxMatches"] == true);
  auto dual = make("dual-check", "G2");
  dual.labelings = 5;
  CHECK(run_experiment(dual).report["passed"] == 5);
  const auto list = run_experiment(make("catalog-list", ""));
  CHECK(list.exit_code == kExitVerified);
  CHECK(list.report["entries"].size() == 16);
}

TEST_CASE("csv census") {
  auto cfg = make("census", "A3");
  cfg.format = "csv";
  const auto r = run_experiment(cfg);
  CHECK(r.document == "name,lambdaSeed,period,red,blue,ties\nA3,0,12,12,6,0\n");
}

TEST_CASE("exit codes") {
  CHECK(run_experiment(make("halfperiod", "nope")).exit_code == kExitInputError);
  CHECK(run_experiment(make("frobnicate", "A2")).exit_code == kExitInputError);
  auto guard = make("halfperiod", "A5");
  guard.term_guard = 2;
  CHECK(run_experiment(guard).exit_code == kExitInputError);
  auto bad_lambda = make("census", "A2");
  bad_lambda.lambda = "1,2,3";
  CHECK(run_experiment(bad_lambda).exit_code == kExitInputError);
  const auto file = temp_file("zamobelt_linear_a3.json", R"({"n": 3, "b": [[0,1,0],[-1,0,1],[0,-1,0]]})");
  const auto r = run_experiment(make("halfperiod", file));
  CHECK(r.exit_code == kExitInputError);
  CHECK(r.report["error"] == "NotRecurrent");
}

TEST_CASE("bigraph files") {
  const auto file = temp_file("zamobelt_a2.json", R"({"n": 2, "b": [[0,1],[-1,0]], "epsilon": ["w","b"]})");
  const auto r = run_experiment(make("halfperiod", file));
  CHECK(r.exit_code == kExitVerified);
  CHECK(r.report["N"] == 5);
  const auto broken = temp_file("zamobelt_broken.json", R"({"n": 2, "b": [[0,1]]})");
  CHECK(run_experiment(make("halfperiod", broken)).exit_code == kExitInputError);
}

TEST_CASE("suites") {
  std::vector<ExperimentConfig> cfgs{make("halfperiod", "A2"), make("halfperiod", "A3"),
                                     make("halfperiod", "D4")};
  const auto s = run_suite(cfgs, 2);
  CHECK(s.exit_code == 0);
  CHECK(s.report["summary"]["passed"] == 3);

  const auto empty = run_suite({}, 4);
  CHECK(empty.exit_code == 0);
  CHECK(empty.report["summary"]["total"] == 0);

  const auto file = temp_file("zamobelt_linear_a3b.json", R"({"n": 3, "b": [[0,1,0],[-1,0,1],[0,-1,0]]})");
  cfgs.insert(cfgs.begin() + 1, make("halfperiod", file));
  const auto mixed = run_suite(cfgs, 3);
  CHECK(mixed.exit_code == kExitInputError);
  CHECK(mixed.report["entries"][1]["exitCode"] == kExitInputError);
  CHECK(mixed.report["summary"]["passed"] == 3);

  CHECK(run_suite(cfgs, 1).document == mixed.document);
  CHECK(run_suite(cfgs, 3).document == mixed.document);
}

TEST_CASE("config parsing") {
  const auto cfg = ExperimentConfig::from_json(
      nlohmann::json{{"command", "census"}, {"target", "A2"}, {"lambda", "-1"}, {"seed", 5}});
  CHECK(cfg.command == "census");
  CHECK(cfg.lambda == "-1");
  CHECK(cfg.seed == 5);
  CHECK_THROWS_AS(ExperimentConfig::from_json(nlohmann::json{{"target", "A2"}}), Error);
  auto bad = make("belt", "A2");
  bad.format = "csv";
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("term guard from the environment") {
  setenv("ZAMOBELT_TERM_GUARD", "123", 1);
  CHECK(default_term_guard() == 123);
  unsetenv("ZAMOBELT_TERM_GUARD");
  CHECK(default_term_guard() == kDefaultTermGuard);
}
