#include "zamobelt/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "zamobelt/belt.hpp"
#include "zamobelt/catalog.hpp"
#include "zamobelt/green.hpp"
#include "zamobelt/io.hpp"
#include "zamobelt/tropical.hpp"

namespace zamobelt {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands{"belt",   "halfperiod", "green",       "tropical",
                                      "census", "dual-check", "catalog-list"};

std::string catalog_version_hex() {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(catalog_version_hash()));
  return buf;
}

Bigraph resolve_target(const std::string& target) {
  const bool looks_like_path = target.find('/') != std::string::npos ||
                               target.ends_with(".json") || std::filesystem::exists(target);
  return looks_like_path ? load_bigraph_file(target) : catalog(target);
}

Labeling parse_lambda(const std::string& text, std::size_t n) {
  std::vector<mpq_class> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    mpq_class q;
    if (item.empty() || q.set_str(item, 10) != 0) {
      throw Error(ErrorCode::invalid_input, "bad labeling entry '" + item + "'");
    }
    q.canonicalize();
    values.push_back(q);
  }
  if (values.size() == 1) return Labeling::constant(n, values[0]);
  if (values.size() != n) {
    throw Error(ErrorCode::arity_mismatch, "labeling has " + std::to_string(values.size()) +
                                               " entries for " + std::to_string(n) + " vertices");
  }
  return Labeling{values};
}

std::vector<Labeling> labelings_for(const ExperimentConfig& cfg, std::size_t n) {
  if (cfg.lambda) return {parse_lambda(*cfg.lambda, n)};
  std::mt19937_64 rng(cfg.seed);
  std::vector<Labeling> out;
  for (int i = 0; i < cfg.labelings; ++i) out.push_back(Labeling::random(n, rng));
  return out;
}

BeltOptions belt_options(const ExperimentConfig& cfg) {
  return BeltOptions{cfg.term_guard, cfg.max_steps};
}

int require_steps(const ExperimentConfig& cfg, int steps) {
  if (steps > cfg.max_steps) {
    throw Error(ErrorCode::step_guard_exceeded, std::to_string(steps) + " steps requested, guard is " +
                                                    std::to_string(cfg.max_steps));
  }
  return steps;
}

json run_belt_command(const ExperimentConfig& cfg, const Bigraph& g) {
  const int steps = require_steps(
      cfg, cfg.steps ? *cfg.steps : (g.admissible() ? 2 * g.half_period_length() : 10));
  const auto traj = run_belt(g, steps, belt_options(cfg));
  std::vector<std::string> rendered;
  for (const auto& s : traj) rendered.push_back(s.render());
  return {{"name", g.name},
          {"steps", steps},
          {"cluster", traj.back().render()},
          {"trajectory", rendered},
          {"verified", true}};
}

json run_halfperiod_command(const ExperimentConfig& cfg, const Bigraph& g) {
  const int N = g.half_period_length();
  const auto traj = run_belt(g, require_steps(cfg, 2 * N), belt_options(cfg));
  const auto hp = half_period(g, traj);
  std::optional<int> period;
  for (int p = 2; p <= 2 * N && !period; p += 2) {
    if (traj[static_cast<std::size_t>(p)] == traj[0]) period = p;
  }
  std::set<std::string> distinct;
  for (const auto& v : layer_values(g, traj, 0, 2 * N)) distinct.insert(v.to_string());
  json r = {{"name", g.name},
            {"N", N},
            {"sigma", hp.sigma.cycles()},
            {"colorBehavior", to_string(hp.color_behavior)},
            {"identity", hp.identity},
            {"order", hp.order},
            {"censusSize", distinct.size()},
            {"verified", period.has_value() && *period == N * hp.order}};
  r["period"] = period ? json(*period) : json(nullptr);
  return r;
}

json run_green_command(const ExperimentConfig& cfg, const Bigraph& g) {
  const auto [white_first, black_first] = verify_bipartite_belt_mgs(g);
  const int hg = *g.h_gamma();
  const int hd = *g.h_delta();
  json r = {{"name", g.name},
            {"hGamma", hg},
            {"hDelta", hd},
            {"whiteFirst", certificate_to_json(white_first, hg, hd)},
            {"blackFirst", certificate_to_json(black_first, hg, hd)}};
  if (cfg.symbolic) {
    const auto sigma = half_period(g, belt_options(cfg)).sigma;
    r["symbolicSigma"] = sigma.cycles();
    r["frozenIsomorphism"] = frozen_isomorphism_check(g, sigma).cycles();
  } else {
    r["frozenIsomorphism"] = coframed_permutation(g).cycles();
  }
  r["verified"] = true;
  return r;
}

json run_tropical_command(const ExperimentConfig& cfg, const Bigraph& g) {
  const int N = g.half_period_length();
  require_steps(cfg, 3 * N);
  const Automorphism sigma = coframed_permutation(g);
  const int expected = N * sigma.order();
  std::map<std::string, int> periods;
  int returns = 0;
  int half_ok = 0;
  const auto labs = labelings_for(cfg, g.size());
  for (const auto& lab : labs) {
    TropicalTrajectory traj(g, lab);
    traj.run_to(2 * N);
    const auto& st = traj.states();
    if (st[static_cast<std::size_t>(2 * N)] == st[0]) ++returns;
    std::optional<int> p;
    for (int s = 2; s <= 2 * N && !p; s += 2) {
      if (st[static_cast<std::size_t>(s)] == st[0]) p = s;
    }
    ++periods[p ? std::to_string(*p) : "none"];
    if (tropical_half_period(g, lab, sigma)) ++half_ok;
  }
  bool basis_ok = true;
  for (std::size_t j = 0; j < g.size(); ++j) {
    basis_ok = basis_ok && tropical_half_period(g, Labeling::basis(g.size(), j), sigma);
  }
  const int count = static_cast<int>(labs.size());
  json r = {{"name", g.name},
            {"N", N},
            {"sigma", sigma.cycles()},
            {"expectedMinimalPeriod", expected},
            {"labelings", count},
            {"periods", periods},
            {"returnsAfter2N", returns},
            {"halfPeriodHolds", half_ok},
            {"basisHalfPeriodHolds", basis_ok}};
  if (cfg.symbolic) {
    const auto traj = run_belt(g, 2 * N, belt_options(cfg));
    const auto conv = verify_degree_convention(g, traj);
    r["degreeConvention"] = {{"maxMatches", conv.max_matches},
                             {"minMatches", conv.min_matches},
                             {"description", conv.description()}};
  }
  r["verified"] = returns == count && half_ok == count && basis_ok &&
                  periods.size() == 1 && periods.count(std::to_string(expected)) == 1;
  return r;
}

json census_json(const ColoredCensus& c) {
  return {{"labeling", c.labeling.to_string()},
          {"periodSteps", c.period_steps},
          {"red", c.red},
          {"blue", c.blue},
          {"ties", c.ties},
          {"blueTimes", c.blue_times},
          {"blueOnlyAtClusters", c.blue_only_at_clusters}};
}

json run_census_command(const ExperimentConfig& cfg, const Bigraph& g) {
  std::optional<Labeling> lab;
  if (cfg.lambda) lab = parse_lambda(*cfg.lambda, g.size());
  const auto res = colored_census(g, lab);
  const int N = g.half_period_length();
  json r = {{"name", g.name}, {"N", N}, {"period", 2 * N}, {"primary", census_json(res.primary)}};
  if (res.rerun) r["rerun"] = census_json(*res.rerun);
  const bool single = std::all_of(g.delta_components.begin(), g.delta_components.end(),
                                  [](const Component& c) { return c.vertices.size() == 1; });
  const auto& labels = res.primary.labeling.lambda;
  const bool negative = std::all_of(labels.begin(), labels.end(), [](const mpq_class& q) { return q < 0; });
  bool verified = true;
  if (single && negative) {
    const int rank = static_cast<int>(g.size());
    const int h = *g.h_gamma();
    const ColoredCensus& used = res.rerun ? *res.rerun : res.primary;
    r["expected"] = {{"red", h * rank}, {"blue", 2 * rank}};
    verified = used.ties == 0 && used.red == h * rank && used.blue == 2 * rank &&
               used.blue_only_at_clusters;
  }
  r["verified"] = verified;
  return r;
}

json run_dual_command(const ExperimentConfig& cfg, const Bigraph& g) {
  const auto labs = labelings_for(cfg, g.size());
  int passed = 0;
  for (const auto& lab : labs) passed += dual_transfer_check(g, lab) ? 1 : 0;
  std::vector<std::string> sym;
  for (const auto& c : g.base.symmetrizer()) sym.push_back(c.get_str());
  const int count = static_cast<int>(labs.size());
  return {{"name", g.name},
          {"symmetrizer", sym},
          {"dual", to_string(langlands_dual(g.base).matrix())},
          {"labelings", count},
          {"passed", passed},
          {"verified", passed == count}};
}

json run_catalog_list() {
  json entries = json::array();
  for (const auto& name : catalog_sweep_names()) {
    const auto g = catalog(name);
    entries.push_back({{"name", name},
                       {"n", g.size()},
                       {"hGamma", *g.h_gamma()},
                       {"hDelta", *g.h_delta()},
                       {"N", g.half_period_length()}});
  }
  return {{"entries", entries}, {"figures", catalog_figure_names()}, {"verified", true}};
}

std::string census_csv(const json& r, std::uint64_t seed) {
  std::ostringstream out;
  out << "name,lambdaSeed,period,red,blue,ties\n";
  auto row = [&](const json& c) {
    out << r.at("name").get<std::string>() << ',' << seed << ',' << r.at("period").get<int>()
        << ',' << c.at("red").get<int>() << ',' << c.at("blue").get<int>() << ','
        << c.at("ties").get<int>() << '\n';
  };
  row(r.at("primary"));
  if (r.contains("rerun")) row(r.at("rerun"));
  return out.str();
}

}  // namespace

std::size_t default_term_guard() {
  if (const char* env = std::getenv("ZAMOBELT_TERM_GUARD")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultTermGuard;
}

void ExperimentConfig::validate() const {
  if (!kCommands.count(command)) throw Error(ErrorCode::invalid_input, "unknown command '" + command + "'");
  if (command != "catalog-list" && target.empty()) throw Error(ErrorCode::invalid_input, "missing target");
  if (format != "json" && format != "csv") throw Error(ErrorCode::invalid_input, "format must be json or csv");
  if (format == "csv" && command != "census") throw Error(ErrorCode::invalid_input, "csv output is only available for census");
  if (term_guard == 0 || max_steps <= 0) throw Error(ErrorCode::invalid_input, "guards must be positive");
  if (steps && *steps < 0) throw Error(ErrorCode::invalid_input, "steps must be non-negative");
  if (labelings <= 0) throw Error(ErrorCode::invalid_input, "labelings must be positive");
}

ExperimentConfig ExperimentConfig::from_json(const json& doc) {
  ExperimentConfig cfg;
  try {
    cfg.command = doc.at("command").get<std::string>();
    cfg.target = doc.value("target", std::string());
    if (doc.contains("steps")) cfg.steps = doc.at("steps").get<int>();
    if (doc.contains("lambda")) {
      const auto& l = doc.at("lambda");
      cfg.lambda = l.is_string() ? l.get<std::string>() : l.dump();
    }
    cfg.seed = doc.value("seed", std::uint64_t{0});
    cfg.format = doc.value("format", std::string("json"));
    cfg.term_guard = doc.value("termGuard", cfg.term_guard);
    cfg.max_steps = doc.value("maxSteps", cfg.max_steps);
    cfg.labelings = doc.value("labelings", cfg.labelings);
    cfg.symbolic = doc.value("symbolic", cfg.symbolic);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_input, std::string("experiment config: ") + e.what());
  }
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult res;
  json base = {{"command", cfg.command},
               {"target", cfg.target},
               {"seed", cfg.seed},
               {"catalogVersion", catalog_version_hex()}};
  try {
    cfg.validate();
    json body;
    if (cfg.command == "catalog-list") {
      body = run_catalog_list();
    } else {
      const Bigraph g = resolve_target(cfg.target);
      if (!is_recurrent(g)) {
        throw Error(ErrorCode::not_recurrent, g.name + ": mu_white(B) != -B");
      }
      if (cfg.command == "belt") body = run_belt_command(cfg, g);
      else if (cfg.command == "halfperiod") body = run_halfperiod_command(cfg, g);
      else if (cfg.command == "green") body = run_green_command(cfg, g);
      else if (cfg.command == "tropical") body = run_tropical_command(cfg, g);
      else if (cfg.command == "census") body = run_census_command(cfg, g);
      else body = run_dual_command(cfg, g);
    }
    res.report = base;
    res.report.update(body);
    if (!res.report.at("verified").get<bool>()) {
      res.exit_code = kExitFalsified;
      res.diagnostic = cfg.command + " " + cfg.target + ": claim not verified";
    }
    res.document = cfg.format == "csv" ? census_csv(res.report, cfg.seed) : res.report.dump(2) + "\n";
    return res;
  } catch (const Error& e) {
    res.exit_code = is_falsification(e.code()) ? kExitFalsified : kExitInputError;
    res.diagnostic = e.what();
    res.report = base;
    res.report["error"] = error_code_name(e.code());
  } catch (const std::exception& e) {
    res.exit_code = kExitInputError;
    res.diagnostic = e.what();
    res.report = base;
    res.report["error"] = "InternalError";
  }
  res.report["verified"] = false;
  res.report["message"] = res.diagnostic;
  res.document = res.report.dump(2) + "\n";
  return res;
}

SuiteResult run_suite(const std::vector<ExperimentConfig>& configs, int jobs) {
  std::vector<ExperimentResult> results(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) results[i] = run_experiment(configs[i]);
  };
  const auto count = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                             std::max<std::size_t>(configs.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult suite;
  json entries = json::array();
  int passed = 0, falsified = 0, errors = 0;
  for (const auto& r : results) {
    entries.push_back({{"exitCode", r.exit_code}, {"report", r.report}});
    suite.exit_code = std::max(suite.exit_code, r.exit_code);
    if (r.exit_code == kExitVerified) ++passed;
    else if (r.exit_code == kExitFalsified) ++falsified;
    else ++errors;
  }
  suite.report = {{"entries", entries},
                  {"summary",
                   {{"total", results.size()},
                    {"passed", passed},
                    {"falsified", falsified},
                    {"errors", errors},
                    {"exitCode", suite.exit_code}}}};
  suite.document = suite.report.dump(2) + "\n";
  return suite;
}

}  // namespace zamobelt
