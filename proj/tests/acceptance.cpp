// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <iomanip>
#include <sstream>

#include "oracle.hpp"
#include "zamobelt/belt.hpp"
#include "zamobelt/catalog.hpp"
#include "zamobelt/green.hpp"
#include "zamobelt/tropical.hpp"

using namespace zamobelt;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

// Symbolic trajectories over 2N steps are shared between criteria.
const std::vector<BeltState>& trajectory(const std::string& name) {
  static std::map<std::string, std::vector<BeltState>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const auto g = catalog(name);
    it = cache.emplace(name, run_belt(g, 2 * g.half_period_length())).first;
  }
  return it->second;
}

std::vector<int> etas(const Bigraph& g) {
  std::vector<int> out;
  for (std::size_t k = 0; k < g.size(); ++k) out.push_back(g.coloring.eta(k));
  return out;
}

std::optional<int> first_return(const std::vector<std::vector<mpq_class>>& states, int limit) {
  for (int s = 2; s <= limit; s += 2)
    if (states[static_cast<std::size_t>(s)] == states[0]) return s;
  return std::nullopt;
}

void criterion1(Outcome& o) {
  const auto g = catalog("A2");
  const auto& traj = trajectory("A2");
  // golden values as rational functions, checked at sample points against the
  // direct recurrence and against the engine's Laurent polynomials
  struct Golden {
    std::size_t k;
    int tau;
    std::function<mpq_class(const mpq_class&, const mpq_class&)> f;
    const char* text;
  };
  const std::vector<Golden> golden{
      {0, 2, [](auto x1, auto x2) -> mpq_class { return (x2 + 1) / x1; }, "T_1(2)"},
      {1, 3, [](auto x1, auto x2) -> mpq_class { return (x1 + x2 + 1) / (x1 * x2); }, "T_2(3)"},
      {0, 4, [](auto x1, auto x2) -> mpq_class { return (x1 + 1) / x2; }, "T_1(4)"},
      {1, 5, [](auto x1, auto) -> mpq_class { return x1; }, "T_2(5)"},
      {0, 6, [](auto, auto x2) -> mpq_class { return x2; }, "T_1(6)"},
  };
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {5, 7}, {1, 1}, {11, 4}}) {
    std::vector<mpq_class> x{a, mpq_class(b, 3)};
    x[1].canonicalize();
    oracle::DirectT direct(g.gamma, g.delta, etas(g), x);
    for (const auto& gd : golden) {
      const auto& value = traj[static_cast<std::size_t>(gd.tau - 1)].values[gd.k];
      o.require(direct.at(gd.k, gd.tau) == gd.f(x[0], x[1]), std::string(gd.text) + " oracle");
      o.require(oracle::evaluate(value, x) == gd.f(x[0], x[1]), std::string(gd.text) + " engine");
    }
  }
  const auto hp = half_period(g, traj);
  const auto period = detect_period(g, 40);
  o.require(period == 10, "period 10");
  o.require(hp.sigma.cycles() == "(1 2)", "sigma (1 2)");
  o.require(hp.color_behavior == ColorBehavior::reversing, "color reversing");
  o.detail << "T_1(2)=" << traj[1].values[0].to_string() << "; period " << period.value_or(-1)
           << "; sigma " << hp.sigma.cycles() << " " << to_string(hp.color_behavior);
}

void criterion2(Outcome& o) {
  const auto g = catalog("fig1-A5starD4");
  const auto hp = half_period(g, trajectory(g.name));
  const auto period = detect_period(g, 40);
  const auto frozen = coframed_permutation(g);
  o.require(hp.N == 10, "N = 10");
  o.require(hp.sigma.cycles() == "(8 9)", "sigma (8 9)");
  o.require(hp.color_behavior == ColorBehavior::preserving, "color preserving");
  o.require(hp.sigma.compose(hp.sigma).is_identity(), "sigma^2 = id");
  o.require(period == 20, "period 20");
  o.require(frozen == hp.sigma, "frozen isomorphism agrees");
  o.detail << "N=" << hp.N << " sigma=" << hp.sigma.cycles() << " period=" << period.value_or(-1)
           << " frozen=" << frozen.cycles();
}

void criterion3(Outcome& o) {
  const auto g = catalog("fig2-F4xA2");
  const int N = g.half_period_length();
  const auto frozen = coframed_permutation(g);
  std::mt19937_64 rng(0);
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    TropicalTrajectory t(g, Labeling::random(g.size(), rng));
    t.run_to(2 * N);
    if (first_return(t.states(), 2 * N) == 30) ++ok;
  }
  o.require(N == 15, "N = 15");
  o.require(ok == 100, "tropical period 30 on all labelings");
  o.detail << "N=" << N << "; tropical period 30 on " << ok << "/100 labelings; ";
  try {
    const auto hp = half_period(g, trajectory(g.name));
    o.require(hp.sigma.cycles() == "(1 5)(2 6)(3 7)(4 8)", "symbolic sigma");
    o.require(hp.color_behavior == ColorBehavior::reversing, "color reversing");
    o.require(frozen == hp.sigma, "frozen isomorphism agrees");
    o.detail << "symbolic sigma=" << hp.sigma.cycles() << " " << to_string(hp.color_behavior);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::term_guard_exceeded) throw;
    o.require(frozen.cycles() == "(1 5)(2 6)(3 7)(4 8)", "frozen sigma");
    o.detail << "symbolic run stopped by the term guard; frozen sigma=" << frozen.cycles();
  }
}

void criterion4(Outcome& o) {
  int count = 0;
  for (const auto& name : catalog_sweep_names()) {
    const auto g = catalog(name);
    const auto hp = half_period(g, trajectory(name));
    o.require(preserves_gamma_delta(g, hp.sigma.perm), name + " automorphism");
    o.require(hp.sigma.compose(hp.sigma).is_identity(), name + " order");
    const bool parity_ok = (hp.N % 2 == 0) ? preserves_coloring(g, hp.sigma.perm)
                                           : reverses_coloring(g, hp.sigma.perm);
    o.require(parity_ok, name + " color parity");
    ++count;
  }
  o.detail << count << " bigraphs";
}

void criterion5(Outcome& o) {
  for (const char* name : {"B2xB2", "G2xG2"}) {
    const auto g = catalog(name);
    const auto& traj = trajectory(name);
    const int N = g.half_period_length();
    bool shift = true;
    for (int s = 0; s <= N; ++s) shift = shift && traj[static_cast<std::size_t>(s + N)] == traj[static_cast<std::size_t>(s)];
    const auto hp = half_period(g, traj);
    const auto autos = find_automorphisms(g, AutomorphismFilter::color_preserving);
    int candidates = 0;
    for (const auto& a : autos) candidates += (!a.is_identity() && a.order() == 2) ? 1 : 0;
    o.require(hp.identity, std::string(name) + " sigma = id");
    o.require(shift, std::string(name) + " T(t+N) = T(t)");
    o.require(candidates == 0, std::string(name) + " no order-2 candidate");
    o.detail << name << ": sigma=" << hp.sigma.cycles() << ", " << candidates
             << " nontrivial order-2 candidates; ";
  }
}

void criterion6(Outcome& o) {
  int certified = 0;
  for (const auto& name : catalog_sweep_names()) {
    const auto g = catalog(name);
    const auto [w, b] = verify_bipartite_belt_mgs(g);
    o.require(w.permutation && b.permutation, name + " -C permutation");
    o.require(w.factors == *g.h_gamma() && b.factors == *g.h_delta(), name + " lengths");
    ++certified;
  }
  const IntMatrix a2{{0, 1}, {-1, 0}};
  auto run = [&](std::initializer_list<int> seq) {
    FramedState s = FramedState::framed(a2);
    for (int k : seq) s = mutate_framed(s, static_cast<std::size_t>(k - 1));
    return s.c_matrix().negated();
  };
  o.require(run({1, 2}) == IntMatrix::identity(2), "mu1 mu2 gives -C = I");
  o.require(run({2, 1, 2}) == IntMatrix({{0, 1}, {1, 0}}), "mu2 mu1 mu2 gives -C = P(1 2)");
  o.detail << certified << " bigraphs, both sequences certified; framed A2 traces match";
}

void criterion7(Outcome& o) {
  const std::vector<std::tuple<std::string, int, int>> expected{
      {"A2", 6, 4}, {"A3", 12, 6}, {"A4", 20, 8}, {"D4", 24, 8}};
  for (const auto& [name, red, blue] : expected) {
    const auto g = catalog(name);
    const auto r = colored_census_once(g, Labeling::constant(g.size(), -1));
    o.require(r.red == red && r.blue == blue, name + " counts");
    o.require(r.ties == 0, name + " ties");
    o.require(r.blue_only_at_clusters, name + " blue timing");
    o.detail << name << " (" << r.red << ", " << r.blue << ") ";
  }
}

void criterion8(Outcome& o) {
  for (const char* name : {"A2", "A3", "D4"}) {
    const auto g = catalog(name);
    const auto r = denominator_bijection_check(g);
    auto expected = oracle::positive_roots(g.gamma);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<int> neg(g.size(), 0);
      neg[i] = -1;
      expected.push_back(neg);
    }
    std::sort(expected.begin(), expected.end());
    o.require(r.d_vectors == expected, std::string(name) + " d-vectors");
    o.detail << name << ": " << r.d_vectors.size() << " d-vectors; ";
  }
}

void criterion9(Outcome& o) {
  const auto names = catalog_sweep_names();
  std::mt19937_64 rng(0);
  int involutions = 0, framed_steps = 0, belt_steps = 0, labelings = 0, duals = 0;
  for (const auto& name : names) {
    const auto g = catalog(name);
    const auto& b = g.base.matrix();
    for (std::size_t k = 0; k < g.size(); ++k, ++involutions)
      o.require(mutate(mutate(b, k), k) == b, name + " involution");

    // every framed mutation re-asserts sign coherence inside mutate_framed
    for (Color first : {Color::white, Color::black}) {
      const int factors = first == Color::white ? *g.h_gamma() : *g.h_delta();
      framed_steps += static_cast<int>(certify_belt_sequence(g, first, factors).sequence.size());
    }

    // each belt step divides exactly or throws
    const auto& traj = trajectory(name);
    belt_steps += static_cast<int>(traj.size()) - 1;
    o.require(traj.back() == traj.front(), name + " state(2N) = state(0)");

    const int N = g.half_period_length();
    const auto hp = half_period(g, traj);
    const int minimal = N * hp.order;
    for (int i = 0; i < 100; ++i, ++labelings) {
      const auto lab = Labeling::random(g.size(), rng);
      TropicalTrajectory t(g, lab);
      t.run_to(2 * N);
      o.require(t.states()[static_cast<std::size_t>(2 * N)] == t.states()[0], name + " tropical 2N");
      o.require(first_return(t.states(), 2 * N) == minimal, name + " minimal tropical period");
      if (i < 10) o.require(tropical_half_period(g, lab, hp.sigma), name + " condition (2)");
    }
    for (std::size_t j = 0; j < g.size(); ++j)
      o.require(tropical_half_period(g, Labeling::basis(g.size(), j), hp.sigma), name + " condition (1)");
  }
  std::vector<std::string> dual_names;
  for (const auto& p : catalog_fold_pairs()) {
    dual_names.push_back(p.source);
    dual_names.push_back(p.folded_name);
  }
  for (const char* extra : {"B2", "B3", "C3"}) dual_names.push_back(extra);
  for (const auto& name : dual_names) {
    const auto g = catalog(name);
    for (int i = 0; i < 20; ++i, ++duals)
      o.require(dual_transfer_check(g, Labeling::random(g.size(), rng)), name + " dual transfer");
  }
  o.detail << involutions << " involutions, " << framed_steps << " framed steps, " << belt_steps
           << " exact belt steps, " << labelings << " tropical labelings (minimal period N*ord(sigma), state(2N)=state(0)), "
           << duals << " dual transfers";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"A2 golden trace", criterion1},
      {"fig1-A5starD4 half period", criterion2},
      {"fig2-F4xA2 half period", criterion3},
      {"half period sweep", criterion4},
      {"identity half periods", criterion5},
      {"maximal green certification", criterion6},
      {"colored mutation counts", criterion7},
      {"denominator bijection", criterion8},
      {"property suites", criterion9},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " "
              << criteria[i].first << ": " << o.detail.str() << " (" << std::fixed
              << std::setprecision(2) << secs << "s)" << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
