#include "zamobelt/belt.hpp"

#include <algorithm>
#include <numeric>

#include "zamobelt/dynkin.hpp"

namespace zamobelt {

namespace {

LaurentPoly neighbour_product(const Bigraph& g, const IntMatrix& weights, const BeltState& s,
                              std::size_t k, std::size_t guard) {
  const std::size_t n = g.size();
  std::vector<LaurentPoly> factors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::int64_t e = 0; e < weights(i, k); ++e) factors.push_back(s.values[i]);
  }
  std::sort(factors.begin(), factors.end(),
            [](const LaurentPoly& a, const LaurentPoly& b) { return a.size() < b.size(); });
  LaurentPoly result = LaurentPoly::constant(n, 1);
  for (const auto& f : factors) result = mul(result, f, guard);
  return result;
}

void require_recurrent(const Bigraph& g) {
  if (!is_recurrent(g)) {
    throw Error(ErrorCode::not_recurrent, g.name + ": Γ and Δ do not commute");
  }
}

}  // namespace

int BeltState::layer_time(std::size_t k, const Bipartition& coloring) const {
  const int t = step + 1;
  return (t % 2 == coloring.eta(k)) ? t : t - 1;
}

std::string BeltState::render() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out;
}

BeltState initial_state(const Bigraph& g) {
  BeltState s;
  for (std::size_t i = 0; i < g.size(); ++i) s.values.push_back(LaurentPoly::variable(g.size(), i));
  return s;
}

BeltState step_belt(const Bigraph& g, const BeltState& s, const BeltOptions& opts) {
  BeltState next = s;
  next.step = s.step + 1;
  for (int k : g.coloring.vertices(active_color(s.step))) {
    const auto kk = static_cast<std::size_t>(k);
    LaurentPoly numerator = add(neighbour_product(g, g.gamma, s, kk, opts.term_guard),
                                neighbour_product(g, g.delta, s, kk, opts.term_guard));
    try {
      next.values[kk] = div_exact(numerator, s.values[kk], opts.term_guard);
    } catch (const NotDivisibleError& e) {
      throw Error(ErrorCode::laurent_phenomenon_violation,
                  g.name + ": step " + std::to_string(s.step) + ", vertex " +
                      std::to_string(k + 1) + ": " + e.what());
    }
    if (!next.values[kk].all_coefficients_positive()) {
      throw Error(ErrorCode::positivity_violation,
                  g.name + ": step " + std::to_string(s.step) + ", vertex " +
                      std::to_string(k + 1) + " = " + next.values[kk].to_string());
    }
  }
  return next;
}

std::vector<BeltState> run_belt(const Bigraph& g, int steps, const BeltOptions& opts) {
  require_recurrent(g);
  std::vector<BeltState> traj{initial_state(g)};
  traj.reserve(static_cast<std::size_t>(steps) + 1);
  for (int s = 0; s < steps; ++s) traj.push_back(step_belt(g, traj.back(), opts));
  return traj;
}

std::optional<int> detect_period(const Bigraph& g, int max_steps, const BeltOptions& opts) {
  require_recurrent(g);
  const BeltState start = initial_state(g);
  BeltState cur = start;
  for (int s = 1; s <= max_steps; ++s) {
    cur = step_belt(g, cur, opts);
    if (s % 2 == 0 && cur == start) return s;
  }
  return std::nullopt;
}

const char* to_string(ColorBehavior b) {
  return b == ColorBehavior::preserving ? "preserving" : "reversing";
}

HalfPeriodReport half_period(const Bigraph& g, const BeltOptions& opts) {
  require_recurrent(g);
  const int N = g.half_period_length();
  if (N > opts.max_steps) {
    throw Error(ErrorCode::step_guard_exceeded,
                "half period " + std::to_string(N) + " exceeds the step guard");
  }
  return half_period(g, run_belt(g, N, opts));
}

HalfPeriodReport half_period(const Bigraph& g, const std::vector<BeltState>& trajectory) {
  const int N = g.half_period_length();
  if (static_cast<int>(trajectory.size()) <= N) {
    throw Error(ErrorCode::invalid_input, "trajectory shorter than the half period");
  }
  const auto& values = trajectory[static_cast<std::size_t>(N)].values;
  const std::size_t n = g.size();
  std::vector<int> perm(n, -1);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentPoly& v = values[i];
    const int j = v.as_variable();
    if (j < 0) {
      std::string what = g.name + ": T_" + std::to_string(i + 1) + " at step " +
                         std::to_string(N) + " is " + v.to_string();
      if (v.size() == 1) {
        LaurentPoly unit = LaurentPoly::monomial(n, v.terms()[0].mono, 1);
        if (unit.as_variable() >= 0) what += " (a scalar multiple of a variable)";
      }
      throw Error(ErrorCode::no_permutation_match, what);
    }
    if (hit[static_cast<std::size_t>(j)]) {
      throw Error(ErrorCode::no_permutation_match,
                  g.name + ": x" + std::to_string(j + 1) + " appears twice at step " +
                      std::to_string(N));
    }
    hit[static_cast<std::size_t>(j)] = true;
    perm[i] = j;
  }
  HalfPeriodReport r;
  r.N = N;
  r.sigma.perm = perm;
  if (!preserves_gamma_delta(g, perm)) {
    throw Error(ErrorCode::not_automorphism,
                g.name + ": σ = " + r.sigma.cycles() + " does not preserve Γ and Δ");
  }
  r.order = r.sigma.order();
  r.identity = r.sigma.is_identity();
  if (r.order > 2) {
    throw Error(ErrorCode::order_exceeds_two,
                g.name + ": σ = " + r.sigma.cycles() + " has order " + std::to_string(r.order));
  }
  const bool keeps = preserves_coloring(g, perm);
  const bool swaps = reverses_coloring(g, perm);
  if ((N % 2 == 0 && !keeps) || (N % 2 == 1 && !swaps)) {
    throw Error(ErrorCode::color_parity_mismatch,
                g.name + ": σ = " + r.sigma.cycles() + " with N = " + std::to_string(N));
  }
  r.color_behavior = N % 2 == 0 ? ColorBehavior::preserving : ColorBehavior::reversing;
  r.sigma.kind = N % 2 == 0 ? AutomorphismKind::color_preserving
                            : AutomorphismKind::color_reversing;
  return r;
}

std::vector<LaurentPoly> layer_values(const Bigraph& g, const std::vector<BeltState>& trajectory,
                                      int from, int to) {
  std::vector<LaurentPoly> out;
  for (int tau = std::max(from, 0); tau < to; ++tau) {
    const int s = std::max(tau - 1, 0);
    if (s >= static_cast<int>(trajectory.size())) {
      throw Error(ErrorCode::invalid_input,
                  "layer " + std::to_string(tau) + " is beyond the trajectory");
    }
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (tau % 2 == g.coloring.eta(k)) out.push_back(trajectory[static_cast<std::size_t>(s)].values[k]);
    }
  }
  return out;
}

std::vector<CensusEntry> cluster_variable_census(const Bigraph& g, const BeltOptions& opts) {
  const int N = g.half_period_length();
  const auto traj = run_belt(g, 2 * N, opts);
  std::map<std::string, CensusEntry> seen;
  for (auto& v : layer_values(g, traj, 0, 2 * N)) {
    auto [it, inserted] = seen.try_emplace(v.to_string(), CensusEntry{v, 0});
    ++it->second.count;
  }
  std::vector<CensusEntry> out;
  for (auto& [key, entry] : seen) out.push_back(std::move(entry));
  return out;
}

DenominatorCheck denominator_bijection_check(const Bigraph& g, const BeltOptions& opts) {
  for (const auto& comp : g.delta_components) {
    if (comp.vertices.size() != 1) {
      throw Error(ErrorCode::invalid_input,
                  g.name + ": the denominator check needs Δ = 0 (a single Dynkin diagram)");
    }
  }
  const int N = g.half_period_length();
  const auto traj = run_belt(g, N, opts);
  DenominatorCheck r;
  for (const auto& v : layer_values(g, traj, 0, N)) r.d_vectors.push_back(denominator_vector(v));
  std::sort(r.d_vectors.begin(), r.d_vectors.end());
  const std::size_t n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> neg(n, 0);
    neg[i] = -1;
    r.expected.push_back(neg);
  }
  for (auto& root : positive_roots(g.gamma)) r.expected.push_back(root);
  std::sort(r.expected.begin(), r.expected.end());
  r.matches = r.d_vectors == r.expected;
  return r;
}

}  // namespace zamobelt
