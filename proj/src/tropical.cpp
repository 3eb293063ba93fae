#include "zamobelt/tropical.hpp"

#include <algorithm>

namespace zamobelt {

Labeling Labeling::constant(std::size_t n, const mpq_class& value) {
  return Labeling{std::vector<mpq_class>(n, value)};
}

Labeling Labeling::basis(std::size_t n, std::size_t j) {
  Labeling l = constant(n, 0);
  l.lambda.at(j) = 1;
  return l;
}

Labeling Labeling::random(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> denom(1, 100);
  Labeling l;
  for (std::size_t i = 0; i < n; ++i) {
    const int d = denom(rng);
    std::uniform_int_distribution<int> num(-10 * d, 10 * d);
    mpq_class q(mpz_class(num(rng)), mpz_class(d));
    q.canonicalize();
    l.lambda.push_back(q);
  }
  return l;
}

Labeling Labeling::perturbed_negative(std::size_t n) {
  Labeling l;
  const auto nn = static_cast<long>(n * n);
  for (std::size_t i = 1; i <= n; ++i) {
    mpq_class q(mpz_class(static_cast<long>(i)), mpz_class(100 * nn));
    q.canonicalize();
    l.lambda.push_back(-1 - q);
  }
  return l;
}

std::string Labeling::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ", ";
    out += lambda[i].get_str();
  }
  return out + "]";
}

const char* to_string(EventColor c) {
  switch (c) {
    case EventColor::gamma_red: return "red";
    case EventColor::delta_blue: return "blue";
    case EventColor::tie: return "tie";
  }
  return "?";
}

TropicalTrajectory::TropicalTrajectory(const Bigraph& g, Labeling labeling)
    : g_(&g), labeling_(std::move(labeling)) {
  if (labeling_.size() != g.size()) {
    throw Error(ErrorCode::arity_mismatch, "labeling has " + std::to_string(labeling_.size()) +
                                               " entries for " + std::to_string(g.size()) +
                                               " vertices");
  }
  if (!is_recurrent(g)) throw Error(ErrorCode::not_recurrent, g.name);
  states_.push_back(labeling_.lambda);
}

void TropicalTrajectory::step() {
  const int s = steps();
  const auto& prev = states_.back();
  std::vector<mpq_class> next = prev;
  const std::size_t n = g_->size();
  const Color color = active_color(s);
  for (int k : g_->coloring.vertices(color)) {
    const auto kk = static_cast<std::size_t>(k);
    MutationEvent ev;
    ev.t = s + 1;
    ev.k = k;
    for (std::size_t i = 0; i < n; ++i) {
      if (g_->gamma(i, kk) != 0) ev.gamma_sum += prev[i] * g_->gamma(i, kk);
      if (g_->delta(i, kk) != 0) ev.delta_sum += prev[i] * g_->delta(i, kk);
    }
    if (ev.gamma_sum > ev.delta_sum) {
      ev.color = EventColor::gamma_red;
    } else if (ev.delta_sum > ev.gamma_sum) {
      ev.color = EventColor::delta_blue;
    } else {
      ev.color = EventColor::tie;
    }
    next[kk] = std::max(ev.gamma_sum, ev.delta_sum) - prev[kk];
    events_.push_back(std::move(ev));
  }
  states_.push_back(std::move(next));
}

void TropicalTrajectory::run_to(int step_count) {
  while (steps() < step_count) step();
}

const mpq_class& TropicalTrajectory::value(std::size_t k, int tau) const {
  if (tau < 0 || tau % 2 != g_->coloring.eta(k)) {
    throw Error(ErrorCode::invalid_input, "t_" + std::to_string(k + 1) + "(" +
                                              std::to_string(tau) + ") has the wrong parity");
  }
  const int s = std::max(tau - 1, 0);
  if (s > steps()) throw Error(ErrorCode::invalid_input, "time not computed yet");
  return states_[static_cast<std::size_t>(s)][k];
}

std::optional<int> tropical_period(const Bigraph& g, const Labeling& labeling, int max_steps) {
  TropicalTrajectory traj(g, labeling);
  for (int s = 1; s <= max_steps; ++s) {
    traj.step();
    if (s % 2 == 0 && traj.states().back() == traj.states().front()) return s;
  }
  return std::nullopt;
}

bool tropical_half_period(const Bigraph& g, const Labeling& labeling, const Automorphism& sigma) {
  const int N = g.half_period_length();
  TropicalTrajectory traj(g, labeling);
  traj.run_to(3 * N);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto si = static_cast<std::size_t>(sigma.perm.at(i));
    for (int t = 0; t < 2 * N; ++t) {
      if (t % 2 != g.coloring.eta(si)) continue;
      if ((t + N) % 2 != g.coloring.eta(i)) return false;
      if (traj.value(i, t + N) != traj.value(si, t)) return false;
    }
  }
  return true;
}

bool dual_transfer_check(const Bigraph& g, const Labeling& labeling, std::optional<int> steps) {
  const Bigraph dual =
      decompose(langlands_dual(g.base), g.coloring, g.name + "^dual");
  const auto& c = g.base.symmetrizer();
  Labeling scaled = labeling;
  for (std::size_t i = 0; i < g.size(); ++i) scaled.lambda[i] *= c[i];
  const int count = steps ? *steps : (g.admissible() ? 2 * g.half_period_length() : 60);
  TropicalTrajectory original(g, scaled);
  TropicalTrajectory transferred(dual, labeling);
  original.run_to(count);
  transferred.run_to(count);
  for (int s = 0; s <= count; ++s) {
    const auto& a = original.states()[static_cast<std::size_t>(s)];
    const auto& b = transferred.states()[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (b[i] * c[i] != a[i]) return false;
    }
  }
  return true;
}

ColoredCensus colored_census_once(const Bigraph& g, const Labeling& labeling) {
  const int N = g.half_period_length();
  ColoredCensus r;
  r.labeling = labeling;
  r.period_steps = 2 * N;
  TropicalTrajectory traj(g, labeling);
  traj.run_to(2 * N);
  const std::set<int> allowed{0, 1, N % (2 * N), (N + 1) % (2 * N)};
  r.blue_only_at_clusters = true;
  for (const auto& ev : traj.events()) {
    switch (ev.color) {
      case EventColor::gamma_red: ++r.red; break;
      case EventColor::tie: ++r.ties; break;
      case EventColor::delta_blue: {
        ++r.blue;
        const int t = ev.t % (2 * N);
        r.blue_times.insert(t);
        if (!allowed.count(t)) r.blue_only_at_clusters = false;
        break;
      }
    }
  }
  return r;
}

ColoredCensusResult colored_census(const Bigraph& g, std::optional<Labeling> labeling) {
  ColoredCensusResult r;
  if (labeling) {
    r.primary = colored_census_once(g, *labeling);
    return r;
  }
  r.primary = colored_census_once(g, Labeling::constant(g.size(), -1));
  if (r.primary.ties > 0) r.rerun = colored_census_once(g, Labeling::perturbed_negative(g.size()));
  return r;
}

bool tropicalization_matches(const Bigraph& g, const std::vector<BeltState>& trajectory,
                             const Labeling& labeling) {
  TropicalTrajectory trop(g, labeling);
  trop.run_to(static_cast<int>(trajectory.size()) - 1);
  for (std::size_t s = 0; s < trajectory.size(); ++s) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (tropical_evaluate(trajectory[s].values[k], labeling.lambda) != trop.states()[s][k]) {
        return false;
      }
    }
  }
  return true;
}

std::string DegreeConvention::description() const {
  if (max_matches && min_matches) {
    return "t^{delta_j} = deg_max_j and t^{-delta_j} = -deg_min_j";
  }
  if (max_matches) return "t^{delta_j} = deg_max_j only";
  if (min_matches) return "t^{-delta_j} = -deg_min_j only";
  return "no match";
}

DegreeConvention verify_degree_convention(const Bigraph& g,
                                          const std::vector<BeltState>& trajectory) {
  DegreeConvention r{true, true};
  const std::size_t n = g.size();
  const int last = static_cast<int>(trajectory.size()) - 1;
  for (std::size_t j = 0; j < n; ++j) {
    TropicalTrajectory up(g, Labeling::basis(n, j));
    Labeling neg = Labeling::basis(n, j);
    neg.lambda[j] = -1;
    TropicalTrajectory down(g, neg);
    up.run_to(last);
    down.run_to(last);
    for (std::size_t s = 0; s < trajectory.size(); ++s) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto p = degree_profile(trajectory[s].values[k]);
        if (up.states()[s][k] != p.deg_max(j)) r.max_matches = false;
        if (down.states()[s][k] != -p.deg_min(j)) r.min_matches = false;
      }
    }
  }
  return r;
}

}  // namespace zamobelt
