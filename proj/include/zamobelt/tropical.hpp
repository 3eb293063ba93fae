#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zamobelt/belt.hpp"
#include "zamobelt/bigraph.hpp"

namespace zamobelt {

struct Labeling {
  std::vector<mpq_class> lambda;

  static Labeling constant(std::size_t n, const mpq_class& value);
  /// δ_j: 1 at j, 0 elsewhere.
  static Labeling basis(std::size_t n, std::size_t j);
  /// Entries uniform in [-10, 10] with denominators in 1..100.
  static Labeling random(std::size_t n, std::mt19937_64& rng);
  /// λ_i = -1 - i/(100 n^2), i 1-based. Breaks ties of the all -1 labeling.
  static Labeling perturbed_negative(std::size_t n);

  std::size_t size() const noexcept { return lambda.size(); }
  std::string to_string() const;
};

enum class EventColor { gamma_red, delta_blue, tie };
const char* to_string(EventColor c);

struct MutationEvent {
  int t = 0;  // time of the input layer: t_k(t+1) + t_k(t-1) = max(..(t))
  int k = 0;
  EventColor color = EventColor::tie;
  mpq_class gamma_sum;
  mpq_class delta_sum;
};

/// Max-plus T-system. Shares the step bookkeeping of BeltState: states()[s]
/// holds, for each k, the value at the latest time ≤ s + 1 of parity η_k.
class TropicalTrajectory {
 public:
  TropicalTrajectory(const Bigraph& g, Labeling labeling);

  void step();
  void run_to(int step);

  int steps() const noexcept { return static_cast<int>(states_.size()) - 1; }
  const std::vector<std::vector<mpq_class>>& states() const noexcept { return states_; }
  const std::vector<MutationEvent>& events() const noexcept { return events_; }
  const Labeling& labeling() const noexcept { return labeling_; }

  /// t_k(τ); τ must have parity η_k and be computed already.
  const mpq_class& value(std::size_t k, int tau) const;

 private:
  const Bigraph* g_;
  Labeling labeling_;
  std::vector<std::vector<mpq_class>> states_;
  std::vector<MutationEvent> events_;
};

/// Smallest even p ≤ max_steps with state(p) == state(0).
std::optional<int> tropical_period(const Bigraph& g, const Labeling& labeling,
                                   int max_steps);

/// t_i(t + N) == t_σ(i)(t) for all i and all t in one period [0, 2N).
bool tropical_half_period(const Bigraph& g, const Labeling& labeling,
                          const Automorphism& sigma);

/// Checks t'_i(t) = t_i^{λ̃}(t) / c_i with λ̃_i = c_i λ_i, where t' is the
/// system of the Langlands dual -B^T (same coloring) and c the symmetrizer
/// of B, over `steps` steps (default 2N, or 60 when N is undefined).
bool dual_transfer_check(const Bigraph& g, const Labeling& labeling,
                         std::optional<int> steps = {});

struct ColoredCensus {
  Labeling labeling;
  int period_steps = 0;  // 2N
  int red = 0;
  int blue = 0;
  int ties = 0;
  std::set<int> blue_times;  // input-layer times mod 2N
  bool blue_only_at_clusters = false;  // blue_times ⊆ {0, 1, N, N+1}
};

struct ColoredCensusResult {
  ColoredCensus primary;
  /// Present only when the primary run hit a tie; uses perturbed_negative.
  std::optional<ColoredCensus> rerun;
};

/// Counts Γ/Δ mutations over one period 2N. Without a labeling the default
/// all -1 labeling is used and ties trigger the perturbed rerun.
ColoredCensusResult colored_census(const Bigraph& g,
                                   std::optional<Labeling> labeling = {});
ColoredCensus colored_census_once(const Bigraph& g, const Labeling& labeling);

/// Tropicalization agrees with the symbolic run: t^λ_k(τ) equals the max of
/// <e, λ> over the terms of T_k(τ) at every state of the trajectory.
bool tropicalization_matches(const Bigraph& g, const std::vector<BeltState>& trajectory,
                             const Labeling& labeling);

struct DegreeConvention {
  bool max_matches = false;  // t^{δ_j}_k(τ) == deg_max(j, T_k(τ))
  bool min_matches = false;  // t^{-δ_j}_k(τ) == -deg_min(j, T_k(τ))
  std::string description() const;
};

/// Empirically fixes how basis labelings read degrees of cluster variables.
DegreeConvention verify_degree_convention(const Bigraph& g,
                                          const std::vector<BeltState>& trajectory);

}  // namespace zamobelt
