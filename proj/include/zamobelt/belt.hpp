#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zamobelt/bigraph.hpp"
#include "zamobelt/laurent.hpp"

namespace zamobelt {

struct BeltOptions {
  std::size_t term_guard = kDefaultTermGuard;
  /// Upper bound on belt steps for period searches.
  int max_steps = 400;
};

/// Snapshot of the T-system after `step` belt mutations. Entry k holds
/// T_k(τ) for the largest τ ≤ step + 1 with τ ≡ η_k (mod 2), so step 0 is the
/// initial cluster T_white(0) = T_black(1) = x. Step s mutates the white
/// vertices when s is even and the black ones when s is odd.
struct BeltState {
  int step = 0;
  std::vector<LaurentPoly> values;

  /// T-system time of entry k.
  int layer_time(std::size_t k, const Bipartition& coloring) const;
  /// "x1, x2" style rendering of the cluster.
  std::string render() const;

  friend bool operator==(const BeltState& a, const BeltState& b) {
    return a.values == b.values;
  }
};

/// Color mutated by belt step s.
inline Color active_color(int step) { return step % 2 == 0 ? Color::white : Color::black; }

BeltState initial_state(const Bigraph& g);

/// One belt step. Every division must be exact (Laurent phenomenon) and every
/// new variable subtraction-free; violations throw.
BeltState step_belt(const Bigraph& g, const BeltState& s, const BeltOptions& opts = {});

/// Trajectory of length steps + 1 starting from the initial cluster.
std::vector<BeltState> run_belt(const Bigraph& g, int steps, const BeltOptions& opts = {});

/// Smallest even p ≤ max_steps with state(p) == state(0).
std::optional<int> detect_period(const Bigraph& g, int max_steps,
                                 const BeltOptions& opts = {});

enum class ColorBehavior { preserving, reversing };
const char* to_string(ColorBehavior b);

struct HalfPeriodReport {
  int N = 0;
  Automorphism sigma;
  ColorBehavior color_behavior = ColorBehavior::preserving;
  int order = 1;
  bool identity = true;
};

/// Runs N = h_Γ + h_Δ steps and reads σ off the cluster: state(N)_i = x_σ(i).
/// Throws no_permutation_match (including scalar multiples), not_automorphism,
/// order_exceeds_two or color_parity_mismatch when the result contradicts
/// half-periodicity, not_admissible when N is undefined.
HalfPeriodReport half_period(const Bigraph& g, const BeltOptions& opts = {});

/// Same, reusing an already computed trajectory (needs at least N + 1 states).
HalfPeriodReport half_period(const Bigraph& g, const std::vector<BeltState>& trajectory);

/// All T_k(τ) with τ in [from, to) and valid parity, in (τ, k) order.
std::vector<LaurentPoly> layer_values(const Bigraph& g,
                                      const std::vector<BeltState>& trajectory,
                                      int from, int to);

struct CensusEntry {
  LaurentPoly variable;
  int count = 0;
};

/// Distinct cluster variables over one full period 2N with multiplicities,
/// sorted by canonical rendering.
std::vector<CensusEntry> cluster_variable_census(const Bigraph& g,
                                                 const BeltOptions& opts = {});

struct DenominatorCheck {
  bool matches = false;
  std::vector<std::vector<int>> d_vectors;  // over the half period, sorted
  std::vector<std::vector<int>> expected;   // negative simples ∪ positive roots
};

/// Compares the d-vectors of the half-period cluster variables with the almost
/// positive roots of the Cartan matrix 2I - Γ.
DenominatorCheck denominator_bijection_check(const Bigraph& g,
                                             const BeltOptions& opts = {});

}  // namespace zamobelt
