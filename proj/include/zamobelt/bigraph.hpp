#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zamobelt/dynkin.hpp"
#include "zamobelt/matrix.hpp"

namespace zamobelt {

/// Skew-symmetrizable integer matrix B together with its symmetrizer c,
/// c_i b_ij = -c_j b_ji. The symmetrizer is normalized so that the smallest
/// entry of every connected component is 1.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;

  /// Computes the symmetrizer; throws not_skew_symmetrizable if none exists.
  explicit ExchangeMatrix(IntMatrix b);

  std::size_t size() const noexcept { return b_.rows(); }
  const IntMatrix& matrix() const noexcept { return b_; }
  const std::vector<mpq_class>& symmetrizer() const noexcept { return c_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return b_(i, j); }

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) {
    return a.b_ == b.b_;
  }

 private:
  IntMatrix b_;
  std::vector<mpq_class> c_;
};

/// Single matrix mutation at k (0-based). Works on any rectangular matrix
/// whose first rows() columns form the mutable square block, so it also
/// serves framed n x 2n extensions.
IntMatrix mutate(const IntMatrix& b, std::size_t k);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k);

/// Langlands dual -B^T with its own symmetrizer.
ExchangeMatrix langlands_dual(const ExchangeMatrix& m);

enum class Color { white, black };

inline Color opposite(Color c) { return c == Color::white ? Color::black : Color::white; }

class Bipartition {
 public:
  Bipartition() = default;
  explicit Bipartition(std::vector<Color> epsilon) : epsilon_(std::move(epsilon)) {}

  /// Proper 2-coloring of the support graph of b, lowest vertex of each
  /// connected component white. Throws not_bipartite.
  static Bipartition detect(const IntMatrix& b);

  std::size_t size() const noexcept { return epsilon_.size(); }
  Color operator[](std::size_t i) const { return epsilon_[i]; }
  const std::vector<Color>& colors() const noexcept { return epsilon_; }
  /// 0 for white, 1 for black.
  int eta(std::size_t i) const { return epsilon_[i] == Color::white ? 0 : 1; }
  std::vector<int> vertices(Color c) const;
  Bipartition swapped() const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  std::vector<Color> epsilon_;
};

/// A connected component of Γ or Δ with its recognized type.
struct Component {
  std::vector<int> vertices;
  DynkinType type;
  std::optional<int> coxeter;
};

/// Bipartite exchange matrix split into its unsigned Γ (red) and Δ (blue)
/// parts. Γ collects b_ij > 0 with i white, j black (and the mirrored
/// negative entries); Δ the opposite orientation.
struct Bigraph {
  std::string name;
  ExchangeMatrix base;
  Bipartition coloring;
  IntMatrix gamma;
  IntMatrix delta;
  std::vector<Component> gamma_components;
  std::vector<Component> delta_components;

  std::size_t size() const noexcept { return base.size(); }

  /// Common Coxeter number of all Γ (resp. Δ) components, or nullopt when a
  /// component is unknown or the components disagree.
  std::optional<int> h_gamma() const;
  std::optional<int> h_delta() const;
  bool admissible() const { return h_gamma() && h_delta(); }
  /// h_Γ + h_Δ; throws not_admissible when undefined.
  int half_period_length() const;
};

Bigraph decompose(const ExchangeMatrix& m, std::optional<Bipartition> coloring = {},
                  std::string name = {});

/// Inverse of the Γ/Δ split: rebuilds b from (ε, Γ, Δ).
IntMatrix recompose(const Bipartition& coloring, const IntMatrix& gamma,
                    const IntMatrix& delta);

/// Applies μ∘ (all white vertices) or μ• to a square matrix.
IntMatrix mutate_color(const IntMatrix& b, const Bipartition& coloring, Color color);

bool is_recurrent(const Bigraph& g);

/// Γ = lhs within each rhs fiber, Δ = rhs within each lhs fiber. Vertex
/// (a, u) has 0-based index u * rank(lhs) + a.
Bigraph tensor_product(const DynkinType& lhs, const DynkinType& rhs);

enum class AutomorphismKind { general, bicolored, color_preserving, color_reversing };

struct Automorphism {
  std::vector<int> perm;  // 0-based images
  AutomorphismKind kind = AutomorphismKind::general;

  static Automorphism identity(std::size_t n);

  bool is_identity() const;
  int order() const;
  Automorphism compose(const Automorphism& after) const;  // after ∘ this
  /// Cycle notation with 1-based labels, "()" for the identity.
  std::string cycles() const;
  static Automorphism from_cycles(std::size_t n, const std::string& text);

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.perm == b.perm;
  }
};

/// Γ and Δ are both invariant under σ.
bool preserves_gamma_delta(const Bigraph& g, const std::vector<int>& perm);
bool preserves_coloring(const Bigraph& g, const std::vector<int>& perm);
bool reverses_coloring(const Bigraph& g, const std::vector<int>& perm);
/// Conditions (i)-(iv) of a bicolored automorphism.
bool is_bicolored(const Bigraph& g, const std::vector<int>& perm);

enum class AutomorphismFilter { all, color_preserving, color_reversing, bicolored };

/// Exhaustive search of permutations preserving Γ and Δ. Sorted
/// lexicographically by image vector, identity included when it passes the
/// filter. Throws search_bound_exceeded when size() > bound.
std::vector<Automorphism> find_automorphisms(const Bigraph& g,
                                             AutomorphismFilter filter,
                                             std::size_t bound = 16);

/// Orbits of a permutation, each sorted, ordered by smallest element.
std::vector<std::vector<int>> orbits(const std::vector<int>& perm);

/// Folds a matrix along the orbits of f: b'_IJ = Σ_{i∈I} b_ij for any j ∈ J.
/// Throws not_admissible naming the failed condition, or orbit_adjacency.
ExchangeMatrix fold(const ExchangeMatrix& m, const std::vector<int>& perm);

/// Bigraph-level fold: f must be bicolored, ε is inherited by orbits.
Bigraph fold(const Bigraph& g, const Automorphism& f);

}  // namespace zamobelt
