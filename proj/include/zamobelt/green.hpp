#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zamobelt/belt.hpp"
#include "zamobelt/bigraph.hpp"
#include "zamobelt/matrix.hpp"

namespace zamobelt {

enum class VertexStatus { green, red };

/// n x 2n extension [B | C]. Row i of the frozen block is the c-vector of
/// mutable vertex i. Sign-coherence is asserted after every mutation.
class FramedState {
 public:
  static FramedState framed(const IntMatrix& b);    // [B  I]
  static FramedState coframed(const IntMatrix& b);  // [B -I]
  static FramedState from_extended(IntMatrix ext);

  std::size_t size() const noexcept { return ext_.rows(); }
  const IntMatrix& extended() const noexcept { return ext_; }
  IntMatrix mutable_part() const;
  IntMatrix c_matrix() const;
  std::vector<std::int64_t> c_vector(std::size_t i) const;
  const std::vector<int>& history() const noexcept { return history_; }

  friend bool operator==(const FramedState& a, const FramedState& b) {
    return a.ext_ == b.ext_;
  }

 private:
  IntMatrix ext_;
  std::vector<int> history_;
  friend FramedState mutate_framed(const FramedState& s, std::size_t k);
};

/// Throws frozen_vertex for k ≥ n and sign_coherence_violation if the result
/// has a mixed-sign c-vector.
FramedState mutate_framed(const FramedState& s, std::size_t k);

VertexStatus vertex_status(const FramedState& s, std::size_t k);

using Partition = std::vector<std::vector<int>>;

/// Component preserving test. Throws invalid_input when the partition does not
/// cover every mutable vertex exactly once.
bool is_component_preserving(const FramedState& s, const Partition& partition,
                             std::size_t k);

/// Framed block of one part: rows = part, columns = part ∪ part'.
IntMatrix restrict_to_part(const IntMatrix& ext, const std::vector<int>& part);

struct GreenCertificate {
  std::vector<int> sequence;  // 0-based vertices in mutation order
  int factors = 0;
  IntMatrix final_c;
  std::optional<Automorphism> permutation;  // -C = P, row i = e_perm(i)
};

/// Oriented matrix used for framing: white vertices are sinks of Γ and
/// sources of Δ. Equals -B for the matrix of the bigraph.
IntMatrix green_orientation(const Bigraph& g);

/// Checks the orientation rule for the Γ/Δ edges of g on an explicitly given
/// matrix; throws invalid_input when an edge points the wrong way.
void require_green_orientation(const IntMatrix& oriented, const Bigraph& g);

/// Certifies μ∘μ•μ∘⋯ (h_Γ factors) and μ•μ∘μ•⋯ (h_Δ factors) as maximal green
/// sequences of the framed oriented matrix. Every step is also checked for
/// component preservation (Γ components for the first sequence, Δ components
/// for the second), commutation with restriction to the parts, and agreement
/// of the C-matrix rows with an independent tropical coefficient iteration.
std::pair<GreenCertificate, GreenCertificate> verify_bipartite_belt_mgs(const Bigraph& g);

/// Certifies a single alternating sequence starting with `first`.
GreenCertificate certify_belt_sequence(const Bigraph& g, Color first, int factors);

/// Applies N = h_Γ + h_Δ bipartite factors (white first) to the coframed
/// matrix of B and reads off the frozen isomorphism. Throws no_isomorphism.
Automorphism coframed_permutation(const Bigraph& g);

/// coframed_permutation, additionally required to equal the symbolic σ.
/// Throws mismatch_with_symbolic_sigma.
Automorphism frozen_isomorphism_check(const Bigraph& g, const BeltOptions& opts = {});
Automorphism frozen_isomorphism_check(const Bigraph& g, const Automorphism& symbolic_sigma);

/// Tropical-semifield coefficient iteration: exponent vectors of principal
/// coefficients under the coefficient mutation rule, driven by its own
/// exchange matrix. Starts at y_i = y^{±e_i}.
class TropicalCoefficients {
 public:
  TropicalCoefficients(const IntMatrix& exchange, int sign);
  void mutate(std::size_t k);
  const std::vector<std::vector<std::int64_t>>& exponents() const noexcept { return y_; }

 private:
  IntMatrix exchange_;
  std::vector<std::vector<std::int64_t>> y_;
};

}  // namespace zamobelt
