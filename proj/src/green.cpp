#include "zamobelt/green.hpp"

#include <algorithm>

namespace zamobelt {

namespace {

std::string vertex_label(std::size_t k) { return std::to_string(k + 1); }

FramedState with_frozen(const IntMatrix& b, std::int64_t sign) {
  if (!b.square()) throw Error(ErrorCode::invalid_input, "exchange matrix must be square");
  const std::size_t n = b.rows();
  IntMatrix ext(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ext(i, j) = b(i, j);
    ext(i, n + i) = sign;
  }
  return FramedState::from_extended(std::move(ext));
}

// Row i of m is sign * e_p(i) with p a permutation.
std::optional<std::vector<int>> signed_permutation(const IntMatrix& m, std::int64_t sign) {
  const std::size_t n = m.rows();
  std::vector<int> perm(n, -1);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = m(i, j);
      if (v == 0) continue;
      if (v != sign || perm[i] != -1 || hit[j]) return std::nullopt;
      perm[i] = static_cast<int>(j);
      hit[j] = true;
    }
    if (perm[i] == -1) return std::nullopt;
  }
  return perm;
}

Partition component_partition(const std::vector<Component>& comps) {
  Partition p;
  for (const auto& c : comps) p.push_back(c.vertices);
  return p;
}

}  // namespace

FramedState FramedState::framed(const IntMatrix& b) { return with_frozen(b, 1); }
FramedState FramedState::coframed(const IntMatrix& b) { return with_frozen(b, -1); }

FramedState FramedState::from_extended(IntMatrix ext) {
  if (ext.cols() != 2 * ext.rows()) {
    throw Error(ErrorCode::invalid_input, "framed matrix must be n x 2n");
  }
  FramedState s;
  s.ext_ = std::move(ext);
  return s;
}

IntMatrix FramedState::mutable_part() const {
  const std::size_t n = size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ext_(i, j);
  return m;
}

IntMatrix FramedState::c_matrix() const {
  const std::size_t n = size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ext_(i, n + j);
  return m;
}

std::vector<std::int64_t> FramedState::c_vector(std::size_t i) const {
  const std::size_t n = size();
  std::vector<std::int64_t> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = ext_(i, n + j);
  return v;
}

FramedState mutate_framed(const FramedState& s, std::size_t k) {
  if (k >= s.size()) {
    throw Error(ErrorCode::frozen_vertex, "vertex " + vertex_label(k) + " is frozen");
  }
  FramedState next;
  next.ext_ = mutate(s.ext_, k);
  next.history_ = s.history_;
  next.history_.push_back(static_cast<int>(k));
  for (std::size_t i = 0; i < next.size(); ++i) {
    const auto c = next.c_vector(i);
    const bool pos = std::any_of(c.begin(), c.end(), [](auto v) { return v > 0; });
    const bool neg = std::any_of(c.begin(), c.end(), [](auto v) { return v < 0; });
    if (pos && neg) {
      throw Error(ErrorCode::sign_coherence_violation,
                  "c-vector of vertex " + vertex_label(i) + " has mixed signs after mutating " +
                      vertex_label(k));
    }
  }
  return next;
}

VertexStatus vertex_status(const FramedState& s, std::size_t k) {
  if (k >= s.size()) throw Error(ErrorCode::frozen_vertex, "vertex " + vertex_label(k));
  const auto c = s.c_vector(k);
  const bool pos = std::any_of(c.begin(), c.end(), [](auto v) { return v > 0; });
  const bool neg = std::any_of(c.begin(), c.end(), [](auto v) { return v < 0; });
  if (pos == neg) {
    throw Error(ErrorCode::sign_coherence_violation,
                "c-vector of vertex " + vertex_label(k) + " is neither positive nor negative");
  }
  return pos ? VertexStatus::green : VertexStatus::red;
}

bool is_component_preserving(const FramedState& s, const Partition& partition, std::size_t k) {
  const std::size_t n = s.size();
  std::vector<int> part_of(n, -1);
  for (std::size_t p = 0; p < partition.size(); ++p) {
    for (int v : partition[p]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || part_of[static_cast<std::size_t>(v)] != -1) {
        throw Error(ErrorCode::invalid_input, "partition is not a set partition of the vertices");
      }
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
    }
  }
  if (std::count(part_of.begin(), part_of.end(), -1) != 0) {
    throw Error(ErrorCode::invalid_input, "partition misses a vertex");
  }
  const bool green = vertex_status(s, k) == VertexStatus::green;
  const auto& ext = s.extended();
  for (std::size_t j = 0; j < n; ++j) {
    const auto b = ext(k, j);
    const bool outgoing_edge = green ? b < 0 : b > 0;
    if (outgoing_edge && part_of[j] != part_of[k]) return false;
  }
  return true;
}

IntMatrix restrict_to_part(const IntMatrix& ext, const std::vector<int>& part) {
  const auto n = static_cast<int>(ext.rows());
  std::vector<int> cols = part;
  for (int v : part) cols.push_back(n + v);
  return ext.submatrix(part, cols);
}

IntMatrix green_orientation(const Bigraph& g) { return g.base.matrix().negated(); }

void require_green_orientation(const IntMatrix& oriented, const Bigraph& g) {
  if (oriented.rows() != g.size() || !oriented.square()) {
    throw Error(ErrorCode::arity_mismatch, "oriented matrix size");
  }
  for (int w : g.coloring.vertices(Color::white)) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      const auto ww = static_cast<std::size_t>(w);
      if (g.gamma(ww, k) != 0 && oriented(ww, k) >= 0) {
        throw Error(ErrorCode::invalid_input, "white vertex " + vertex_label(ww) +
                                                  " is not a Γ sink towards " + vertex_label(k));
      }
      if (g.delta(ww, k) != 0 && oriented(ww, k) <= 0) {
        throw Error(ErrorCode::invalid_input, "white vertex " + vertex_label(ww) +
                                                  " is not a Δ source towards " + vertex_label(k));
      }
    }
  }
}

TropicalCoefficients::TropicalCoefficients(const IntMatrix& exchange, int sign)
    : exchange_(exchange) {
  const std::size_t n = exchange.rows();
  y_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) y_[i][i] = sign;
}

void TropicalCoefficients::mutate(std::size_t k) {
  const std::size_t n = y_.size();
  auto next = y_;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) {
      for (auto& v : next[i]) v = -v;
      continue;
    }
    const auto b = exchange_(k, i);
    for (std::size_t j = 0; j < n; ++j) {
      const auto yk = y_[k][j];
      next[i][j] = y_[i][j] + std::max<std::int64_t>(0, b) * yk - b * std::min<std::int64_t>(0, yk);
    }
  }
  y_ = std::move(next);
  exchange_ = zamobelt::mutate(exchange_, k);
}

GreenCertificate certify_belt_sequence(const Bigraph& g, Color first, int factors) {
  if (!is_recurrent(g)) throw Error(ErrorCode::not_recurrent, g.name);
  const IntMatrix oriented = green_orientation(g);
  require_green_orientation(oriented, g);
  const Partition parts = component_partition(first == Color::white ? g.gamma_components
                                                                     : g.delta_components);
  FramedState state = FramedState::framed(oriented);
  TropicalCoefficients coeffs(oriented.transposed(), 1);
  GreenCertificate cert;
  cert.factors = factors;
  Color color = first;
  for (int f = 0; f < factors; ++f, color = opposite(color)) {
    for (int v : g.coloring.vertices(color)) {
      const auto k = static_cast<std::size_t>(v);
      const std::string where = g.name + ": factor " + std::to_string(f + 1) + ", vertex " +
                                vertex_label(k);
      if (vertex_status(state, k) != VertexStatus::green) {
        throw Error(ErrorCode::not_green_at_step, where);
      }
      if (!is_component_preserving(state, parts, k)) {
        throw Error(ErrorCode::not_component_preserving, where);
      }
      FramedState next = mutate_framed(state, k);
      for (const auto& part : parts) {
        const IntMatrix before = restrict_to_part(state.extended(), part);
        const IntMatrix after = restrict_to_part(next.extended(), part);
        const auto pos = std::find(part.begin(), part.end(), v);
        const IntMatrix expected =
            pos == part.end() ? before
                              : mutate(before, static_cast<std::size_t>(pos - part.begin()));
        if (after != expected) {
          throw Error(ErrorCode::not_component_preserving,
                      where + ": mutation does not commute with restriction");
        }
      }
      coeffs.mutate(k);
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (coeffs.exponents()[i] != next.c_vector(i)) {
          throw Error(ErrorCode::separation_mismatch,
                      where + ": c-vector of " + vertex_label(i) +
                          " differs from the coefficient exponent");
        }
      }
      state = std::move(next);
      cert.sequence.push_back(v);
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (vertex_status(state, i) != VertexStatus::red) {
      throw Error(ErrorCode::not_maximal,
                  g.name + ": vertex " + vertex_label(i) + " is still green at the end");
    }
  }
  cert.final_c = state.c_matrix();
  const auto perm = signed_permutation(cert.final_c, -1);
  if (!perm) {
    throw Error(ErrorCode::not_permutation, g.name + ": -C = -" + to_string(cert.final_c));
  }
  cert.permutation = Automorphism{*perm, AutomorphismKind::general};
  return cert;
}

std::pair<GreenCertificate, GreenCertificate> verify_bipartite_belt_mgs(const Bigraph& g) {
  const auto hg = g.h_gamma();
  const auto hd = g.h_delta();
  if (!hg || !hd) throw Error(ErrorCode::not_admissible, g.name + ": Coxeter numbers undefined");
  return {certify_belt_sequence(g, Color::white, *hg),
          certify_belt_sequence(g, Color::black, *hd)};
}

Automorphism coframed_permutation(const Bigraph& g) {
  if (!is_recurrent(g)) throw Error(ErrorCode::not_recurrent, g.name);
  const int N = g.half_period_length();
  FramedState state = FramedState::coframed(g.base.matrix());
  Color color = Color::white;
  for (int f = 0; f < N; ++f, color = opposite(color)) {
    for (int v : g.coloring.vertices(color)) state = mutate_framed(state, static_cast<std::size_t>(v));
  }
  const auto perm = signed_permutation(state.c_matrix(), -1);
  if (!perm) {
    throw Error(ErrorCode::no_isomorphism,
                g.name + ": frozen block " + to_string(state.c_matrix()) + " is not a permutation");
  }
  const auto& b = g.base.matrix();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto si = static_cast<std::size_t>((*perm)[i]);
      const auto sj = static_cast<std::size_t>((*perm)[j]);
      if (state.extended()(i, j) != b(si, sj)) {
        throw Error(ErrorCode::no_isomorphism,
                    g.name + ": mutable block is not B relabeled by the frozen permutation");
      }
    }
  }
  Automorphism a{*perm, AutomorphismKind::general};
  if (preserves_coloring(g, a.perm)) a.kind = AutomorphismKind::color_preserving;
  else if (reverses_coloring(g, a.perm)) a.kind = AutomorphismKind::color_reversing;
  return a;
}

Automorphism frozen_isomorphism_check(const Bigraph& g, const Automorphism& symbolic_sigma) {
  Automorphism a = coframed_permutation(g);
  if (a.perm != symbolic_sigma.perm) {
    throw Error(ErrorCode::mismatch_with_symbolic_sigma,
                g.name + ": frozen isomorphism " + a.cycles() + " vs symbolic σ " +
                    symbolic_sigma.cycles());
  }
  return a;
}

Automorphism frozen_isomorphism_check(const Bigraph& g, const BeltOptions& opts) {
  return frozen_isomorphism_check(g, half_period(g, opts).sigma);
}

}  // namespace zamobelt
