#include "zamobelt/bigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "zamobelt/error.hpp"

namespace zamobelt {

namespace {

std::vector<std::vector<int>> support_components(const IntMatrix& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = static_cast<int>(out.size());
    out.push_back({s});
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < n; ++w) {
        if (comp[w] == -1 && (m(v, w) != 0 || m(w, v) != 0)) {
          comp[w] = comp[s];
          out.back().push_back(w);
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<Component> typed_components(const IntMatrix& unsigned_part) {
  std::vector<Component> out;
  for (auto& verts : support_components(unsigned_part)) {
    Component c;
    c.type = recognize_dynkin(unsigned_part.submatrix(verts, verts));
    c.coxeter = coxeter_number(c.type);
    c.vertices = std::move(verts);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<int> common_coxeter(const std::vector<Component>& comps) {
  std::optional<int> h;
  for (const auto& c : comps) {
    if (!c.coxeter) return std::nullopt;
    if (h && *h != *c.coxeter) return std::nullopt;
    h = c.coxeter;
  }
  return h;
}

void check_square(const IntMatrix& b) {
  if (!b.square()) throw Error(ErrorCode::invalid_input, "exchange matrix must be square");
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  check_square(b_);
  const std::size_t n = b_.rows();
  for (std::size_t i = 0; i < n; ++i)
    if (b_(i, i) != 0) throw Error(ErrorCode::not_skew_symmetrizable, "nonzero diagonal");

  c_.assign(n, mpq_class(0));
  for (const auto& comp : support_components(b_)) {
    c_[comp.front()] = 1;
    std::deque<int> queue{comp.front()};
    std::vector<bool> seen(n, false);
    seen[comp.front()] = true;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[j] || (b_(i, j) == 0 && b_(j, i) == 0)) continue;
        if (b_(i, j) == 0 || b_(j, i) == 0 || (b_(i, j) > 0) == (b_(j, i) > 0)) {
          throw Error(ErrorCode::not_skew_symmetrizable,
                      "entries b_" + std::to_string(i + 1) + std::to_string(j + 1) +
                          " and b_" + std::to_string(j + 1) + std::to_string(i + 1) +
                          " are not sign-skew");
        }
        c_[j] = -c_[i] * mpq_class(b_(i, j)) / mpq_class(b_(j, i));
        seen[j] = true;
        queue.push_back(static_cast<int>(j));
      }
    }
    mpq_class lowest = c_[comp.front()];
    for (int v : comp) lowest = std::min(lowest, c_[v]);
    for (int v : comp) c_[v] /= lowest;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c_[i] * b_(i, j) != -c_[j] * b_(j, i)) {
        throw Error(ErrorCode::not_skew_symmetrizable, "no consistent symmetrizer");
      }
}

IntMatrix mutate(const IntMatrix& b, std::size_t k) {
  if (k >= b.rows()) {
    throw Error(ErrorCode::index_out_of_range,
                "mutation index " + std::to_string(k + 1) + " out of range");
  }
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const auto bik = b(i, k);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
        continue;
      }
      const auto bkj = b(k, j);
      out(i, j) = b(i, j);
      if ((bik > 0 && bkj > 0) || (bik < 0 && bkj < 0)) {
        std::int64_t prod = 0;
        const bool overflow = __builtin_mul_overflow(bik, bkj, &prod) ||
                              (bik > 0 ? __builtin_add_overflow(b(i, j), prod, &out(i, j))
                                       : __builtin_sub_overflow(b(i, j), prod, &out(i, j)));
        if (overflow) {
          throw Error(ErrorCode::entry_overflow,
                      "matrix entry exceeds 64 bits when mutating at " + std::to_string(k + 1));
        }
      }
    }
  }
  return out;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k) {
  return ExchangeMatrix(mutate(m.matrix(), k));
}

ExchangeMatrix langlands_dual(const ExchangeMatrix& m) {
  return ExchangeMatrix(m.matrix().transposed().negated());
}

Bipartition Bipartition::detect(const IntMatrix& b) {
  check_square(b);
  const std::size_t n = b.rows();
  std::vector<int> color(n, -1);
  for (const auto& comp : support_components(b)) {
    color[comp.front()] = 0;
    std::deque<int> queue{comp.front()};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (b(v, w) == 0 && b(w, v) == 0) continue;
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(static_cast<int>(w));
        } else if (color[w] == color[v]) {
          throw Error(ErrorCode::not_bipartite,
                      "odd cycle through vertex " + std::to_string(v + 1));
        }
      }
    }
  }
  std::vector<Color> eps(n);
  for (std::size_t i = 0; i < n; ++i) eps[i] = color[i] == 0 ? Color::white : Color::black;
  return Bipartition(std::move(eps));
}

std::vector<int> Bipartition::vertices(Color c) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < epsilon_.size(); ++i)
    if (epsilon_[i] == c) out.push_back(static_cast<int>(i));
  return out;
}

Bipartition Bipartition::swapped() const {
  std::vector<Color> eps = epsilon_;
  for (auto& c : eps) c = opposite(c);
  return Bipartition(std::move(eps));
}

std::optional<int> Bigraph::h_gamma() const { return common_coxeter(gamma_components); }
std::optional<int> Bigraph::h_delta() const { return common_coxeter(delta_components); }

int Bigraph::half_period_length() const {
  const auto hg = h_gamma();
  const auto hd = h_delta();
  if (!hg || !hd) {
    throw Error(ErrorCode::not_admissible,
                "bigraph '" + name + "' has no common Coxeter number on Γ or Δ components");
  }
  return *hg + *hd;
}

Bigraph decompose(const ExchangeMatrix& m, std::optional<Bipartition> coloring,
                  std::string name) {
  const std::size_t n = m.size();
  Bigraph g;
  g.name = std::move(name);
  g.base = m;
  g.coloring = coloring ? std::move(*coloring) : Bipartition::detect(m.matrix());
  if (g.coloring.size() != n) {
    throw Error(ErrorCode::arity_mismatch, "coloring size differs from matrix size");
  }
  g.gamma = IntMatrix(n, n);
  g.delta = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto b = m(i, j);
      if (b == 0) continue;
      if (g.coloring[i] == g.coloring[j]) {
        throw Error(ErrorCode::not_bipartite, "edge " + std::to_string(i + 1) + "-" +
                                                  std::to_string(j + 1) +
                                                  " joins vertices of the same color");
      }
      const bool white_row = g.coloring[i] == Color::white;
      const bool is_gamma = white_row ? b > 0 : b < 0;
      (is_gamma ? g.gamma : g.delta)(i, j) = b > 0 ? b : -b;
    }
  }
  g.gamma_components = typed_components(g.gamma);
  g.delta_components = typed_components(g.delta);
  return g;
}

IntMatrix recompose(const Bipartition& coloring, const IntMatrix& gamma,
                    const IntMatrix& delta) {
  const std::size_t n = coloring.size();
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (gamma(i, j) != 0 && delta(i, j) != 0) {
        throw Error(ErrorCode::invalid_input, "entry is both a Γ and a Δ edge");
      }
      if (coloring[i] == coloring[j]) {
        if (gamma(i, j) != 0 || delta(i, j) != 0) {
          throw Error(ErrorCode::not_bipartite, "same-color edge in Γ or Δ");
        }
        continue;
      }
      const auto diff = gamma(i, j) - delta(i, j);
      b(i, j) = coloring[i] == Color::white ? diff : -diff;
    }
  }
  return b;
}

IntMatrix mutate_color(const IntMatrix& b, const Bipartition& coloring, Color color) {
  IntMatrix out = b;
  for (int v : coloring.vertices(color)) out = mutate(out, v);
  return out;
}

bool is_recurrent(const Bigraph& g) {
  const auto& b = g.base.matrix();
  const auto after_white = mutate_color(b, g.coloring, Color::white);
  if (!(after_white == b.negated())) return false;
  return mutate_color(after_white, g.coloring, Color::black) == b;
}

Bigraph tensor_product(const DynkinType& lhs, const DynkinType& rhs) {
  const IntMatrix ml = dynkin_template(lhs);
  const IntMatrix mr = dynkin_template(rhs);
  const int r = lhs.rank, s = rhs.rank, n = r * s;
  const auto pl = Bipartition::detect(ml);
  const auto pr = Bipartition::detect(mr);
  IntMatrix gamma(n, n), delta(n, n);
  std::vector<Color> eps(n);
  for (int u = 0; u < s; ++u) {
    for (int a = 0; a < r; ++a) {
      const int v = u * r + a;
      eps[v] = (pl.eta(a) + pr.eta(u)) % 2 == 0 ? Color::white : Color::black;
      for (int b = 0; b < r; ++b) gamma(v, u * r + b) = ml(a, b);
      for (int w = 0; w < s; ++w) delta(v, w * r + a) = mr(u, w);
    }
  }
  Bipartition coloring(std::move(eps));
  ExchangeMatrix m(recompose(coloring, gamma, delta));
  std::string name = lhs.name() + "x" + rhs.name();
  return decompose(m, coloring, std::move(name));
}

Automorphism Automorphism::identity(std::size_t n) {
  Automorphism a;
  a.perm.resize(n);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  return a;
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

int Automorphism::order() const {
  int order = 1;
  for (const auto& orbit : orbits(perm)) order = std::lcm(order, static_cast<int>(orbit.size()));
  return order;
}

Automorphism Automorphism::compose(const Automorphism& after) const {
  Automorphism out;
  out.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.perm[i] = after.perm[perm[i]];
  return out;
}

std::string Automorphism::cycles() const {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += '(';
    std::size_t v = s;
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      out += (first ? "" : " ") + std::to_string(v + 1);
      first = false;
      v = perm[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Automorphism Automorphism::from_cycles(std::size_t n, const std::string& text) {
  Automorphism a = identity(n);
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto fail = [&] { throw Error(ErrorCode::invalid_input, "bad cycle notation '" + text + "'"); };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail();
    const auto close = text.find(')', pos);
    if (close == std::string::npos) fail();
    std::istringstream in(text.substr(pos + 1, close - pos - 1));
    std::vector<int> cyc;
    int v;
    while (in >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > n || used[v - 1]) fail();
      used[v - 1] = true;
      cyc.push_back(v - 1);
    }
    if (!in.eof()) fail();
    for (std::size_t i = 0; i < cyc.size(); ++i) a.perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return a;
}

bool preserves_gamma_delta(const Bigraph& g, const std::vector<int>& perm) {
  const std::size_t n = g.size();
  if (perm.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.gamma(perm[i], perm[j]) != g.gamma(i, j) ||
          g.delta(perm[i], perm[j]) != g.delta(i, j))
        return false;
  return true;
}

bool preserves_coloring(const Bigraph& g, const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (g.coloring[perm[i]] != g.coloring[i]) return false;
  return true;
}

bool reverses_coloring(const Bigraph& g, const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (g.coloring[perm[i]] == g.coloring[i]) return false;
  return true;
}

bool is_bicolored(const Bigraph& g, const std::vector<int>& perm) {
  const std::size_t n = g.size();
  const auto& b = g.base.matrix();
  if (perm.size() != n || !preserves_coloring(g, perm)) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(perm[i], perm[j]) != b(i, j)) return false;
  for (const auto& orbit : orbits(perm)) {
    for (int i1 : orbit) {
      for (int i2 : orbit) {
        if (b(i1, i2) != 0) return false;
        for (std::size_t j = 0; j < n; ++j)
          if (b(i1, j) * b(i2, j) < 0) return false;
      }
    }
  }
  return true;
}

std::vector<Automorphism> find_automorphisms(const Bigraph& g, AutomorphismFilter filter,
                                             std::size_t bound) {
  const std::size_t n = g.size();
  if (n > bound) {
    throw Error(ErrorCode::search_bound_exceeded,
                std::to_string(n) + " vertices exceed the search bound " +
                    std::to_string(bound));
  }
  // Vertex signatures: sorted rows and columns of Γ and Δ.
  auto signature = [&](std::size_t v) {
    std::vector<std::vector<std::int64_t>> sig(4);
    for (std::size_t j = 0; j < n; ++j) {
      sig[0].push_back(g.gamma(v, j));
      sig[1].push_back(g.gamma(j, v));
      sig[2].push_back(g.delta(v, j));
      sig[3].push_back(g.delta(j, v));
    }
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  std::vector<std::vector<std::vector<std::int64_t>>> sigs(n);
  for (std::size_t v = 0; v < n; ++v) sigs[v] = signature(v);

  auto color_ok = [&](std::size_t i, std::size_t img) {
    switch (filter) {
      case AutomorphismFilter::color_preserving:
      case AutomorphismFilter::bicolored:
        return g.coloring[i] == g.coloring[img];
      case AutomorphismFilter::color_reversing:
        return g.coloring[i] != g.coloring[img];
      case AutomorphismFilter::all:
        return true;
    }
    return true;
  };

  std::vector<Automorphism> found;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (filter == AutomorphismFilter::bicolored && !is_bicolored(g, perm)) return;
      Automorphism a;
      a.perm = perm;
      a.kind = filter == AutomorphismFilter::bicolored         ? AutomorphismKind::bicolored
               : filter == AutomorphismFilter::color_preserving ? AutomorphismKind::color_preserving
               : filter == AutomorphismFilter::color_reversing  ? AutomorphismKind::color_reversing
                                                                : AutomorphismKind::general;
      found.push_back(std::move(a));
      return;
    }
    for (std::size_t img = 0; img < n; ++img) {
      if (used[img] || sigs[img] != sigs[i] || !color_ok(i, img)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = g.gamma(img, perm[j]) == g.gamma(i, j) && g.gamma(perm[j], img) == g.gamma(j, i) &&
             g.delta(img, perm[j]) == g.delta(i, j) && g.delta(perm[j], img) == g.delta(j, i);
      }
      if (!ok) continue;
      perm[i] = static_cast<int>(img);
      used[img] = true;
      self(self, i + 1);
      used[img] = false;
    }
    perm[i] = -1;
  };
  extend(extend, 0);
  return found;
}

std::vector<std::vector<int>> orbits(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    for (std::size_t v = s; !seen[v]; v = perm[v]) {
      seen[v] = true;
      orbit.push_back(static_cast<int>(v));
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

ExchangeMatrix fold(const ExchangeMatrix& m, const std::vector<int>& perm) {
  const std::size_t n = m.size();
  const auto& b = m.matrix();
  if (perm.size() != n) throw Error(ErrorCode::arity_mismatch, "permutation size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b(perm[i], perm[j]) != b(i, j)) {
        throw Error(ErrorCode::not_admissible, "condition (1): b_f(i)f(j) != b_ij");
      }
  const auto orb = orbits(perm);
  for (const auto& orbit : orb) {
    for (int i1 : orbit)
      for (int i2 : orbit) {
        if (b(i1, i2) != 0) {
          throw Error(ErrorCode::orbit_adjacency,
                      "condition (3): vertices " + std::to_string(i1 + 1) + " and " +
                          std::to_string(i2 + 1) + " share an orbit and are adjacent");
        }
        for (std::size_t j = 0; j < n; ++j)
          if (b(i1, j) * b(i2, j) < 0) {
            throw Error(ErrorCode::not_admissible, "condition (4): orbit is not sign-coherent");
          }
      }
  }
  IntMatrix folded(orb.size(), orb.size());
  for (std::size_t I = 0; I < orb.size(); ++I) {
    for (std::size_t J = 0; J < orb.size(); ++J) {
      std::optional<std::int64_t> value;
      for (int j : orb[J]) {
        std::int64_t sum = 0;
        for (int i : orb[I]) sum += b(i, j);
        if (value && *value != sum) {
          throw Error(ErrorCode::not_admissible, "folded entry depends on the representative");
        }
        value = sum;
      }
      folded(I, J) = *value;
    }
  }
  return ExchangeMatrix(std::move(folded));
}

Bigraph fold(const Bigraph& g, const Automorphism& f) {
  if (!is_bicolored(g, f.perm)) {
    // Surface the precise condition when the matrix itself is not admissible.
    fold(g.base, f.perm);
    throw Error(ErrorCode::not_admissible, "automorphism is not bicolored");
  }
  ExchangeMatrix folded = fold(g.base, f.perm);
  std::vector<Color> eps;
  for (const auto& orbit : orbits(f.perm)) eps.push_back(g.coloring[orbit.front()]);
  return decompose(folded, Bipartition(std::move(eps)), g.name + "/" + f.cycles());
}

}  // namespace zamobelt
