#include "zamobelt/catalog.hpp"

#include <sstream>

#include "zamobelt/error.hpp"

namespace zamobelt {

namespace {

using Edge = std::pair<int, int>;  // 1-based

IntMatrix undirected(std::size_t n, const std::vector<Edge>& edges) {
  IntMatrix m(n, n);
  for (auto [a, b] : edges) {
    m(a - 1, b - 1) = 1;
    m(b - 1, a - 1) = 1;
  }
  return m;
}

Bipartition parse_colors(const std::string& pattern) {
  std::vector<Color> eps;
  for (char c : pattern) eps.push_back(c == 'w' ? Color::white : Color::black);
  return Bipartition(std::move(eps));
}

Bigraph from_parts(std::string name, const Bipartition& eps, const IntMatrix& gamma,
                   const IntMatrix& delta) {
  ExchangeMatrix m(recompose(eps, gamma, delta));
  return decompose(m, eps, std::move(name));
}

// A5 * D4: the A5 path 1..5 and the D4 star 6-7-{8,9} are the red Γ
// components; blue Δ edges form the three A3 paths 1-6-5, 2-7-4, 8-3-9.
Bigraph figure_one() {
  const auto gamma = undirected(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {7, 9}});
  const auto delta = undirected(9, {{1, 6}, {5, 6}, {2, 7}, {4, 7}, {3, 8}, {3, 9}});
  return from_parts("fig1-A5starD4", parse_colors("bwbwbwbww"), gamma, delta);
}

// F4 ⊗ A2 drawn as two F4 columns x1..x4 and x5..x8 joined by A2 rows
// i - (i+4). The double edges 2=3 and 6=7 carry Γ(2,3) = Γ(6,7) = 2.
Bigraph figure_two() {
  IntMatrix gamma = undirected(8, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}});
  gamma(1, 2) = 2;
  gamma(5, 6) = 2;
  const auto delta = undirected(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
  return from_parts("fig2-F4xA2", parse_colors("bwbwwbwb"), gamma, delta);
}

}  // namespace

Bigraph catalog(const std::string& name) {
  if (name == "fig1-A5starD4") return figure_one();
  if (name == "fig2-F4xA2") return figure_two();
  const auto x = name.find('x');
  if (x != std::string::npos) {
    const auto lhs = DynkinType::parse(name.substr(0, x));
    const auto rhs = DynkinType::parse(name.substr(x + 1));
    return tensor_product(lhs, rhs);
  }
  Bigraph g = tensor_product(DynkinType::parse(name), DynkinType{'A', 1});
  g.name = name;
  return g;
}

std::vector<std::string> catalog_sweep_names() {
  return {"A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "G2",
          "A2xA2", "A2xA3", "B2xB2", "G2xG2", "fig1-A5starD4", "fig2-F4xA2"};
}

std::vector<std::string> catalog_figure_names() { return {"fig1-A5starD4", "fig2-F4xA2"}; }

std::string catalog_version_string() {
  std::ostringstream out;
  out << "zamobelt-catalog-1";
  for (const auto& name : catalog_figure_names()) {
    const auto g = catalog(name);
    out << ';' << name << ':' << to_string(g.base.matrix()) << ':';
    for (auto c : g.coloring.colors()) out << (c == Color::white ? 'w' : 'b');
  }
  for (const char* t : {"A3", "B3", "C3", "D5", "E8", "F4", "G2"}) {
    out << ';' << t << ':' << to_string(dynkin_template(DynkinType::parse(t)));
  }
  return out.str();
}

std::uint64_t catalog_version_hash() {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : catalog_version_string()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<FoldPair> catalog_fold_pairs() {
  return {
      {"A3", Automorphism::from_cycles(3, "(1 3)"), "C2"},
      {"D4", Automorphism::from_cycles(4, "(1 3 4)"), "G2"},
  };
}

}  // namespace zamobelt
