#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "zamobelt/bigraph.hpp"
#include "zamobelt/catalog.hpp"
#include "zamobelt/dynkin.hpp"

using namespace zamobelt;

namespace {

std::vector<std::string> components(const std::vector<Component>& comps, bool with_type = true) {
  std::vector<std::string> out;
  for (const auto& c : comps) {
    std::string s = with_type ? c.type.name() + ":" : std::string(":");
    for (int v : c.vertices) s += std::to_string(v + 1) + ",";
    s += "h" + (c.coxeter ? std::to_string(*c.coxeter) : std::string("?"));
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntMatrix mutate_orbit(const IntMatrix& b, const std::vector<int>& orbit) {
  IntMatrix out = b;
  for (int v : orbit) out = mutate(out, static_cast<std::size_t>(v));
  return out;
}

}  // namespace

TEST_CASE("matrix mutation") {
  CHECK(mutate(IntMatrix{{0, 1}, {-1, 0}}, 0) == IntMatrix{{0, -1}, {1, 0}});
  const ExchangeMatrix c2(IntMatrix{{0, 2}, {-1, 0}});
  const auto m = mutate_matrix(c2, 1);
  CHECK(m.matrix() == IntMatrix{{0, -2}, {1, 0}});
  CHECK(m.symmetrizer() == c2.symmetrizer());
  const IntMatrix a3{{0, 1, 0}, {-1, 0, -1}, {0, 1, 0}};
  CHECK(mutate(a3, 1) == IntMatrix{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}});
  // a cyclic triangle picks up the 1 -> 3 composite arrow
  CHECK(mutate(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, 1) ==
        IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  CHECK_THROWS_AS(mutate(a3, 3), Error);
}

TEST_CASE("mutation is an involution on every catalog matrix") {
  for (const auto& name : catalog_sweep_names()) {
    const auto b = catalog(name).base.matrix();
    for (std::size_t k = 0; k < b.rows(); ++k) CHECK(mutate(mutate(b, k), k) == b);
  }
}

TEST_CASE("symmetrizer") {
  const ExchangeMatrix m(IntMatrix{{0, 2}, {-1, 0}});
  CHECK(m.symmetrizer() == std::vector<mpq_class>{1, 2});
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{1, 0}, {0, 0}}), Error);
  for (const auto& name : catalog_sweep_names()) {
    const auto g = catalog(name);
    const auto& c = g.base.symmetrizer();
    CHECK(*std::min_element(c.begin(), c.end()) == 1);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        CHECK(c[i] * g.base(i, j) == -c[j] * g.base(j, i));
  }
}

TEST_CASE("decompose A2") {
  const auto g = decompose(ExchangeMatrix(IntMatrix{{0, 1}, {-1, 0}}),
                           Bipartition({Color::white, Color::black}), "A2");
  CHECK(g.gamma == IntMatrix{{0, 1}, {1, 0}});
  CHECK(g.delta.is_zero());
  CHECK(components(g.gamma_components) == std::vector<std::string>{"A2:1,2,h3"});
  CHECK(components(g.delta_components) == std::vector<std::string>{"A1:1,h2", "A1:2,h2"});
  CHECK(g.half_period_length() == 5);
  CHECK(recompose(g.coloring, g.gamma, g.delta) == g.base.matrix());
}

TEST_CASE("figure bigraphs") {
  const auto f1 = catalog("fig1-A5starD4");
  CHECK(f1.size() == 9);
  CHECK(components(f1.gamma_components) ==
        std::vector<std::string>{"A5:1,2,3,4,5,h6", "D4:6,7,8,9,h6"});
  CHECK(components(f1.delta_components) ==
        std::vector<std::string>{"A3:1,5,6,h4", "A3:2,4,7,h4", "A3:3,8,9,h4"});
  const std::string eps = "bwbwbwbww";
  for (std::size_t i = 0; i < 9; ++i)
    CHECK(f1.coloring[i] == (eps[i] == 'w' ? Color::white : Color::black));
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {7, 9}})
    CHECK(f1.gamma(i - 1, j - 1) == 1);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 6}, {5, 6}, {2, 7}, {4, 7}, {3, 8}, {3, 9}})
    CHECK(f1.delta(i - 1, j - 1) == 1);

  const auto f2 = catalog("fig2-F4xA2");
  CHECK(f2.size() == 8);
  CHECK(components(f2.gamma_components) ==
        std::vector<std::string>{"F4:1,2,3,4,h12", "F4:5,6,7,8,h12"});
  CHECK(components(f2.delta_components) ==
        std::vector<std::string>{"A2:1,5,h3", "A2:2,6,h3", "A2:3,7,h3", "A2:4,8,h3"});
  CHECK(is_recurrent(f1));
  CHECK(is_recurrent(f2));
}

TEST_CASE("recurrence and decomposition round trip over the catalog") {
  for (const auto& name : catalog_sweep_names()) {
    const auto g = catalog(name);
    CHECK_MESSAGE(is_recurrent(g), name);
    CHECK(mutate_color(g.base.matrix(), g.coloring, Color::white) == g.base.matrix().negated());
    CHECK(recompose(g.coloring, g.gamma, g.delta) == g.base.matrix());
    const auto again = decompose(ExchangeMatrix(recompose(g.coloring, g.gamma, g.delta)), g.coloring);
    CHECK(again.gamma == g.gamma);
    CHECK(again.delta == g.delta);
  }
  // linear orientation of A3 is bipartite but not recurrent
  const auto lin = decompose(ExchangeMatrix(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  CHECK_FALSE(is_recurrent(lin));
  // odd cycle has no bipartition
  CHECK_THROWS_AS(decompose(ExchangeMatrix(IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})), Error);
}

TEST_CASE("tensor products") {
  const auto a2 = tensor_product(DynkinType::parse("A2"), DynkinType::parse("A1"));
  CHECK(a2.base.matrix() == catalog("A2").base.matrix());
  CHECK(a2.gamma == IntMatrix{{0, 1}, {1, 0}});

  const auto f4a2 = tensor_product(DynkinType::parse("F4"), DynkinType::parse("A2"));
  const auto fig2 = catalog("fig2-F4xA2");
  CHECK(f4a2.gamma == fig2.gamma);
  CHECK(f4a2.delta == fig2.delta);
  CHECK(f4a2.coloring == fig2.coloring.swapped());
  CHECK(is_recurrent(f4a2));

  const auto b2b2 = catalog("B2xB2");
  CHECK(b2b2.size() == 4);
  CHECK(b2b2.gamma_components.size() == 2);
  CHECK(b2b2.delta_components.size() == 2);
  CHECK(*b2b2.h_gamma() == 4);
  CHECK(*b2b2.h_delta() == 4);
  CHECK_THROWS_AS(tensor_product(DynkinType{'D', 3}, DynkinType::parse("A1")), Error);
}

TEST_CASE("Langlands dual") {
  const ExchangeMatrix m(IntMatrix{{0, 2}, {-1, 0}});
  CHECK(langlands_dual(m).matrix() == IntMatrix{{0, 1}, {-2, 0}});
  CHECK(langlands_dual(m).symmetrizer() == std::vector<mpq_class>{2, 1});
  CHECK(langlands_dual(langlands_dual(m)) == m);
  const auto a3 = catalog("A3").base;
  CHECK(langlands_dual(a3) == a3);
  for (const auto& name : catalog_sweep_names()) {
    const auto g = catalog(name);
    const auto d = decompose(langlands_dual(g.base), g.coloring);
    CHECK(d.h_gamma() == g.h_gamma());
    CHECK(d.h_delta() == g.h_delta());
    // B and C swap under the dual, vertex sets and h do not
    CHECK(components(d.gamma_components, false) == components(g.gamma_components, false));
    CHECK(components(d.delta_components, false) == components(g.delta_components, false));
  }
}

TEST_CASE("folding") {
  const auto a3 = catalog("A3");
  const auto c2 = fold(a3.base, std::vector<int>{2, 1, 0});
  CHECK(c2.matrix() == IntMatrix{{0, 2}, {-1, 0}});
  CHECK(c2.symmetrizer() == std::vector<mpq_class>{1, 2});
  CHECK(fold(a3.base, std::vector<int>{0, 1, 2}) == a3.base);

  const IntMatrix cyclic{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  try {
    fold(ExchangeMatrix(cyclic), std::vector<int>{1, 2, 0});
    FAIL("expected OrbitAdjacency");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::orbit_adjacency);
  }

  for (const auto& pair : catalog_fold_pairs()) {
    const auto src = catalog(pair.source);
    const auto folded = fold(src, pair.f);
    const auto expected = catalog(pair.folded_name);
    CHECK(folded.size() == expected.size());
    CHECK(folded.h_gamma() == expected.h_gamma());
    CHECK(folded.h_delta() == expected.h_delta());
    CHECK(components(folded.gamma_components).size() == 1);
    CHECK(folded.gamma_components[0].type == expected.gamma_components[0].type);
    // folding commutes with mutating a whole orbit
    const auto orbs = orbits(pair.f.perm);
    for (std::size_t I = 0; I < orbs.size(); ++I) {
      const auto lhs = fold(ExchangeMatrix(mutate_orbit(src.base.matrix(), orbs[I])), pair.f.perm);
      CHECK(lhs.matrix() == mutate(folded.base.matrix(), I));
    }
  }
}

TEST_CASE("automorphism search") {
  const auto a2 = catalog("A2");
  const auto rev = find_automorphisms(a2, AutomorphismFilter::color_reversing);
  REQUIRE(rev.size() == 1);
  CHECK(rev[0].cycles() == "(1 2)");

  const auto f1 = find_automorphisms(catalog("fig1-A5starD4"), AutomorphismFilter::color_preserving);
  CHECK(std::any_of(f1.begin(), f1.end(), [](const Automorphism& a) { return a.cycles() == "(8 9)"; }));

  const auto b2b2 = find_automorphisms(catalog("B2xB2"), AutomorphismFilter::color_preserving);
  CHECK(std::none_of(b2b2.begin(), b2b2.end(),
                     [](const Automorphism& a) { return !a.is_identity() && a.order() == 2; }));
  CHECK(Automorphism::from_cycles(4, "(1 3 4)").order() == 3);
  CHECK(Automorphism::from_cycles(9, "(8 9)").cycles() == "(8 9)");
}

TEST_CASE("Dynkin data against root strings") {
  verify_coxeter_table();
  for (const char* name : {"A1", "A2", "A5", "A8", "B2", "B3", "B6", "C3", "C5", "D4", "D5", "D7",
                           "E6", "E7", "E8", "F4", "G2"}) {
    const auto t = DynkinType::parse(name);
    const auto m = dynkin_template(t);
    const auto roots = oracle::positive_roots(m);
    CHECK_MESSAGE(positive_roots(m) == roots, name);
    CHECK_MESSAGE(2 * static_cast<int>(roots.size()) == *coxeter_number(t) * t.rank, name);
  }
}

TEST_CASE("type recognition is label independent") {
  std::mt19937_64 rng(3);
  for (const char* name : {"A4", "B4", "C4", "D5", "E6", "E7", "F4", "G2"}) {
    const auto t = DynkinType::parse(name);
    const auto m = dynkin_template(t);
    std::vector<int> p(m.rows());
    std::iota(p.begin(), p.end(), 0);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK_MESSAGE(recognize_dynkin(m.submatrix(p, p)) == t, name);
    }
  }
  CHECK_FALSE(recognize_dynkin(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}).known());
  CHECK_THROWS_AS(catalog("Q7"), Error);
}
