#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "gfrep/poly.hpp"

using namespace gfrep;

TEST_CASE("factor_poly on worked examples") {
  auto F7 = Field::make(7, 1);
  // x^2 - 1 = (x-1)(x+1); canonical order sorts x+1 before x+6
  auto fac = factor_poly(PolyGF::from_ints(*F7, {-1, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == PolyGF::from_ints(*F7, {1, 1}));
  CHECK(fac[1].first == PolyGF::from_ints(*F7, {-1, 1}));

  // x^2 + 1 irreducible over GF(3)
  auto F3 = Field::make(3, 1);
  CHECK(is_irreducible_poly(PolyGF::from_ints(*F3, {1, 0, 1})));

  // x^3 - 1 over GF(7): roots are the elements of order dividing 3
  auto fac3 = factor_poly(PolyGF::from_ints(*F7, {-1, 0, 0, 1}));
  REQUIRE(fac3.size() == 3);
  std::vector<uint32_t> roots;
  for (auto& [f, m] : fac3) {
    CHECK(f.deg() == 1);
    CHECK(m == 1);
    roots.push_back(F7->neg(f.code_at(0)));
  }
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<uint32_t>({1, 2, 4}));
}

TEST_CASE("factor error paths") {
  auto F7 = Field::make(7, 1);
  CHECK_THROWS_AS(factor_poly(PolyGF(*F7)), ValidationError);
  CHECK_THROWS_AS(factor_poly(PolyGF::from_ints(*F7, {3})), ValidationError);
}

TEST_CASE("factor product reconstruction fuzz") {
  std::mt19937_64 rng(17);
  auto F7 = Field::make(7, 1);
  auto F4 = Field::make(2, 2, {1, 1, 1});
  auto F25 = Field::make(5, 2, {1, 1, 1});
  for (int t = 0; t < 200; ++t) {
    const Field& F = t % 3 == 0 ? *F4 : (t % 3 == 1 ? *F7 : *F25);
    int deg = 1 + static_cast<int>(rng() % 10);
    std::vector<uint32_t> c(deg + 1);
    for (auto& x : c) x = static_cast<uint32_t>(rng() % F.q());
    if (!c[deg]) c[deg] = 1;
    PolyGF f(F, c);
    auto fac = factor_poly(f, t);
    PolyGF prod(F, {1});
    for (const auto& [g, m] : fac) {
      CHECK(g.lead() == F.one());
      for (int i = 0; i < m; ++i) prod = prod * g;
      // small-degree factors really are irreducible: no roots
      if (g.deg() > 1 && g.deg() <= 3)
        for (uint32_t r = 0; r < F.q(); ++r)
          CHECK(!g.eval(GF(&F, r)).is_zero());
    }
    CHECK(prod == monic(f));
  }
}

TEST_CASE("min_poly of matrices") {
  auto F3 = Field::make(3, 1);
  CHECK(min_poly(identity(*F3, 3)) == PolyGF::from_ints(*F3, {-1, 1}));

  MatGF m = mat_of(*F3, {{0, 2}, {1, 0}});
  // m^2 = 2I, so minpoly = x^2 - 2 = x^2 + 1
  CHECK((m * m).eval() == mat_of(*F3, {{2, 0}, {0, 2}}));
  CHECK(min_poly(m) == PolyGF::from_ints(*F3, {1, 0, 1}));

  auto F7 = Field::make(7, 1);
  MatGF d = mat_of(*F7, {{1, 0}, {0, 6}});
  CHECK(min_poly(d) == PolyGF::from_ints(*F7, {-1, 0, 1}) *
                           PolyGF::from_ints(*F7, {1}));  // (x-1)(x-6) = x^2-1
}

TEST_CASE("min_poly annihilates and is minimal on random matrices") {
  std::mt19937_64 rng(23);
  auto F5 = Field::make(5, 1);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng() % 6);
    MatGF m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = GF(F5.get(), static_cast<uint32_t>(rng() % 5));
    PolyGF mp = min_poly(m);
    CHECK(mp.lead() == F5->one());
    CHECK(eval_poly_at(mp, m) == zeros(*F5, n, n));
    CHECK(mp.deg() >= 1);
    CHECK(mp.deg() <= n);
  }
}

TEST_CASE("multiplicities, including p-th powers") {
  auto F3 = Field::make(3, 1);
  // (x+1)^2 * (x+2)^3 * (x^2+1) over GF(3); the cube exercises the
  // p-th root branch of the squarefree decomposition
  PolyGF a = PolyGF::from_ints(*F3, {1, 1});
  PolyGF b = PolyGF::from_ints(*F3, {2, 1});
  PolyGF c = PolyGF::from_ints(*F3, {1, 0, 1});
  PolyGF f = a * a * b * b * b * c;
  auto fac = factor_poly(f);
  REQUIRE(fac.size() == 3);
  CHECK(fac[0].first == a);
  CHECK(fac[0].second == 2);
  CHECK(fac[1].first == b);
  CHECK(fac[1].second == 3);
  CHECK(fac[2].first == c);
  CHECK(fac[2].second == 1);

  // pure p-th power
  auto fac2 = factor_poly(a * a * a);
  REQUIRE(fac2.size() == 1);
  CHECK(fac2[0].first == a);
  CHECK(fac2[0].second == 3);
}

TEST_CASE("char-2 extension fields factor correctly") {
  auto F8 = Field::make(2, 3, {1, 1, 0, 1});
  // x^8 - x splits into all degree-1 factors over GF(8)
  std::vector<uint32_t> c(9, 0);
  c[1] = 1;
  c[8] = 1;  // x^8 + x
  auto fac = factor_poly(PolyGF(*F8, c), 1);
  size_t linear = 0;
  for (auto& [f, m] : fac)
    if (f.deg() == 1) linear += m;
  CHECK(linear == 8);
}
