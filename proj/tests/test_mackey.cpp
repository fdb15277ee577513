#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"

using namespace gfrep;
using namespace gfrep::testutil;

TEST_CASE("double_coset_intertwining basics") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup n = s3->N_subgroup();
  Representation chi2 = cyclic_char(n, F7, 2);

  // x = identity gives i(L, L)
  CHECK(double_coset_intertwining(chi2, chi2, 0) == 1);

  // x = b sends chi2 to chi4, which is disjoint from chi2
  int b = s3->embed_H(s3->H().generators()[0]);
  CHECK(double_coset_intertwining(chi2, chi2, b) == 0);

  // C4/GF(3): the conjugate equals L, so the non-identity coset gives 1
  auto F3 = Field::make(3, 1);
  auto c4 = make_c4();
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  Representation L = cyclic_char(h, F3, 2);
  CHECK(double_coset_intertwining(L, L, c4->embed_N(1)) == 1);
}

TEST_CASE("mackey_sufficient on S3") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Representation chi2 = cyclic_char(s3->N_subgroup(), F7, 2);

  MackeyReport r = mackey_sufficient(chi2, whole);
  CHECK(r.rows.size() == 2);
  CHECK(r.i_LL == 1);
  CHECK(r.total == 1);
  CHECK(r.i_induced == 1);
  CHECK(r.condition_holds);
  CHECK(r.irreducible_by_criterion);
  CHECK(r.direct_irreducible);
}

TEST_CASE("mackey_sufficient vacuous case H = G") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Representation triv = trivial_rep(whole, F7);
  MackeyReport r = mackey_sufficient(triv, whole);
  CHECK(r.rows.size() == 1);
  CHECK(r.condition_holds);
  CHECK(r.direct_irreducible);
}

TEST_CASE("mackey_sufficient reproduces the C4/GF(3) failure of necessity") {
  auto F3 = Field::make(3, 1);
  auto c4 = make_c4();
  Subgroup whole = Subgroup::whole(c4->group());
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  Representation L = cyclic_char(h, F3, 2);

  MackeyReport r = mackey_sufficient(L, whole);
  CHECK(r.rows.size() == 2);
  CHECK(r.i_LL == 1);
  CHECK(r.total == 2);       // i(L^G, L^G) = 2 = 2 i(L, L)
  CHECK(r.i_induced == 2);
  CHECK(!r.condition_holds); // condition fails...
  CHECK(!r.irreducible_by_criterion);
  CHECK(r.direct_irreducible);  // ...yet L^G is irreducible
}

TEST_CASE("mackey_sufficient rejects reducible L") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Representation reg = regular_rep(s3->N_subgroup(), F7);
  CHECK_THROWS_AS(mackey_sufficient(reg, whole), HypothesisError);
}

TEST_CASE("proposition31_check") {
  auto F7 = Field::make(7, 1);
  auto F3 = Field::make(3, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());

  // H = G: always true
  CHECK(proposition31_check(trivial_rep(whole, F7), whole));

  // S3/GF(7), chi2: both intertwining numbers equal 1
  CHECK(proposition31_check(cyclic_char(s3->N_subgroup(), F7, 2), whole));

  // C4/GF(3): 2 != 1, even though L^G is irreducible
  auto c4 = make_c4();
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  CHECK(!proposition31_check(cyclic_char(h, F3, 2),
                             Subgroup::whole(c4->group())));
}

TEST_CASE("monomial criterion") {
  auto F7 = Field::make(7, 1);
  auto F5 = Field::make(5, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Subgroup n = s3->N_subgroup();

  // trivial character of a proper subgroup never passes
  CHECK(!monomial_criterion(trivial_rep(n, F7), whole));

  // S3/GF(7), chi2: y = a works since chi2(a) = 2 != 4 = chi2(bab)
  CHECK(monomial_criterion(cyclic_char(n, F7, 2), whole));

  // D4/GF(5), rho(a) = 2: rho(a) = 2 != 3 = rho(a^3)
  auto d4 = make_d4();
  Subgroup n4 = d4->N_subgroup();
  Representation rho = cyclic_char(n4, F5, 2);
  CHECK(monomial_criterion(rho, Subgroup::whole(d4->group())));
  Representation ind = induce(rho, Subgroup::whole(d4->group()));
  CHECK(ind.dim() == 2);
  CHECK(is_irreducible(ind).irreducible);

  // dimension precondition
  CHECK_THROWS_AS(monomial_criterion(ind, Subgroup::whole(d4->group())),
                  HypothesisError);
}

TEST_CASE("induced isomorphism test") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Subgroup n = s3->N_subgroup();

  Representation chi2 = cyclic_char(n, F7, 2);
  Representation chi4 = cyclic_char(n, F7, 4);

  // L1 = L2: x = identity witnesses non-disjointness -> isomorphic
  CHECK(!induced_isomorphism_test(chi2, chi2, whole));
  // conjugate characters induce isomorphic modules
  CHECK(!induced_isomorphism_test(chi2, chi4, whole));

  // S3 x C2: same N-character, different C2-sign -> non-isomorphic
  auto g12 = make_s3xc2();
  Subgroup whole12 = Subgroup::whole(g12->group());
  int h1 = g12->embed_H(g12->H().generators()[1]);  // the central C2
  Subgroup h6 = Subgroup::generated(
      g12->group(), {g12->embed_N(1), h1});
  CHECK(h6.order() == 6);
  // 1-dim reps of C6 = <n0> x <h1>: chi(n0) = 2, chi(h1) = +-1
  Representation plus = rep_from_images(
      h6, F7, {mat_of(*F7, {{2}}), mat_of(*F7, {{1}})});
  Representation minus = rep_from_images(
      h6, F7, {mat_of(*F7, {{2}}), mat_of(*F7, {{-1}})});
  CHECK(induced_isomorphism_test(plus, minus, whole12));
  CHECK(!induced_isomorphism_test(plus, plus, whole12));

  // hypothesis violation: a reducible induction is rejected
  Representation trivN = trivial_rep(n, F7);
  CHECK_THROWS_AS(induced_isomorphism_test(trivN, trivN, whole),
                  HypothesisError);
}

TEST_CASE("INT identity and representative independence on random pairs") {
  std::mt19937_64 rng(73);
  auto F7 = Field::make(7, 1);
  auto g12 = make_s3xc2();
  const Group& G = g12->group();
  Subgroup whole = Subgroup::whole(G);

  for (int t = 0; t < 6; ++t) {
    Subgroup h1 = random_subgroup(G, rng);
    Subgroup h2 = random_subgroup(G, rng);
    auto irr1 = irreducibles_of_group(h1, F7, t);
    auto irr2 = irreducibles_of_group(h2, F7, t + 100);
    const Representation& L1 = irr1[rng() % irr1.size()];
    const Representation& L2 = irr2[rng() % irr2.size()];

    // i(L1^G, L2^G) = sum over double cosets
    int direct = intertwining_number(induce(L1, whole), induce(L2, whole));
    int total = 0;
    for (int d : double_coset_reps(whole, h1, h2))
      total += double_coset_intertwining(L1, L2, G.inverse(d));
    CHECK(direct == total);

    // same double coset of x^-1 -> same value
    auto dreps = double_coset_reps(whole, h1, h2);
    int d = dreps[rng() % dreps.size()];
    int a = h1.elements()[rng() % h1.order()];
    int b = h2.elements()[rng() % h2.order()];
    int d2 = G.mult(G.mult(a, d), b);  // same (h1, h2)-double coset
    CHECK(double_coset_intertwining(L1, L2, G.inverse(d)) ==
          double_coset_intertwining(L1, L2, G.inverse(d2)));
  }
}

TEST_CASE("monomial criterion agrees with the all-elements loop") {
  auto F7 = Field::make(7, 1);
  std::mt19937_64 rng(91);
  auto g12 = make_s3xc2();
  const Group& G = g12->group();
  Subgroup whole = Subgroup::whole(G);

  for (int t = 0; t < 10; ++t) {
    Subgroup H = random_subgroup(G, rng);
    auto irr = irreducibles_of_group(H, F7, t);
    for (const auto& rho : irr) {
      if (rho.dim() != 1) continue;
      bool fast = monomial_criterion(rho, whole);
      // brute force over every x outside H
      bool brute = true;
      for (int x = 0; x < G.order() && brute; ++x) {
        if (H.contains(x)) continue;
        bool found = false;
        Subgroup Hx = conj_intersection(H, x);
        for (int y : Hx.elements()) {
          int conj = G.mult(G.mult(G.inverse(x), y), x);
          if (rho.image(y)(0, 0) != rho.image(conj)(0, 0)) {
            found = true;
            break;
          }
        }
        brute = brute && found;
      }
      CHECK(fast == brute);
    }
  }
}

TEST_CASE("normal subgroup: per-coset computation uses H^(x) = H") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Subgroup n = s3->N_subgroup();
  Representation chi2 = cyclic_char(n, F7, 2);

  MackeyReport r = mackey_sufficient(chi2, whole);
  for (const auto& row : r.rows) CHECK(row.hx_order == n.order());
  // dedicated normal-case path: i(x (x) L, L) over all of H
  for (const auto& row : r.rows) {
    Representation conj = conjugate_rep(chi2, row.conjugator);
    Representation conj_on_n = restrict_rep(conj, n);
    CHECK(intertwining_number(conj_on_n, chi2) == row.i_value);
  }
}
