#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gfrep/poly.hpp"
#include "testutil.hpp"

using namespace gfrep;
using namespace gfrep::testutil;

TEST_CASE("rep_from_images validates order relations") {
  auto F7 = Field::make(7, 1);
  auto c2 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({2}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  Subgroup w2 = Subgroup::whole(c2->group());
  CHECK(rep_from_images(w2, F7, {mat_of(*F7, {{-1}})}).dim() == 1);

  auto c3 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({3}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  Subgroup w3 = Subgroup::whole(c3->group());
  CHECK_NOTHROW(rep_from_images(w3, F7, {mat_of(*F7, {{2}})}));  // 2^3 = 1
  CHECK_THROWS_AS(rep_from_images(w3, F7, {mat_of(*F7, {{3}})}),
                  ValidationError);  // 3^3 = 6 != 1
  CHECK_THROWS_AS(rep_from_images(w3, F7, {zeros(*F7, 1, 1)}),
                  ValidationError);  // singular
}

TEST_CASE("restriction") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Subgroup n = s3->N_subgroup();

  // restrict to the whole group: same images
  Representation chi2 = cyclic_char(n, F7, 2);
  Representation ind = induce(chi2, whole);
  Representation same = restrict_rep(ind, whole);
  CHECK(same.dim() == ind.dim());

  // trivial rep restricts to the trivial rep
  Representation triv = trivial_rep(whole, F7);
  Representation trivN = restrict_rep(triv, n);
  CHECK(trivN.dim() == 1);
  for (int e : n.elements()) CHECK(trivN.image(e) == identity(*F7, 1));

  // S3/GF(7) induced rep restricted to N: a -> diag(2, 4)
  Representation indN = restrict_rep(ind, n);
  int a = s3->embed_N(1);
  CHECK(indN.image(a) == mat_of(*F7, {{2, 0}, {0, 4}}));
}

TEST_CASE("induction examples") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());

  // induce from H = G is the identity operation
  Representation triv = trivial_rep(whole, F7);
  CHECK(induce(triv, whole).dim() == 1);

  // C4 = <g>, H = <g^2>, L(g^2) = 2 over GF(3): g -> [[0,2],[1,0]]
  auto F3 = Field::make(3, 1);
  auto c4 = make_c4();
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  Representation L = cyclic_char(h, F3, 2);
  Representation ind = induce(L, Subgroup::whole(c4->group()));
  CHECK(ind.dim() == 2);
  CHECK(ind.image(c4->embed_N(1)) == mat_of(*F3, {{0, 2}, {1, 0}}));

  // S3, H = N, chi(a) = 2 over GF(7): a -> diag(2,4), b -> [[0,1],[1,0]]
  Representation chi2 = cyclic_char(s3->N_subgroup(), F7, 2);
  Representation ind2 = induce(chi2, whole);
  CHECK(ind2.dim() == 2);
  CHECK(ind2.image(s3->embed_N(1)) == mat_of(*F7, {{2, 0}, {0, 4}}));
  CHECK(ind2.image(s3->embed_H(s3->H().generators()[0])) ==
        mat_of(*F7, {{0, 1}, {1, 0}}));

  // dim(induce) = [G:H] * dim L
  CHECK(ind.dim() == 2 * L.dim());
}

TEST_CASE("conjugate representations") {
  auto F3 = Field::make(3, 1);
  auto c4 = make_c4();
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  Representation L = cyclic_char(h, F3, 2);

  // conjugating by g fixes g^2, so the conjugate equals L
  Representation Lg = conjugate_rep(L, c4->embed_N(1));
  CHECK(Lg.domain().same_as(h));
  CHECK(Lg.image(c4->embed_N(2)) == L.image(c4->embed_N(2)));

  // S3/GF(7): chi2 conjugated by b is chi4
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Representation chi2 = cyclic_char(s3->N_subgroup(), F7, 2);
  int b = s3->embed_H(s3->H().generators()[0]);
  Representation conj = conjugate_rep(chi2, b);
  CHECK(conj.domain().same_as(s3->N_subgroup()));
  CHECK(conj.image(s3->embed_N(1)) == mat_of(*F7, {{4}}));
}

TEST_CASE("intertwining numbers") {
  auto F7 = Field::make(7, 1);
  auto F3 = Field::make(3, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());

  // i(trivial, trivial) = 1
  Representation triv = trivial_rep(whole, F7);
  CHECK(intertwining_number(triv, triv) == 1);

  // the C4/GF(3) induced module: i(L^G, L^G) = 2
  auto c4 = make_c4();
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  Representation L = cyclic_char(h, F3, 2);
  Representation ind = induce(L, Subgroup::whole(c4->group()));
  CHECK(intertwining_number(ind, ind) == 2);

  // non-isomorphic characters of C3 are disjoint
  Representation chi2 = cyclic_char(s3->N_subgroup(), F7, 2);
  Representation chi4 = cyclic_char(s3->N_subgroup(), F7, 4);
  CHECK(intertwining_number(chi2, chi4) == 0);
  CHECK(is_disjoint(chi2, chi4));
  CHECK(!is_disjoint(chi2, chi2));
}

TEST_CASE("irreducibility") {
  auto F7 = Field::make(7, 1);
  auto F3 = Field::make(3, 1);

  // 1-dimensional representations are irreducible
  auto s3 = make_s3();
  Representation chi2 = cyclic_char(s3->N_subgroup(), F7, 2);
  CHECK(is_irreducible(chi2).irreducible);

  // the C4/GF(3) induced module is irreducible
  auto c4 = make_c4();
  Subgroup h = Subgroup::generated(c4->group(), {c4->embed_N(2)});
  Representation ind = induce(cyclic_char(h, F3, 2),
                              Subgroup::whole(c4->group()));
  CHECK(is_irreducible(ind).irreducible);
  CHECK(*exhaustive_spin_irreducible(ind));
  CHECK(is_irreducible(ind, 0, true).irreducible);  // forced cross-check

  // the regular representation of C2 over GF(7) splits
  auto c2 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({2}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  Representation reg = regular_rep(Subgroup::whole(c2->group()), F7);
  auto res = is_irreducible(reg);
  CHECK(!res.irreducible);
  REQUIRE(!res.witness.empty());
  CHECK(is_invariant_subspace(res.witness, reg.gen_images()));
  CHECK(res.witness.size() < 2);
}

TEST_CASE("oracle agreement on small modules") {
  std::mt19937_64 rng(31);
  auto F5 = Field::make(5, 1);
  auto d4 = make_d4();
  Subgroup whole = Subgroup::whole(d4->group());
  for (uint32_t v : {1u, 2u, 3u, 4u}) {
    Representation chi = cyclic_char(d4->N_subgroup(), F5, v);
    Representation ind = induce(chi, whole);
    auto fast = is_irreducible(ind, rng());
    auto oracle = exhaustive_spin_irreducible(ind);
    REQUIRE(oracle.has_value());
    CHECK(fast.irreducible == *oracle);
  }
}

TEST_CASE("decompose examples") {
  auto F7 = Field::make(7, 1);
  auto F5 = Field::make(5, 1);

  // regular rep of C2 over GF(7): trivial + sign
  auto c2 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({2}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  auto dec2 = decompose(regular_rep(Subgroup::whole(c2->group()), F7));
  CHECK(dec2.summands.size() == 2);
  for (auto& [rep, mult] : dec2.summands) {
    CHECK(rep.dim() == 1);
    CHECK(mult == 1);
  }

  // regular rep of C3 over GF(7): three characters
  auto c3 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({3}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  auto dec3 = decompose(regular_rep(Subgroup::whole(c3->group()), F7));
  CHECK(dec3.summands.size() == 3);

  // over GF(5): trivial + one 2-dimensional (x^2+x+1 irreducible mod 5)
  auto dec35 = decompose(regular_rep(Subgroup::whole(c3->group()), F5));
  CHECK(dec35.summands.size() == 2);
  int d0 = dec35.summands[0].first.dim();
  int d1 = dec35.summands[1].first.dim();
  CHECK(d0 + d1 == 3);
  CHECK(std::max(d0, d1) == 2);
}

TEST_CASE("decompose certificate block-diagonalizes") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Representation reg = regular_rep(whole, F7);
  auto dec = decompose(reg);

  MatGF B = dec.change_of_basis;
  MatGF Binv = inverse(B);
  for (size_t gi = 0; gi < reg.gen_images().size(); ++gi) {
    MatGF conj = (Binv * reg.gen_images()[gi] * B).eval();
    for (const auto& blk : dec.blocks) {
      for (int r = blk.offset; r < blk.offset + blk.size; ++r)
        for (int c = 0; c < reg.dim(); ++c)
          if (c < blk.offset || c >= blk.offset + blk.size)
            CHECK(conj(r, c).is_zero());
    }
  }
  // multiplicities recovered through intertwining numbers
  for (const auto& [s, mult] : dec.summands)
    CHECK(intertwining_number(reg, s) == mult * intertwining_number(s, s));
  int total = 0;
  for (const auto& [s, mult] : dec.summands) total += s.dim() * mult;
  CHECK(total == reg.dim());
}

TEST_CASE("irreducibles_of_group with Wedderburn certification") {
  auto F7 = Field::make(7, 1);
  auto F5 = Field::make(5, 1);

  auto c2 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({2}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  CHECK(irreducibles_of_group(Subgroup::whole(c2->group()), F7).size() == 2);

  // C3 over GF(5): dims {1, 2}, count 1 + 4/2 = 3
  auto c3 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({3}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  auto irr35 = irreducibles_of_group(Subgroup::whole(c3->group()), F5);
  REQUIRE(irr35.size() == 2);
  CHECK(irr35[0].dim() == 1);
  CHECK(irr35[1].dim() == 2);
  CHECK(intertwining_number(irr35[1], irr35[1]) == 2);  // End = GF(25)

  // S3 over GF(7): dims {1, 1, 2}, all split
  auto s3 = make_s3();
  auto irrs3 = irreducibles_of_group(Subgroup::whole(s3->group()), F7);
  REQUIRE(irrs3.size() == 3);
  CHECK(irrs3[0].dim() == 1);
  CHECK(irrs3[1].dim() == 1);
  CHECK(irrs3[2].dim() == 2);
  for (const auto& r : irrs3) {
    auto o = exhaustive_spin_irreducible(r);
    REQUIRE(o.has_value());
    CHECK(*o);
  }
}

TEST_CASE("Frobenius reciprocity as an executable equality") {
  std::mt19937_64 rng(59);
  auto F7 = Field::make(7, 1);
  auto s3xc2 = make_s3xc2();
  const Group& G = s3xc2->group();
  Subgroup whole = Subgroup::whole(G);

  auto vreps = irreducibles_of_group(whole, F7, 1);
  for (int t = 0; t < 8; ++t) {
    Subgroup H = random_subgroup(G, rng);
    auto wreps = irreducibles_of_group(H, F7, t);
    const Representation& W = wreps[rng() % wreps.size()];
    const Representation& V = vreps[rng() % vreps.size()];
    CHECK(intertwining_number(induce(W, whole), V) ==
          intertwining_number(W, restrict_rep(V, H)));
  }
}

TEST_CASE("induction in stages") {
  auto F7 = Field::make(7, 1);
  auto g12 = make_s3xc2();
  const Group& G = g12->group();
  Subgroup whole = Subgroup::whole(G);
  Subgroup n = g12->N_subgroup();
  // T = <n0, h0> is an S3 between N and G
  Subgroup t = Subgroup::generated(
      G, {g12->embed_N(1), g12->embed_H(g12->H().generators()[0])});
  REQUIRE(t.order() == 6);

  Representation chi2 = cyclic_char(n, F7, 2);
  Representation direct = induce(chi2, whole);
  Representation staged = induce(induce(chi2, t), whole);
  CHECK(direct.dim() == staged.dim());
  // isomorphic as modules: equal endomorphism and cross intertwining
  CHECK(intertwining_number(direct, staged) ==
        intertwining_number(direct, direct));
  CHECK(intertwining_number(staged, staged) ==
        intertwining_number(direct, direct));
}

TEST_CASE("redundant generating sets stay consistent") {
  auto F7 = Field::make(7, 1);
  auto c3 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({3}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  const Group& G = c3->group();
  // domain generated by {a, a^2}: images must agree with the word relations
  Subgroup redundant = Subgroup::generated(G, {c3->embed_N(1), c3->embed_N(2)});
  CHECK(redundant.order() == 3);
  CHECK_NOTHROW(rep_from_images(redundant, F7,
                                {mat_of(*F7, {{2}}), mat_of(*F7, {{4}})}));
  CHECK_THROWS_AS(rep_from_images(redundant, F7,
                                  {mat_of(*F7, {{2}}), mat_of(*F7, {{2}})}),
                  ValidationError);

  // intertwining across representations built from different generator
  // lists of the same subgroup goes through element images, not lists
  Subgroup plain = Subgroup::generated(G, {c3->embed_N(1)});
  Representation a = rep_from_images(plain, F7, {mat_of(*F7, {{2}})});
  Representation b = rep_from_images(
      redundant, F7, {mat_of(*F7, {{2}}), mat_of(*F7, {{4}})});
  CHECK(intertwining_number(a, b) == 1);
  CHECK(intertwining_number(b, a) == 1);
}

TEST_CASE("char dividing the group order is refused") {
  auto F3 = Field::make(3, 1);
  auto c3 = std::make_shared<SemidirectGroup>(AbelianGroupSpec({3}),
                                              Group::trivial(),
                                              std::vector<ActionMatrix>{});
  Subgroup whole = Subgroup::whole(c3->group());
  Representation triv = trivial_rep(whole, F3);
  CHECK_THROWS_AS(is_irreducible(triv), HypothesisError);
  CHECK_THROWS_AS(decompose(triv), HypothesisError);
  CHECK_THROWS_AS(irreducibles_of_group(whole, F3), HypothesisError);
  CHECK_THROWS_AS(is_disjoint(triv, triv), HypothesisError);
}

TEST_CASE("intertwining is additive and symmetric") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  auto irr = irreducibles_of_group(whole, F7);
  Representation reg = regular_rep(whole, F7);

  for (const auto& s : irr) {
    int lhs = intertwining_number(reg, s);
    int rhs = 0;
    auto dec = decompose(reg);
    for (const auto& [t, mult] : dec.summands)
      rhs += mult * intertwining_number(t, s);
    CHECK(lhs == rhs);
    CHECK(intertwining_number(reg, s) == intertwining_number(s, reg));
  }
}

TEST_CASE("isomorphism detection with explicit intertwiner") {
  auto F7 = Field::make(7, 1);
  auto s3 = make_s3();
  Subgroup whole = Subgroup::whole(s3->group());
  Subgroup n = s3->N_subgroup();

  Representation ind2 = induce(cyclic_char(n, F7, 2), whole);
  Representation ind4 = induce(cyclic_char(n, F7, 4), whole);
  CHECK(is_isomorphic_irreducible(ind2, ind4));  // same orbit
  auto X = find_iso_intertwiner(ind2, ind4);
  REQUIRE(X.has_value());
  CHECK(is_invertible(*X));

  Representation triv = trivial_rep(whole, F7);
  CHECK(!is_isomorphic_irreducible(triv, ind2));
}
