#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gfrep/semidirect.hpp"

using namespace gfrep;

TEST_CASE("permutation closure") {
  Group c3 = Group::from_permutations({{1, 2, 0}});
  CHECK(c3.order() == 3);
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  CHECK(s3.order() == 6);
  Group v4 = Group::from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}});
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(!s3.is_abelian());

  CHECK_THROWS_AS(Group::from_permutations({{0, 0, 1}}), ValidationError);
  CHECK_THROWS_AS(Group::from_permutations({{1, 2, 0}}, 2), ValidationError);
}

TEST_CASE("identity and inverse laws") {
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  for (int a = 0; a < s3.order(); ++a) {
    CHECK(s3.mult(a, s3.identity()) == a);
    CHECK(s3.mult(a, s3.inverse(a)) == s3.identity());
    // words evaluate back to their element
    int e = s3.identity();
    for (int gi : s3.word(a)) e = s3.mult(e, s3.generators()[gi]);
    CHECK(e == a);
  }
}

TEST_CASE("semidirect S3 = C3 x| C2 matches the permutation S3") {
  SemidirectGroup sd(AbelianGroupSpec({3}), Group::from_permutations({{1, 0}}),
                     {{{-1}}});
  const Group& G = sd.group();
  CHECK(G.order() == 6);
  CHECK(!G.is_abelian());

  // (n,h) -> permutation isomorphism check: map n0 -> (0 1 2), h0 -> (0 1)
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  // build the homomorphism from generator images and compare tables
  std::vector<int> image(G.order(), -1);
  for (int n = 0; n < 3; ++n)
    for (int h = 0; h < 2; ++h) {
      int perm = s3.identity();
      for (int i = 0; i < n; ++i) perm = s3.mult(perm, s3.generators()[0]);
      for (int i = 0; i < h; ++i) perm = s3.mult(perm, s3.generators()[1]);
      image[sd.group().mult(sd.embed_N(n), sd.embed_H(h))] = perm;
    }
  std::set<int> distinct(image.begin(), image.end());
  CHECK(distinct.size() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(image[G.mult(a, b)] == s3.mult(image[a], image[b]));
}

TEST_CASE("trivial action gives the direct product C6") {
  SemidirectGroup sd(AbelianGroupSpec({3}), Group::from_permutations({{1, 0}}),
                     {{{1}}});
  CHECK(sd.group().order() == 6);
  CHECK(sd.group().is_abelian());
}

TEST_CASE("non-automorphism action is rejected") {
  CHECK_THROWS_AS(
      SemidirectGroup(AbelianGroupSpec({4}), Group::from_permutations({{1, 0}}),
                      {{{2}}}),
      ValidationError);
  // order-mismatch: n -> -n is an automorphism but h -> phi(h) must be a
  // homomorphism; C3 generator acting by inversion has order 2, not 3
  CHECK_THROWS_AS(
      SemidirectGroup(AbelianGroupSpec({5}), Group::from_permutations({{1, 2, 0}}),
                      {{{-1}}}),
      ValidationError);
}

TEST_CASE("congruence condition for heterogeneous moduli") {
  // map (a, b) -> (a + 2b mod 2... ) entry A(0,1) maps Z_4 -> Z_2 and needs
  // A_01 * 4 = 0 mod 2 (always true); A(1,0) maps Z_2 -> Z_4 and needs
  // A_10 * 2 = 0 mod 4, i.e. A_10 even.
  CHECK_THROWS_AS(
      SemidirectGroup(AbelianGroupSpec({2, 4}),
                      Group::from_permutations({{1, 0}}),
                      {{{1, 0}, {1, 1}}}),
      ValidationError);
  SemidirectGroup ok(AbelianGroupSpec({2, 4}), Group::from_permutations({{1, 0}}),
                     {{{1, 0}, {2, 1}}});
  CHECK(ok.group().order() == 16);
}

TEST_CASE("left cosets") {
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  Subgroup whole = Subgroup::whole(s3);
  Subgroup a3 = Subgroup::generated(s3, {s3.generators()[0]});
  CHECK(a3.order() == 3);
  auto reps = left_coset_reps(whole, a3);
  CHECK(reps.size() == 2);
  CHECK(reps[0] == s3.identity());
  // cosets partition G
  std::set<int> all;
  for (int t : reps)
    for (int h : a3.elements()) all.insert(s3.mult(t, h));
  CHECK(all.size() == 6);

  CHECK(left_coset_reps(whole, whole) == std::vector<int>{0});

  SemidirectGroup c4(AbelianGroupSpec({4}), Group::trivial(), {});
  Subgroup c2 = Subgroup::generated(c4.group(), {c4.embed_N(2)});
  auto creps = left_coset_reps(Subgroup::whole(c4.group()), c2);
  CHECK(creps == std::vector<int>({0, c4.embed_N(1)}));
}

TEST_CASE("double cosets") {
  // H normal of index 2: double cosets equal cosets
  SemidirectGroup c4(AbelianGroupSpec({4}), Group::trivial(), {});
  Subgroup c2 = Subgroup::generated(c4.group(), {c4.embed_N(2)});
  Subgroup whole = Subgroup::whole(c4.group());
  CHECK(double_coset_reps(whole, c2, c2).size() == 2);

  // S3 with H = <b>: double cosets have sizes 2 and 4
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  Subgroup b = Subgroup::generated(s3, {s3.generators()[1]});
  Subgroup s3w = Subgroup::whole(s3);
  auto dreps = double_coset_reps(s3w, b, b);
  CHECK(dreps.size() == 2);
  std::vector<int> sizes;
  for (int d : dreps) {
    std::set<int> coset;
    for (int x : b.elements())
      for (int y : b.elements()) coset.insert(s3.mult(s3.mult(x, d), y));
    sizes.push_back(static_cast<int>(coset.size()));
  }
  CHECK(sizes == std::vector<int>({2, 4}));

  // trivial subgroups: every element is its own double coset
  Subgroup triv = Subgroup::trivial(s3);
  CHECK(double_coset_reps(s3w, triv, triv).size() == 6);

  // double cosets partition G
  Subgroup other = Subgroup::generated(s3, {1});
  int total = 0;
  for (int d : double_coset_reps(s3w, b, other)) {
    std::set<int> coset;
    for (int x : b.elements())
      for (int y : other.elements()) coset.insert(s3.mult(s3.mult(x, d), y));
    total += static_cast<int>(coset.size());
  }
  CHECK(total == 6);
}

TEST_CASE("conjugate intersections") {
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  Subgroup a3 = Subgroup::generated(s3, {s3.generators()[0]});
  Subgroup b = Subgroup::generated(s3, {s3.generators()[1]});
  int a = s3.generators()[0];

  // normal subgroup: H^(x) = H for every x
  for (int x = 0; x < s3.order(); ++x)
    CHECK(conj_intersection(a3, x).order() == 3);
  // x in H: H^(x) = H
  CHECK(conj_intersection(b, s3.generators()[1]).order() == 2);
  // S3, H = <b>, x = a: a b a^-1 is a different reflection
  CHECK(conj_intersection(b, a).order() == 1);

  // Lagrange on every subgroup we built
  for (const Subgroup& s : {a3, b, conj_intersection(b, a)})
    CHECK(s3.order() % s.order() == 0);
}

TEST_CASE("subgroup from elements validates closure") {
  Group s3 = Group::from_permutations({{1, 2, 0}, {1, 0, 2}});
  CHECK_THROWS_AS(Subgroup::from_elements(s3, {0, s3.generators()[0]}),
                  ValidationError);
  CHECK(Subgroup::from_elements(s3, {0}).order() == 1);
}
