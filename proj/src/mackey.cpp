#include "gfrep/mackey.hpp"

namespace gfrep {

namespace {

void require_char_ok(const Representation& L, const Subgroup& G) {
  if (G.order() % static_cast<int>(L.field().p()) == 0)
    throw HypothesisError("characteristic divides the group order");
}

void require_irreducible(const Representation& L, uint64_t seed,
                         const char* what) {
  if (!is_irreducible(L, seed).irreducible)
    throw HypothesisError(std::string(what) + " must be irreducible");
}

}  // namespace

int double_coset_intertwining(const Representation& L1,
                              const Representation& L2, int x) {
  const Subgroup& H1 = L1.domain();
  const Subgroup& H2 = L2.domain();
  if (&H1.group() != &H2.group())
    throw ValidationError("representations live in different ambient groups");
  Subgroup Hx = intersect(H1.conjugate_by(x), H2);
  Representation A = restrict_rep(conjugate_rep(L1, x), Hx);
  Representation B = restrict_rep(L2, Hx);
  return intertwining_number(A, B);
}

MackeyReport mackey_sufficient(const Representation& L, const Subgroup& G,
                               uint64_t seed) {
  require_char_ok(L, G);
  require_irreducible(L, seed, "L");
  const Subgroup& H = L.domain();
  if (!G.contains_subgroup(H))
    throw ValidationError("H is not a subgroup of G");
  const Group& Gg = G.group();

  MackeyReport rep;
  auto dreps = double_coset_reps(G, H, H);
  for (int d : dreps) {
    // The i-value belongs to the double coset of x^-1, so take x = d^-1.
    int x = Gg.inverse(d);
    DoubleCosetRow row;
    row.coset_rep = d;
    row.rep_word = Gg.word_name(d);
    row.conjugator = x;
    row.hx_order = conj_intersection(H, x).order();
    row.i_value = double_coset_intertwining(L, L, x);
    rep.rows.push_back(std::move(row));
  }
  rep.i_LL = rep.rows.front().i_value;
  rep.total = 0;
  rep.condition_holds = true;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    rep.total += rep.rows[i].i_value;
    if (i > 0 && rep.rows[i].i_value != 0) rep.condition_holds = false;
  }
  rep.irreducible_by_criterion = rep.condition_holds;

  Representation induced = induce(L, G);
  rep.induced_dim = induced.dim();
  rep.i_induced = intertwining_number(induced, induced);
  if (rep.i_induced != rep.total)
    throw CertificationError(
        "intertwining-number formula violated: sum over double cosets "
        "!= i(L^G, L^G)");
  rep.direct_irreducible = is_irreducible(induced, seed).irreducible;
  if (rep.condition_holds && !rep.direct_irreducible)
    throw CertificationError(
        "sufficiency condition held but the induced module is reducible");
  return rep;
}

bool proposition31_check(const Representation& L, const Subgroup& G,
                         uint64_t seed) {
  require_char_ok(L, G);
  require_irreducible(L, seed, "L");
  if (!G.contains_subgroup(L.domain()))
    throw ValidationError("H is not a subgroup of G");
  Representation induced = induce(L, G);
  int lhs = intertwining_number(induced, induced);
  int rhs = intertwining_number(L, L);
  return lhs == rhs;
}

bool monomial_criterion(const Representation& rho, const Subgroup& G) {
  if (rho.dim() != 1)
    throw HypothesisError("monomial criterion needs a 1-dimensional rho");
  require_char_ok(rho, G);
  const Subgroup& H = rho.domain();
  if (!G.contains_subgroup(H))
    throw ValidationError("H is not a subgroup of G");
  const Group& Gg = G.group();

  auto value = [&](int e) { return rho.image(e)(0, 0); };
  for (int d : double_coset_reps(G, H, H)) {
    if (H.contains(d)) continue;
    Subgroup Hd = conj_intersection(H, d);
    bool found = false;
    for (int y : Hd.elements()) {
      int conj = Gg.mult(Gg.mult(Gg.inverse(d), y), d);  // x^-1 y x
      if (value(y) != value(conj)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool induced_isomorphism_test(const Representation& L1,
                              const Representation& L2, const Subgroup& G,
                              uint64_t seed) {
  require_char_ok(L1, G);
  const Subgroup& H1 = L1.domain();
  const Subgroup& H2 = L2.domain();
  if (!G.contains_subgroup(H1) || !G.contains_subgroup(H2))
    throw ValidationError("subgroups must lie in G");
  Representation ind1 = induce(L1, G);
  Representation ind2 = induce(L2, G);
  require_irreducible(ind1, seed, "(L1)^G");
  require_irreducible(ind2, seed, "(L2)^G");

  // x must sweep one conjugator per (H1, H2)-double coset of x^-1,
  // i.e. x runs over (H2, H1)-double-coset representatives.
  bool all_disjoint = true;
  for (int x : double_coset_reps(G, H2, H1)) {
    if (double_coset_intertwining(L1, L2, x) != 0) {
      all_disjoint = false;
      break;
    }
  }
  bool direct_non_iso = intertwining_number(ind1, ind2) == 0;
  if (all_disjoint != direct_non_iso)
    throw CertificationError(
        "isomorphism test disagrees with the direct intertwining number");
  return all_disjoint;
}

}  // namespace gfrep
