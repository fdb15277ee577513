#include "gfrep/littlegroups.hpp"

#include <algorithm>

#include "gfrep/mackey.hpp"

namespace gfrep {

GF Character::eval(int64_t ncode) const {
  auto v = N->decode(ncode);
  GF acc = on_gens.empty() ? GF(1) : on_gens[0].field()->one();
  for (size_t i = 0; i < on_gens.size(); ++i)
    acc = acc * pow(on_gens[i], v[i]);
  return acc;
}

std::vector<uint32_t> Character::value_codes() const {
  std::vector<uint32_t> out;
  out.reserve(on_gens.size());
  for (const auto& g : on_gens) out.push_back(g.code());
  return out;
}

bool field_compat(const AbelianGroupSpec& N, const Field& F) {
  return (F.q() - 1) % static_cast<uint64_t>(N.exponent()) == 0;
}

std::vector<Character> characters(const AbelianGroupSpec& N,
                                  const FieldPtr& F) {
  if (N.order() % static_cast<int64_t>(F->p()) == 0)
    throw HypothesisError("characteristic divides |N|");
  if (N.moduli.empty())
    throw ValidationError("N must have at least one cyclic factor");
  std::vector<std::vector<uint32_t>> choices;
  size_t count = 1;
  for (int64_t m : N.moduli) {
    choices.push_back(F->roots_of_unity(static_cast<uint64_t>(m)));
    count *= choices.back().size();
  }
  std::vector<Character> out;
  out.reserve(count);
  std::vector<size_t> idx(choices.size(), 0);
  for (size_t n = 0; n < count; ++n) {
    Character c;
    c.N = &N;
    for (size_t i = 0; i < choices.size(); ++i)
      c.on_gens.push_back(GF(F.get(), choices[i][idx[i]]));
    out.push_back(std::move(c));
    // odometer, last coordinate fastest
    for (size_t pos = choices.size(); pos-- > 0;) {
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Character char_action(const SemidirectGroup& G, const Character& chi, int g) {
  const Group& Gg = G.group();
  Character out;
  out.N = chi.N;
  int ginv = Gg.inverse(g);
  for (int i = 0; i < G.N().rank(); ++i) {
    std::vector<int64_t> unit(G.N().rank(), 0);
    unit[i] = 1;
    int a = G.embed_N(G.N().encode(unit));
    int conj = Gg.mult(Gg.mult(ginv, a), g);  // g^-1 a g stays in N
    out.on_gens.push_back(chi.eval(G.n_part(conj)));
  }
  return out;
}

std::vector<OrbitData> orbits(const SemidirectGroup& G,
                              const std::vector<Character>& chars) {
  const Group& Gg = G.group();
  std::vector<OrbitData> out;
  std::vector<char> used(chars.size(), 0);
  for (size_t i = 0; i < chars.size(); ++i) {
    if (used[i]) continue;
    // orbit of chars[i] under all of G
    std::vector<Character> orbit;
    for (int g = 0; g < Gg.order(); ++g) {
      Character c = char_action(G, chars[i], g);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end())
        orbit.push_back(std::move(c));
    }
    std::sort(orbit.begin(), orbit.end());
    for (size_t j = i; j < chars.size(); ++j)
      if (!used[j] &&
          std::find(orbit.begin(), orbit.end(), chars[j]) != orbit.end())
        used[j] = 1;

    OrbitData od;
    od.rep = orbit.front();
    // stabilizer by direct test over every g in G
    std::vector<int> stab;
    for (int g = 0; g < Gg.order(); ++g)
      if (char_action(G, od.rep, g) == od.rep) stab.push_back(g);
    od.stabilizer = Subgroup::from_elements(Gg, std::move(stab));
    od.h_stabilizer = intersect(od.stabilizer, G.H_subgroup());
    od.orbit = std::move(orbit);

    // orbit-stabilizer and structure checks
    if (static_cast<int64_t>(od.orbit.size()) * od.stabilizer.order() !=
        Gg.order())
      throw CertificationError("orbit-stabilizer count failed");
    if (!od.stabilizer.contains_subgroup(G.N_subgroup()))
      throw CertificationError("stabilizer does not contain N");
    if (static_cast<int64_t>(od.h_stabilizer.order()) *
            G.N_subgroup().order() !=
        od.stabilizer.order())
      throw CertificationError("stabilizer is not N semidirect H_chi");
    // element-wise: I_chi = {(n, h) : h in H_chi}
    for (int g : od.stabilizer.elements())
      if (!od.h_stabilizer.contains(G.embed_H(G.h_part(g))))
        throw CertificationError("stabilizer element outside N * H_chi");
    out.push_back(std::move(od));
  }
  std::sort(out.begin(), out.end(), [](const OrbitData& a, const OrbitData& b) {
    return a.rep < b.rep;
  });
  return out;
}

Representation extend_character(const SemidirectGroup& G, const Character& chi,
                                const Subgroup& I, const FieldPtr& F) {
  if (chi.on_gens.empty())
    throw ValidationError("character has no values");
  std::vector<MatGF> images;
  images.reserve(I.generators().size());
  for (int g : I.generators()) {
    MatGF m(1, 1);
    m(0, 0) = chi.eval(G.n_part(g));
    images.push_back(std::move(m));
  }
  // Homomorphism on all pairs of I; fails iff I does not stabilize chi.
  const Group& Gg = I.group();
  for (int a : I.elements())
    for (int b : I.elements()) {
      GF va = chi.eval(G.n_part(a));
      GF vb = chi.eval(G.n_part(b));
      GF vab = chi.eval(G.n_part(Gg.mult(a, b)));
      if (va * vb != vab)
        throw ValidationError(
            "character extension is not a homomorphism on the stabilizer");
    }
  return Representation(I, F, std::move(images), false);
}

Representation tensor_char(const SemidirectGroup& G,
                           const Representation& chi_ext,
                           const Representation& rho) {
  if (chi_ext.dim() != 1)
    throw ValidationError("tensor_char expects a 1-dimensional extension");
  const Subgroup& I = chi_ext.domain();
  const Subgroup& Hj = rho.domain();
  if (!chi_ext.field().same_as(rho.field()))
    throw ValidationError("tensor factors over different fields");
  std::vector<MatGF> images;
  images.reserve(I.generators().size());
  for (int g : I.generators()) {
    int h = G.embed_H(G.h_part(g));
    if (!Hj.contains(h))
      throw ValidationError(
          "stabilizer generator projects outside H_chi; group mismatch");
    GF c = chi_ext.image(g)(0, 0);
    MatGF m = rho.image(h);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = c * m(i, j);
    images.push_back(std::move(m));
  }
  Representation out(I, rho.field_ptr(), std::move(images), false, rho.dim());
  out.check_homomorphism(true);
  return out;
}

std::pair<int64_t, bool> completeness_check(
    const std::vector<ClassificationEntry>& entries,
    const SemidirectGroup& G) {
  int64_t sum = 0;
  for (const auto& e : entries) {
    if (e.endo_dim <= 0 ||
        (static_cast<int64_t>(e.dim_theta) * e.dim_theta) % e.endo_dim != 0)
      throw CertificationError("endomorphism dimension does not divide dim^2");
    sum += static_cast<int64_t>(e.dim_theta) * e.dim_theta / e.endo_dim;
  }
  return {sum, sum == G.group().order()};
}

Classification classify(const SemidirectGroup& G, const FieldPtr& F,
                        uint64_t seed, bool force_oracle) {
  const Group& Gg = G.group();
  if (Gg.order() % static_cast<int64_t>(F->p()) == 0)
    throw HypothesisError("characteristic divides |G|");

  Classification out;
  out.field_compat = field_compat(G.N(), *F);
  auto chars = characters(G.N(), F);
  out.orbit_data = orbits(G, chars);
  Subgroup whole = Subgroup::whole(Gg);

  for (size_t j = 0; j < out.orbit_data.size(); ++j) {
    const OrbitData& od = out.orbit_data[j];
    Representation chi_ext = extend_character(G, od.rep, od.stabilizer, F);
    auto irr = irreducibles_of_group(od.h_stabilizer, F, seed);
    for (size_t ri = 0; ri < irr.size(); ++ri) {
      Representation w = tensor_char(G, chi_ext, irr[ri]);
      // The tensor stays irreducible when rho is; verify.
      if (!is_irreducible(w, seed).irreducible)
        throw CertificationError("chi (x) rho failed its irreducibility check");
      // Two independent certification routes: the double-coset
      // sufficiency criterion, and the generic irreducibility test on
      // the induced module (direct_irreducible inside the report).
      MackeyReport mk = mackey_sufficient(w, whole, seed);
      if (!mk.condition_holds || !mk.direct_irreducible)
        throw CertificationError(
            "little-groups entry failed its irreducibility certification");
      ClassificationEntry entry{
          static_cast<int>(j + 1),
          od.rep,
          static_cast<int>(ri),
          irr[ri],
          induce(w, whole),
          mk.induced_dim,
          mk.i_induced,
          true};
      if (entry.dim_theta !=
          (Gg.order() / od.stabilizer.order()) * irr[ri].dim())
        throw CertificationError("dim theta != [G : I_j] * dim rho");
      if (force_oracle) {
        auto oracle = exhaustive_spin_irreducible(entry.theta);
        if (oracle && !*oracle)
          throw CertificationError("oracle rejected a classified entry");
      }
      out.entries.push_back(std::move(entry));
    }
  }

  // Pairwise non-isomorphism of the classified entries, computed.
  for (size_t a = 0; a < out.entries.size(); ++a)
    for (size_t b = a + 1; b < out.entries.size(); ++b)
      if (intertwining_number(out.entries[a].theta, out.entries[b].theta) !=
          0)
        throw CertificationError("two classified entries intertwine");

  auto [sum, complete] = completeness_check(out.entries, G);
  out.sum = sum;
  out.complete = complete;
  if (out.field_compat && !out.complete)
    throw CertificationError(
        "field_compat holds but the Wedderburn count missed |G|");
  return out;
}

MatchResult match_irreducible(const Representation& V, const Classification& C,
                              const SemidirectGroup& G, uint64_t seed) {
  if (!is_irreducible(V, seed).irreducible)
    throw HypothesisError("match_irreducible needs an irreducible module");
  const FieldPtr& F = V.field_ptr();

  // V_chi: joint eigenspace for N's generators.
  auto chars = characters(G.N(), F);
  bool any_nonzero = false;
  for (const auto& chi : chars) {
    std::vector<MatGF> rows;
    for (int i = 0; i < G.N().rank(); ++i) {
      std::vector<int64_t> unit(G.N().rank(), 0);
      unit[i] = 1;
      int a = G.embed_N(G.N().encode(unit));
      MatGF m = V.image(a);
      GF lambda = chi.on_gens[i];
      for (int r = 0; r < V.dim(); ++r) m(r, r) = m(r, r) - lambda;
      rows.push_back(std::move(m));
    }
    MatGF sys(static_cast<Eigen::Index>(rows.size()) * V.dim(), V.dim());
    for (size_t r = 0; r < rows.size(); ++r)
      for (int i = 0; i < V.dim(); ++i)
        for (int j = 0; j < V.dim(); ++j)
          sys(static_cast<Eigen::Index>(r) * V.dim() + i, j) = rows[r](i, j);
    if (!nullspace(sys).empty()) {
      any_nonzero = true;
      break;
    }
  }
  MatchResult res;
  if (!any_nonzero) return res;  // no one-dimensional N-composition factor

  int found = -1;
  for (size_t i = 0; i < C.entries.size(); ++i) {
    if (C.entries[i].dim_theta != V.dim()) continue;
    if (intertwining_number(V, C.entries[i].theta) != 0) {
      if (found >= 0)
        throw CertificationError(
            "multiple classification entries match one irreducible");
      found = static_cast<int>(i);
    }
  }
  if (found < 0)
    throw CertificationError(
        "V_chi is nonzero but no classification entry matches");
  res.matched = true;
  res.entry_index = found;
  return res;
}

}  // namespace gfrep
