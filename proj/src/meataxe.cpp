#include <algorithm>
#include <random>

#include "gfrep/poly.hpp"
#include "gfrep/rep.hpp"

namespace gfrep {

namespace {

// Projective point count (q^d - 1)/(q - 1), capped to avoid overflow.
uint64_t projective_points(uint64_t q, int d, uint64_t cap) {
  uint64_t total = 0, power = 1;
  for (int i = 0; i < d; ++i) {
    total += power;
    if (total > cap) return cap + 1;
    if (power > cap) return cap + 1;
    power *= q;
  }
  return total;
}

constexpr uint64_t kOracleCap = 1ull << 14;

std::vector<VecGF> unit_witness(const Field& F, int dim) {
  VecGF v = zeros(F, dim, 1).col(0);
  v(0) = F.one();
  return {v};
}

void verify_witness(const std::vector<VecGF>& w,
                    const std::vector<MatGF>& gens, int dim) {
  if (w.empty() || static_cast<int>(w.size()) >= dim)
    throw CertificationError("witness subspace is not proper and nonzero");
  if (!is_invariant_subspace(w, gens))
    throw CertificationError("witness subspace is not invariant");
}

struct MeatAxeOutcome {
  bool conclusive = false;
  bool irreducible = false;
  std::vector<VecGF> witness;
};

MeatAxeOutcome meataxe_once(const std::vector<MatGF>& gens, int dim,
                            const Field& F, std::mt19937_64& rng,
                            uint64_t factor_seed) {
  MeatAxeOutcome out;
  // Random element of the enveloping algebra: a short sum of products
  // of generators with nonzero coefficients.
  MatGF z = zeros(F, dim, dim);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    MatGF w = identity(F, dim);
    int len = 1 + static_cast<int>(rng() % 3);
    for (int l = 0; l < len; ++l)
      w = (w * gens[rng() % gens.size()]).eval();
    GF c = GF(&F, 1 + static_cast<uint32_t>(rng() % (F.q() - 1)));
    for (int r = 0; r < dim; ++r)
      for (int cc = 0; cc < dim; ++cc) z(r, cc) += c * w(r, cc);
  }

  PolyGF mp = min_poly(z);
  if (mp.deg() < 1) return out;
  auto factors = factor_poly(mp, factor_seed);
  for (const auto& [f, mult] : factors) {
    MatGF E = eval_poly_at(f, z);
    auto null = nullspace(E);
    if (null.empty()) throw CertificationError("minpoly factor has no kernel");
    auto S = spin({null[0]}, gens);
    if (static_cast<int>(S.size()) < dim) {
      verify_witness(S, gens, dim);
      out.conclusive = true;
      out.irreducible = false;
      out.witness = std::move(S);
      return out;
    }
    if (static_cast<int>(null.size()) != f.deg()) continue;
    // Norton's criterion: with nullity == deg f, one spin on each side
    // decides. Reducibility of the transpose module yields a witness in
    // the original as the perp of the spun dual subspace.
    std::vector<MatGF> gensT;
    gensT.reserve(gens.size());
    for (const auto& g : gens) gensT.push_back(g.transpose());
    auto nullT = nullspace(MatGF(E.transpose()));
    if (nullT.empty())
      throw CertificationError("transpose kernel empty with equal nullity");
    auto ST = spin({nullT[0]}, gensT);
    if (static_cast<int>(ST.size()) < dim) {
      auto W = perp(F, ST, dim);
      verify_witness(W, gens, dim);
      out.conclusive = true;
      out.irreducible = false;
      out.witness = std::move(W);
      return out;
    }
    out.conclusive = true;
    out.irreducible = true;
    return out;
  }
  return out;
}

}  // namespace

bool oracle_feasible(const Representation& M) {
  return projective_points(M.field().q(), M.dim(), kOracleCap) <= kOracleCap;
}

std::optional<bool> exhaustive_spin_irreducible(const Representation& M) {
  if (!oracle_feasible(M)) return std::nullopt;
  const Field& F = M.field();
  int d = M.dim();
  if (d == 1) return true;
  const auto& gens = M.gen_images();
  if (gens.empty()) return false;  // trivial group, d > 1
  uint64_t q = F.q();
  // One representative per projective point: first nonzero coordinate 1.
  std::vector<uint32_t> coord(d, 0);
  for (int lead = d - 1; lead >= 0; --lead) {
    std::fill(coord.begin(), coord.end(), 0u);
    coord[lead] = 1;
    while (true) {
      VecGF v(d);
      for (int i = 0; i < d; ++i) v(i) = GF(&F, coord[i]);
      auto S = spin({v}, gens);
      if (static_cast<int>(S.size()) < d) return false;
      // odometer over coordinates lead+1..d-1
      int pos = lead + 1;
      while (pos < d) {
        if (++coord[pos] < q) break;
        coord[pos] = 0;
        ++pos;
      }
      if (pos == d) break;
    }
  }
  return true;
}

IrreducibilityResult is_irreducible(const Representation& M, uint64_t seed,
                                    bool force_oracle) {
  const Field& F = M.field();
  int d = M.dim();
  if (d == 0) throw ValidationError("irreducibility of the zero module");
  if (M.domain().order() % static_cast<int>(F.p()) == 0)
    throw HypothesisError(
        "irreducibility test requires char not dividing the group order");
  if (d == 1) return {true, {}};
  const auto& gens = M.gen_images();
  if (gens.empty()) {
    auto w = unit_witness(F, d);
    return {false, w};
  }

  std::mt19937_64 rng(seed);
  MeatAxeOutcome mx;
  for (int tries = 0; tries < 64 && !mx.conclusive; ++tries)
    mx = meataxe_once(gens, d, F, rng, seed + tries);

  if (force_oracle || !mx.conclusive) {
    auto oracle = exhaustive_spin_irreducible(M);
    if (oracle) {
      if (mx.conclusive && mx.irreducible != *oracle)
        throw CertificationError(
            "MeatAxe verdict disagrees with the exhaustive spin oracle");
      if (!*oracle && !mx.conclusive) {
        // Recover a witness: first projective vector that spins proper.
        // The oracle said reducible, so one exists.
        uint64_t q = F.q();
        std::vector<uint32_t> coord(d, 0);
        for (int lead = d - 1; lead >= 0; --lead) {
          std::fill(coord.begin(), coord.end(), 0u);
          coord[lead] = 1;
          while (true) {
            VecGF v(d);
            for (int i = 0; i < d; ++i) v(i) = GF(&F, coord[i]);
            auto S = spin({v}, gens);
            if (static_cast<int>(S.size()) < d) return {false, S};
            int pos = lead + 1;
            while (pos < d) {
              if (++coord[pos] < q) break;
              coord[pos] = 0;
              ++pos;
            }
            if (pos == d) break;
          }
        }
        throw CertificationError("oracle verdict lost its witness");
      }
      return {*oracle, mx.conclusive ? std::move(mx.witness)
                                     : std::vector<VecGF>{}};
    }
  }
  if (!mx.conclusive)
    throw CertificationError(
        "MeatAxe failed to reach a verdict and the oracle is infeasible");
  return {mx.irreducible, std::move(mx.witness)};
}

namespace {

struct SubRep {
  MatGF embedding;  // columns: basis of the subspace inside the parent
  Representation rep;
};

Representation subspace_action(const Representation& R, const MatGF& basis) {
  // T_g with R(g) * basis = basis * T_g, per generator.
  std::vector<MatGF> images;
  images.reserve(R.gen_images().size());
  for (const auto& g : R.gen_images())
    images.push_back(solve_exact(basis, (g * basis).eval()));
  return Representation(R.domain(), R.field_ptr(), std::move(images), false,
                        static_cast<int>(basis.cols()));
}

void split_recursive(const Representation& R, const MatGF& embedding,
                     uint64_t seed, std::vector<SubRep>& out) {
  auto res = is_irreducible(R, seed);
  if (res.irreducible) {
    out.push_back({embedding, R});
    return;
  }
  const Field& F = R.field();
  int d = R.dim();
  int s = static_cast<int>(res.witness.size());
  MatGF W = basis_matrix(F, res.witness, d);

  // Projector onto W along the coordinate complement of its pivots.
  MatGF B = zeros(F, d, d);
  {
    std::vector<char> used(d, 0);
    for (int j = 0; j < s; ++j) {
      int pivot = -1;
      for (int i = 0; i < d; ++i)
        if (!res.witness[j](i).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0)
        throw CertificationError("zero vector in a witness basis");
      used[pivot] = 1;
      for (int i = 0; i < d; ++i) B(i, j) = W(i, j);
    }
    int col = s;
    for (int i = 0; i < d; ++i)
      if (!used[i]) B(i, col++) = F.one();
  }
  MatGF Binv = inverse(B);
  MatGF P0 = zeros(F, d, d);
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < d; ++i)
      for (int t = 0; t < d; ++t) P0(i, t) += B(i, j) * Binv(j, t);

  // Average into an equivariant projector (Maschke; char does not
  // divide the order, so |H| is invertible in K).
  const Subgroup& Hsub = R.domain();
  MatGF pi = zeros(F, d, d);
  for (int h : Hsub.elements()) {
    const MatGF& img = R.image(h);
    const MatGF& img_inv = R.image(Hsub.group().inverse(h));
    pi += (img * P0 * img_inv).eval();
  }
  GF scale = inv(F.elem(Hsub.order()));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) pi(i, j) = pi(i, j) * scale;

  // Image of pi is W; kernel is its invariant complement.
  auto complement = nullspace(pi);
  if (static_cast<int>(complement.size()) != d - s)
    throw CertificationError("projector kernel has wrong dimension");
  for (const auto& w : res.witness) {
    VecGF pw = (pi * w).eval();
    if (pw != w)
      throw CertificationError("averaged projector does not fix the subspace");
  }
  MatGF U = basis_matrix(F, complement, d);

  split_recursive(subspace_action(R, W), (embedding * W).eval(), seed, out);
  split_recursive(subspace_action(R, U), (embedding * U).eval(), seed, out);
}

}  // namespace

DecompositionResult decompose(const Representation& M, uint64_t seed) {
  const Field& F = M.field();
  if (M.domain().order() % static_cast<int>(F.p()) == 0)
    throw HypothesisError(
        "decomposition requires char not dividing the group order");
  std::vector<SubRep> parts;
  split_recursive(M, identity(F, M.dim()), seed, parts);

  DecompositionResult out;
  out.change_of_basis = zeros(F, M.dim(), M.dim());
  int offset = 0;
  for (const auto& part : parts) {
    int sz = part.rep.dim();
    for (int j = 0; j < sz; ++j)
      for (int i = 0; i < M.dim(); ++i)
        out.change_of_basis(i, offset + j) = part.embedding(i, j);
    // match against known classes
    int cls = -1;
    for (size_t c = 0; c < out.summands.size(); ++c) {
      if (out.summands[c].first.dim() == sz &&
          intertwining_number(out.summands[c].first, part.rep) != 0) {
        cls = static_cast<int>(c);
        break;
      }
    }
    if (cls < 0) {
      out.summands.emplace_back(part.rep, 1);
      cls = static_cast<int>(out.summands.size()) - 1;
    } else {
      out.summands[cls].second++;
    }
    out.blocks.push_back({offset, sz, cls});
    offset += sz;
  }
  if (offset != M.dim())
    throw CertificationError("decomposition dimensions do not add up");
  if (!is_invertible(out.change_of_basis))
    throw CertificationError("change of basis is singular");
  return out;
}

std::vector<Representation> irreducibles_of_group(const Subgroup& H,
                                                  const FieldPtr& F,
                                                  uint64_t seed) {
  if (H.order() % static_cast<int>(F->p()) == 0)
    throw HypothesisError("characteristic divides the group order");
  auto dec = decompose(regular_rep(H, F), seed);
  std::vector<Representation> irr;
  irr.reserve(dec.summands.size());
  for (auto& [rep, mult] : dec.summands) irr.push_back(rep);

  auto encoding = [](const Representation& r) {
    std::vector<uint32_t> code;
    for (const auto& m : r.gen_images())
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          code.push_back(m(i, j).code());
    return code;
  };
  std::sort(irr.begin(), irr.end(),
            [&](const Representation& a, const Representation& b) {
              if (a.dim() != b.dim()) return a.dim() < b.dim();
              return encoding(a) < encoding(b);
            });

  // Wedderburn certification: sum dim^2 / i(V,V) must hit |H| exactly.
  int64_t sum = 0;
  for (const auto& r : irr) {
    int e = intertwining_number(r, r);
    if (e <= 0 || (r.dim() * r.dim()) % e != 0)
      throw CertificationError("endomorphism dimension does not divide dim^2");
    sum += static_cast<int64_t>(r.dim()) * r.dim() / e;
  }
  if (sum != H.order())
    throw CertificationError(
        "irreducible list failed the Wedderburn completeness count");
  return irr;
}

}  // namespace gfrep
