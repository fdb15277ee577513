#include "gfrep/semidirect.hpp"

#include <string>

namespace gfrep {

namespace {

ActionMatrix reduce_matrix(const ActionMatrix& A,
                           const std::vector<int64_t>& moduli) {
  ActionMatrix R(A.size(), std::vector<int64_t>(moduli.size()));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < moduli.size(); ++j) {
      int64_t v = A[i][j] % moduli[i];
      if (v < 0) v += moduli[i];
      R[i][j] = v;
    }
  return R;
}

ActionMatrix mat_mul(const ActionMatrix& A, const ActionMatrix& B,
                     const std::vector<int64_t>& moduli) {
  size_t r = moduli.size();
  ActionMatrix C(r, std::vector<int64_t>(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      int64_t acc = 0;
      for (size_t t = 0; t < r; ++t) acc += A[i][t] * B[t][j] % moduli[i];
      C[i][j] = acc % moduli[i];
    }
  return C;
}

ActionMatrix identity_action(const std::vector<int64_t>& moduli) {
  size_t r = moduli.size();
  ActionMatrix I(r, std::vector<int64_t>(r, 0));
  for (size_t i = 0; i < r; ++i) I[i][i] = 1 % moduli[i];
  return I;
}

int64_t apply_action(const ActionMatrix& A, const AbelianGroupSpec& N,
                     int64_t code) {
  auto v = N.decode(code);
  std::vector<int64_t> w(N.rank(), 0);
  for (int i = 0; i < N.rank(); ++i) {
    int64_t acc = 0;
    for (int j = 0; j < N.rank(); ++j)
      acc += A[i][j] * v[j] % N.moduli[i];
    w[i] = acc % N.moduli[i];
  }
  return N.encode(w);
}

}  // namespace

SemidirectGroup::SemidirectGroup(AbelianGroupSpec N, Group H,
                                 std::vector<ActionMatrix> action_on_gens,
                                 int order_bound)
    : N_(std::move(N)), H_(std::move(H)), action_gens_() {
  const int r = N_.rank();
  if (action_on_gens.size() != H_.generators().size())
    throw ValidationError("one action matrix required per H generator");
  for (size_t g = 0; g < action_on_gens.size(); ++g) {
    const auto& A = action_on_gens[g];
    if (static_cast<int>(A.size()) != r)
      throw ValidationError("action matrix row count != rank of N");
    for (const auto& row : A)
      if (static_cast<int>(row.size()) != r)
        throw ValidationError("action matrix column count != rank of N");
    // Well-definedness across heterogeneous moduli: A_ij * m_j = 0 mod m_i.
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        if (A[i][j] * N_.moduli[j] % N_.moduli[i] != 0)
          throw ValidationError(
              "action matrix " + std::to_string(g) +
              " is not a well-defined endomorphism (congruence condition)");
    action_gens_.push_back(reduce_matrix(A, N_.moduli));
  }

  const int64_t nN = N_.order();
  const int nH = H_.order();
  if (nN * nH > order_bound)
    throw ValidationError("semidirect product order exceeds bound");

  // Bijectivity of each generator action on N.
  for (size_t g = 0; g < action_gens_.size(); ++g) {
    std::vector<char> hit(nN, 0);
    for (int64_t c = 0; c < nN; ++c) {
      int64_t im = apply_action(action_gens_[g], N_, c);
      if (hit[im])
        throw ValidationError("action matrix " + std::to_string(g) +
                              " is not an automorphism of N");
      hit[im] = 1;
    }
  }

  // Extend to all of H along generator words and verify homomorphism
  // on every pair.
  phi_.assign(nH, identity_action(N_.moduli));
  for (int h = 0; h < nH; ++h) {
    ActionMatrix m = identity_action(N_.moduli);
    for (int gi : H_.word(h)) m = mat_mul(m, action_gens_[gi], N_.moduli);
    phi_[h] = m;
  }
  for (int a = 0; a < nH; ++a)
    for (int b = 0; b < nH; ++b)
      if (mat_mul(phi_[a], phi_[b], N_.moduli) != phi_[H_.mult(a, b)])
        throw ValidationError(
            "action does not extend to a homomorphism H -> Aut(N)");

  // Build the multiplication table: (n1,h1)(n2,h2) = (n1 + phi(h1)n2, h1h2).
  const int64_t order = nN * nH;
  std::vector<int32_t> table(static_cast<size_t>(order) * order);
  for (int64_t n1 = 0; n1 < nN; ++n1)
    for (int h1 = 0; h1 < nH; ++h1) {
      int a = static_cast<int>(n1 * nH + h1);
      for (int64_t n2 = 0; n2 < nN; ++n2) {
        int64_t moved = N_.add_codes(n1, apply_action(phi_[h1], N_, n2));
        for (int h2 = 0; h2 < nH; ++h2) {
          int b = static_cast<int>(n2 * nH + h2);
          table[static_cast<size_t>(a) * order + b] =
              static_cast<int32_t>(moved * nH + H_.mult(h1, h2));
        }
      }
    }

  // Generators: unit vectors of N first, then H's generators.
  std::vector<int> gens;
  std::vector<std::string> names;
  gens.reserve(r + H_.generators().size());
  names.reserve(r + H_.generators().size());
  for (int i = 0; i < r; ++i) {
    std::vector<int64_t> unit(r, 0);
    unit[i] = 1;
    gens.push_back(embed_N(N_.encode(unit)));
    names.push_back("n" + std::to_string(i));
  }
  for (size_t i = 0; i < H_.generators().size(); ++i) {
    gens.push_back(embed_H(H_.generators()[i]));
    names.push_back("h" + std::to_string(i));
  }
  G_ = Group::from_mult_table(std::move(table), std::move(gens),
                              std::move(names));

  // Subgroup views + structural checks.
  {
    std::vector<int> nelems;
    for (int64_t c = 0; c < nN; ++c) nelems.push_back(embed_N(c));
    N_sub_ = Subgroup::from_elements(G_, std::move(nelems));
    std::vector<int> helems;
    for (int h = 0; h < nH; ++h) helems.push_back(embed_H(h));
    H_sub_ = Subgroup::from_elements(G_, std::move(helems));
  }
  for (int g = 0; g < G_.order(); ++g)
    for (int e : N_sub_.elements())
      if (!N_sub_.contains(G_.conj(g, e)))
        throw CertificationError("N is not normal in the built group");
  for (int a = 0; a < nH; ++a)
    for (int b = 0; b < nH; ++b)
      if (G_.mult(embed_H(a), embed_H(b)) != embed_H(H_.mult(a, b)))
        throw CertificationError("H does not embed as a subgroup");
}

int64_t SemidirectGroup::act(int h, int64_t ncode) const {
  return apply_action(phi_[h], N_, ncode);
}

}  // namespace gfrep
