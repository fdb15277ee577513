#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "gfrep/group.hpp"

namespace gfrep {

// Finite abelian group as a product of cyclic groups Z_{m_1} x ... x Z_{m_r};
// elements are exponent vectors, stored as mixed-radix codes.
struct AbelianGroupSpec {
  std::vector<int64_t> moduli;  // each >= 2

  explicit AbelianGroupSpec(std::vector<int64_t> m) : moduli(std::move(m)) {
    for (int64_t mi : moduli)
      if (mi < 2) throw ValidationError("abelian moduli must be >= 2");
  }

  int rank() const { return static_cast<int>(moduli.size()); }
  int64_t order() const {
    int64_t o = 1;
    for (int64_t m : moduli) o *= m;
    return o;
  }
  int64_t exponent() const {
    int64_t e = 1;
    for (int64_t m : moduli) e = std::lcm(e, m);
    return e;
  }
  std::vector<int64_t> decode(int64_t code) const {
    std::vector<int64_t> v(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i) {
      v[i] = code % moduli[i];
      code /= moduli[i];
    }
    return v;
  }
  int64_t encode(const std::vector<int64_t>& v) const {
    int64_t code = 0;
    for (size_t i = moduli.size(); i-- > 0;) {
      int64_t r = v[i] % moduli[i];
      if (r < 0) r += moduli[i];
      code = code * moduli[i] + r;
    }
    return code;
  }
  int64_t add_codes(int64_t a, int64_t b) const {
    auto va = decode(a), vb = decode(b);
    for (size_t i = 0; i < moduli.size(); ++i) va[i] += vb[i];
    return encode(va);
  }
  int64_t neg_code(int64_t a) const {
    auto v = decode(a);
    for (auto& x : v) x = -x;
    return encode(v);
  }
};

// Integer matrix acting on exponent vectors; entry (i,j) taken mod m_i.
using ActionMatrix = std::vector<std::vector<int64_t>>;

// G = N x| H with H acting on N through automorphisms, one ActionMatrix
// per H-generator. Elements are pairs (n, h), indexed n*|H| + h; identity
// lands at 0, H embeds as (0, h), N as (n, 1), and N is normal.
class SemidirectGroup {
 public:
  SemidirectGroup(AbelianGroupSpec N, Group H,
                  std::vector<ActionMatrix> action_on_gens,
                  int order_bound = 4096);
  // Subgroup views point into this object; pin it in place.
  SemidirectGroup(const SemidirectGroup&) = delete;
  SemidirectGroup& operator=(const SemidirectGroup&) = delete;

  const Group& group() const { return G_; }
  const Group& H() const { return H_; }
  const AbelianGroupSpec& N() const { return N_; }
  const Subgroup& N_subgroup() const { return N_sub_; }
  const Subgroup& H_subgroup() const { return H_sub_; }
  const std::vector<ActionMatrix>& action_on_gens() const {
    return action_gens_;
  }

  int embed_N(int64_t ncode) const {
    return static_cast<int>(ncode * H_.order());
  }
  int embed_H(int h) const { return h; }
  int64_t n_part(int g) const { return g / H_.order(); }
  int h_part(int g) const { return g % H_.order(); }
  // Automorphism of N attached to H-element h, applied to a code.
  int64_t act(int h, int64_t ncode) const;
  const ActionMatrix& phi(int h) const { return phi_[h]; }

 private:
  AbelianGroupSpec N_;
  Group H_;
  std::vector<ActionMatrix> action_gens_;
  std::vector<ActionMatrix> phi_;  // per H element, entries reduced mod m_i
  Group G_;
  Subgroup N_sub_;
  Subgroup H_sub_;
};

}  // namespace gfrep
