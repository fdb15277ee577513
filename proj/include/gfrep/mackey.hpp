#pragma once

#include <string>
#include <vector>

#include "gfrep/rep.hpp"

namespace gfrep {

// Per-double-coset intertwining data for the sufficiency test. Row
// order follows the canonical double-coset enumeration; the identity
// coset comes first and contributes i(L, L).
struct DoubleCosetRow {
  int coset_rep;         // canonical representative d of H d H
  std::string rep_word;  // d rendered over the group's generator names
  int conjugator;        // x = d^-1, the element the i-value is computed with
  int hx_order;          // |x H x^-1 ∩ H|
  int i_value;           // i(x ⊗ L, L) over that intersection
};

struct MackeyReport {
  std::vector<DoubleCosetRow> rows;
  int i_LL = 0;
  int total = 0;       // sum over rows; must equal i_induced
  int i_induced = 0;   // i(L^G, L^G) computed directly (cross-check)
  int induced_dim = 0;
  bool condition_holds = false;      // all non-identity rows vanish
  bool irreducible_by_criterion = false;  // = condition_holds
  bool direct_irreducible = false;   // independent verdict on L^G
};

// i(x ⊗ L1, L2) over x H1 x^-1 ∩ H2, the y = 1 specialization used
// throughout; the value depends only on the double coset of x^-1.
int double_coset_intertwining(const Representation& L1,
                              const Representation& L2, int x);

// Full sufficiency report for L^G. Requires L irreducible and char not
// dividing |G|; the intertwining-number formula total == i(L^G, L^G)
// is verified internally and a violation raises CertificationError.
MackeyReport mackey_sufficient(const Representation& L, const Subgroup& G,
                               uint64_t seed = 0);

// i(L^G, L^G) == i(L, L), both computed directly.
bool proposition31_check(const Representation& L, const Subgroup& G,
                         uint64_t seed = 0);

// Monomial criterion for 1-dimensional rho: every double-coset rep
// x outside H admits y in xHx^-1 ∩ H with rho(y) != rho(x^-1 y x).
bool monomial_criterion(const Representation& rho, const Subgroup& G);

// Verdict "non-isomorphic" for (L1)^G vs (L2)^G, both assumed
// irreducible (checked). Cross-checked against i((L1)^G, (L2)^G) == 0.
bool induced_isomorphism_test(const Representation& L1,
                              const Representation& L2, const Subgroup& G,
                              uint64_t seed = 0);

}  // namespace gfrep
