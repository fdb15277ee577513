#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfrep/rep.hpp"
#include "gfrep/semidirect.hpp"

namespace gfrep {

// Element of the character group of N over K: one K*-value per cyclic
// generator, x_i^{m_i} = 1; evaluation is multiplicative over exponent
// vectors.
struct Character {
  const AbelianGroupSpec* N = nullptr;
  std::vector<GF> on_gens;

  GF eval(int64_t ncode) const;
  std::vector<uint32_t> value_codes() const;
  bool operator==(const Character& o) const {
    return value_codes() == o.value_codes();
  }
  bool operator<(const Character& o) const {
    return value_codes() < o.value_codes();
  }
};

// True iff exponent(N) divides q - 1; then every irreducible of N over
// K has degree 1 and the classification below is complete.
bool field_compat(const AbelianGroupSpec& N, const Field& F);

// All group homomorphisms N -> K*, lexicographically ordered by value
// vector; there are exactly prod gcd(m_i, q-1) of them.
std::vector<Character> characters(const AbelianGroupSpec& N,
                                  const FieldPtr& F);

// chi^g(a) = chi(g^-1 a g).
Character char_action(const SemidirectGroup& G, const Character& chi, int g);

struct OrbitData {
  Character rep;                 // lexicographically smallest member
  std::vector<Character> orbit;  // sorted
  Subgroup stabilizer;           // I_j, computed by direct test over G
  Subgroup h_stabilizer;         // H_j = I_j ∩ H
};

std::vector<OrbitData> orbits(const SemidirectGroup& G,
                              const std::vector<Character>& chars);

// The extension (n, h) -> chi(n) of chi to its stabilizer, trivial on
// H_chi; validated as a homomorphism on all pairs.
Representation extend_character(const SemidirectGroup& G, const Character& chi,
                                const Subgroup& I, const FieldPtr& F);

// (n, h) -> chi(n) * rho(h), rho pulled back through I -> H_j.
Representation tensor_char(const SemidirectGroup& G,
                           const Representation& chi_ext,
                           const Representation& rho);

struct ClassificationEntry {
  int orbit_index;  // j, 1-based to match the usual statement
  Character chi;
  int rho_index;
  Representation rho;    // irreducible of H_j
  Representation theta;  // induced to G
  int dim_theta;
  int endo_dim;  // i(theta, theta)
  bool certified_irreducible;
};

struct Classification {
  std::vector<OrbitData> orbit_data;
  std::vector<ClassificationEntry> entries;
  bool field_compat = false;
  int64_t sum = 0;       // Wedderburn count over the entries
  bool complete = false; // sum == |G|
};

// Full little-groups classification. Every entry is certified twice
// (double-coset sufficiency path and the generic irreducibility test)
// and all pairs are verified non-isomorphic; failures raise
// CertificationError. Under field_compat the count must reach |G|.
Classification classify(const SemidirectGroup& G, const FieldPtr& F,
                        uint64_t seed = 0, bool force_oracle = false);

std::pair<int64_t, bool> completeness_check(
    const std::vector<ClassificationEntry>& entries, const SemidirectGroup& G);

struct MatchResult {
  bool matched = false;
  int entry_index = -1;  // into Classification::entries when matched
  // set when no V_chi is nonzero:
  static constexpr const char* kNoFactorVerdict =
      "no one-dimensional N-composition factor";
};

// Locates the unique entry with i(V, theta) != 0, or reports that
// V restricted to N has no one-dimensional composition factor.
MatchResult match_irreducible(const Representation& V,
                              const Classification& C,
                              const SemidirectGroup& G, uint64_t seed = 0);

}  // namespace gfrep
