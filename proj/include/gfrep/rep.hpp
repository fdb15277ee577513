#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gfrep/group.hpp"
#include "gfrep/linalg.hpp"

namespace gfrep {

// K-representation of a subgroup: one invertible matrix per domain
// generator; images of arbitrary elements are derived from generator
// words and cached. Immutable after construction.
class Representation {
 public:
  // dim_hint fixes the dimension when the domain has no generators
  // (trivial subgroup), where no image carries it.
  Representation(Subgroup domain, FieldPtr field, std::vector<MatGF> images,
                 bool validate = true, int dim_hint = -1);

  const Subgroup& domain() const { return domain_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int dim() const { return dim_; }
  const std::vector<MatGF>& gen_images() const { return images_; }

  // Image of an ambient element (must lie in the domain).
  const MatGF& image(int element) const;

  // Images on a common generating set, for Hom computations.
  std::vector<MatGF> images_of(const std::vector<int>& elements) const;

  // Re-checks the homomorphism property; throws on failure.
  void check_homomorphism(bool full) const;

 private:
  struct Cache;
  Subgroup domain_;
  FieldPtr field_;
  int dim_;
  std::vector<MatGF> images_;
  std::shared_ptr<Cache> cache_;
};

Representation rep_from_images(Subgroup domain, FieldPtr field,
                               std::vector<MatGF> images);
Representation trivial_rep(Subgroup domain, FieldPtr field);
Representation regular_rep(Subgroup domain, FieldPtr field);

// Same space, images only for S's generators. Requires S <= domain.
Representation restrict_rep(const Representation& V, const Subgroup& S);

// Induced representation with basis ordered coset-rep-major; for g the
// image is the block permutation determined by g*t_i = t_j * h with
// block rho(h) at (j, i). Requires L.domain <= T.
Representation induce(const Representation& L, const Subgroup& T);

// Representation of xHx^-1 given by g -> rho(x^-1 g x).
Representation conjugate_rep(const Representation& L, int x);

// dim Hom_{KH}(M, N); domains must coincide as element sets.
int intertwining_number(const Representation& M, const Representation& N);
std::vector<MatGF> hom_basis(const Representation& M,
                             const Representation& N);

// i(M, N) == 0, valid under char not dividing |H| (throws otherwise).
bool is_disjoint(const Representation& M, const Representation& N);

struct IrreducibilityResult {
  bool irreducible;
  // Echelon basis of a proper nonzero invariant subspace when reducible.
  std::vector<VecGF> witness;
};

// MeatAxe-style test with Norton's criterion; falls back to the
// exhaustive spin oracle on small modules when inconclusive. When
// force_oracle is set and the oracle is feasible, both run and must
// agree.
IrreducibilityResult is_irreducible(const Representation& M,
                                    uint64_t seed = 0,
                                    bool force_oracle = false);

// Exhaustive oracle: spins one vector per projective point; feasible
// when (q^d - 1)/(q - 1) <= 2^14. Returns nullopt when out of range.
std::optional<bool> exhaustive_spin_irreducible(const Representation& M);
bool oracle_feasible(const Representation& M);

struct DecompositionResult {
  struct Block {
    int offset;
    int size;
    int summand;  // index into summands
  };
  std::vector<std::pair<Representation, int>> summands;  // (irreducible, mult)
  MatGF change_of_basis;  // conjugation block-diagonalizes all images
  std::vector<Block> blocks;
};

// Full decomposition into irreducibles (Maschke regime: char must not
// divide the domain order).
DecompositionResult decompose(const Representation& M, uint64_t seed = 0);

// Complete irredundant list of irreducibles over F, from the regular
// representation, sorted by (dim, generator-image encoding); certified
// by the Wedderburn count sum dim^2 / i(V,V) == |H|.
std::vector<Representation> irreducibles_of_group(const Subgroup& H,
                                                  const FieldPtr& F,
                                                  uint64_t seed = 0);

// Explicit invertible intertwiner between isomorphic irreducibles.
std::optional<MatGF> find_iso_intertwiner(const Representation& M,
                                          const Representation& N,
                                          uint64_t seed = 0);
bool is_isomorphic_irreducible(const Representation& M,
                               const Representation& N);

}  // namespace gfrep
