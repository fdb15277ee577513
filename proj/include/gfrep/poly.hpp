#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "gfrep/linalg.hpp"

namespace gfrep {

// Dense univariate polynomial over a Field; little-endian coefficient
// codes, normalized (no trailing zeros). Zero polynomial = empty coeffs.
class PolyGF {
 public:
  explicit PolyGF(const Field& F) : F_(&F) {}
  PolyGF(const Field& F, std::vector<uint32_t> codes)
      : F_(&F), c_(std::move(codes)) {
    normalize_();
  }
  static PolyGF from_ints(const Field& F, const std::vector<int64_t>& cs);
  static PolyGF x(const Field& F) { return PolyGF(F, {0, 1}); }
  static PolyGF constant(const Field& F, GF v) {
    return PolyGF(F, {v.bind(F).code()});
  }

  const Field& field() const { return *F_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  GF coeff(int i) const {
    return GF(F_, i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0);
  }
  uint32_t code_at(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<uint32_t>& codes() const { return c_; }
  GF lead() const { return coeff(deg()); }

  GF eval(GF x) const;

  friend PolyGF operator+(const PolyGF& a, const PolyGF& b);
  friend PolyGF operator-(const PolyGF& a, const PolyGF& b);
  friend PolyGF operator*(const PolyGF& a, const PolyGF& b);
  friend bool operator==(const PolyGF& a, const PolyGF& b) {
    return a.c_ == b.c_ && a.F_->same_as(*b.F_);
  }
  friend bool operator!=(const PolyGF& a, const PolyGF& b) {
    return !(a == b);
  }
  friend std::ostream& operator<<(std::ostream& os, const PolyGF& f);

 private:
  void normalize_() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  const Field* F_;
  std::vector<uint32_t> c_;
};

std::pair<PolyGF, PolyGF> divmod(const PolyGF& a, const PolyGF& b);
PolyGF gcd(const PolyGF& a, const PolyGF& b);  // monic
PolyGF monic(const PolyGF& a);
PolyGF derivative(const PolyGF& a);
PolyGF pow_mod(const PolyGF& base, uint64_t e, const PolyGF& mod);
PolyGF mul_mod(const PolyGF& a, const PolyGF& b, const PolyGF& mod);
PolyGF lcm(const PolyGF& a, const PolyGF& b);

// Complete factorization into monic irreducibles with multiplicities,
// sorted by (degree, coefficient codes). Squarefree decomposition,
// then distinct-degree splitting, then Cantor-Zassenhaus equal-degree
// splitting with randomness from the given seed.
std::vector<std::pair<PolyGF, int>> factor_poly(const PolyGF& f,
                                                uint64_t seed = 0);

bool is_irreducible_poly(const PolyGF& f);

// Minimal polynomial of a square matrix (monic, least degree, f(M) = 0).
PolyGF min_poly(const MatGF& M);

// Horner evaluation f(M).
MatGF eval_poly_at(const PolyGF& f, const MatGF& M);

}  // namespace gfrep
