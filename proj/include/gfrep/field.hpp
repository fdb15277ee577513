#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <type_traits>
#include <vector>

#include "gfrep/errors.hpp"

namespace gfrep {

class Field;
class GF;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^k) context. Elements are codes in [0, q), q = p^k, encoding the
// little-endian base-p digits of a polynomial residue mod min_poly.
// Multiplication runs on discrete log/exp tables built at construction;
// addition is digitwise (dense table for small q). Immutable once built,
// safe to share across threads.
class Field {
 public:
  // k == 1 needs no min_poly; k > 1 requires a monic irreducible of degree
  // k over GF(p), little-endian coefficients. Throws ValidationError.
  static FieldPtr make(uint64_t p, uint32_t k,
                       const std::vector<int64_t>& min_poly = {});

  uint64_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint64_t q() const { return q_; }
  // Empty for k == 1, else length k+1, monic, little-endian.
  const std::vector<uint32_t>& min_poly() const { return minpoly_; }
  std::string name() const;

  // Arithmetic on codes.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws ValidationError on 0
  uint32_t pow(uint32_t a, int64_t e) const;

  // Least d >= 1 with a^d = 1; throws ValidationError on 0.
  uint64_t mult_order(uint32_t a) const;
  // All solutions of x^d = 1 in K*, sorted by code; size gcd(d, q-1).
  std::vector<uint32_t> roots_of_unity(uint64_t d) const;
  // A fixed primitive element.
  uint32_t generator() const { return gen_; }

  // Embedding of integers via n -> n * 1.
  uint32_t embed_int(int64_t n) const;
  uint32_t encode(const std::vector<int64_t>& coeffs) const;
  std::vector<uint32_t> decode(uint32_t code) const;  // k digits, little-endian

  GF zero() const;
  GF one() const;
  GF elem(int64_t n) const;
  GF from_code(uint32_t code) const;
  GF from_coeffs(const std::vector<int64_t>& coeffs) const;

  bool same_as(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && minpoly_ == o.minpoly_;
  }

  // Row kernels over raw code arrays; the workhorses of elimination.
  // dst[i] += c * src[i]
  void row_axpy(uint32_t* dst, const uint32_t* src, uint32_t c,
                std::size_t n) const;
  // dst[i] *= c
  void row_scale(uint32_t* dst, uint32_t c, std::size_t n) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field() = default;
  void build_tables_();

  enum class Mode { kPrime, kAddTable, kDigits };

  uint64_t p_ = 0;
  uint32_t k_ = 0;
  uint64_t q_ = 0;
  Mode mode_ = Mode::kPrime;
  std::vector<uint32_t> minpoly_;
  uint32_t gen_ = 0;
  std::vector<uint32_t> exp_;   // size 2(q-1); exp_[i] = g^i
  std::vector<int32_t> log_;    // size q; log_[0] = -1
  std::vector<uint32_t> addtab_;  // q*q when mode == kAddTable
};

// Field element. A default-constructed or integer-constructed GF is an
// unbound literal (field pointer null); it binds to the other operand's
// field on first contact. Eigen's generic kernels materialize Scalar(0)
// and Scalar(1) literals, which is exactly what this accommodates.
class GF {
 public:
  GF() : f_(nullptr), v_(0) {}
  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  GF(T lit) : f_(nullptr), v_(static_cast<int64_t>(lit)) {}  // NOLINT
  GF(const Field* f, uint32_t code) : f_(f), v_(code) {}

  bool bound() const { return f_ != nullptr; }
  const Field* field() const { return f_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const;
  // Code of a bound element; literals must be resolved first.
  uint32_t code() const;
  int64_t literal() const { return v_; }

  GF bind(const Field& f) const;

  friend GF operator+(const GF& a, const GF& b);
  friend GF operator-(const GF& a, const GF& b);
  friend GF operator*(const GF& a, const GF& b);
  friend GF operator/(const GF& a, const GF& b);
  GF operator-() const;
  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  GF& operator/=(const GF& o) { return *this = *this / o; }
  friend bool operator==(const GF& a, const GF& b);
  friend bool operator!=(const GF& a, const GF& b) { return !(a == b); }

  friend GF inv(const GF& a);
  friend GF pow(const GF& a, int64_t e);
  friend std::ostream& operator<<(std::ostream& os, const GF& a);

 private:
  friend class Field;
  const Field* f_;
  int64_t v_;  // literal value when unbound, element code when bound
};

namespace detail {

inline const Field* common_field(const GF& a, const GF& b) {
  const Field* fa = a.field();
  const Field* fb = b.field();
  if (fa == fb) return fa;  // includes both-null
  if (!fa) return fb;
  if (!fb) return fa;
  if (fa->same_as(*fb)) return fa;
  throw ValidationError("mixed-field operands");
}

}  // namespace detail

inline GF GF::bind(const Field& f) const {
  if (f_) return *this;
  return GF(&f, f.embed_int(v_));
}

inline uint32_t GF::code() const {
  if (!f_) throw ValidationError("unbound field element has no code");
  return static_cast<uint32_t>(v_);
}

inline bool GF::is_one() const { return v_ == 1; }  // code 1 is the unit

inline GF operator+(const GF& a, const GF& b) {
  const Field* f = detail::common_field(a, b);
  if (!f) return GF(a.v_ + b.v_);
  return GF(f, f->add(a.bind(*f).code(), b.bind(*f).code()));
}

inline GF operator-(const GF& a, const GF& b) {
  const Field* f = detail::common_field(a, b);
  if (!f) return GF(a.v_ - b.v_);
  return GF(f, f->sub(a.bind(*f).code(), b.bind(*f).code()));
}

inline GF operator*(const GF& a, const GF& b) {
  const Field* f = detail::common_field(a, b);
  if (!f) return GF(a.v_ * b.v_);
  return GF(f, f->mul(a.bind(*f).code(), b.bind(*f).code()));
}

inline GF GF::operator-() const {
  if (!f_) return GF(-v_);
  return GF(f_, f_->neg(static_cast<uint32_t>(v_)));
}

inline GF inv(const GF& a) {
  if (!a.f_) {
    if (a.v_ == 1 || a.v_ == -1) return a;
    throw ValidationError(a.v_ == 0 ? "inverse of zero"
                                    : "cannot invert unbound literal");
  }
  return GF(a.f_, a.f_->inv(static_cast<uint32_t>(a.v_)));
}

inline GF operator/(const GF& a, const GF& b) { return a * inv(b); }

inline GF pow(const GF& a, int64_t e) {
  if (!a.f_) {
    if (a.v_ == 0 && e > 0) return GF(0);
    if (a.v_ == 1 || e == 0) return GF(1);
    throw ValidationError("cannot exponentiate unbound literal");
  }
  return GF(a.f_, a.f_->pow(static_cast<uint32_t>(a.v_), e));
}

inline bool operator==(const GF& a, const GF& b) {
  const Field* f = detail::common_field(a, b);
  if (!f) return a.v_ == b.v_;
  return a.bind(*f).code() == b.bind(*f).code();
}

inline GF Field::zero() const { return GF(this, 0); }
inline GF Field::one() const { return GF(this, 1); }
inline GF Field::elem(int64_t n) const { return GF(this, embed_int(n)); }
inline GF Field::from_code(uint32_t code) const {
  if (code >= q_) throw ValidationError("element code out of range");
  return GF(this, code);
}
inline GF Field::from_coeffs(const std::vector<int64_t>& coeffs) const {
  return GF(this, encode(coeffs));
}

}  // namespace gfrep
