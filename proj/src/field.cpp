#include "gfrep/field.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace gfrep {
namespace {

constexpr uint64_t kMaxQ = 1ull << 20;
constexpr uint64_t kAddTableMaxQ = 1024;  // dense q*q addition table below this

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over GF(p), little-endian coefficient vectors.
// Only used at construction time; element arithmetic runs on tables.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<uint32_t>(
          (c[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  // reduce mod monic f
  size_t df = f.size() - 1;
  for (size_t i = c.size(); i-- > df;) {
    uint32_t top = c[i];
    if (!top) continue;
    c[i] = 0;
    for (size_t j = 0; j < df; ++j) {
      uint64_t sub = static_cast<uint64_t>(top) * f[j] % p;
      c[i - df + j] =
          static_cast<uint32_t>((c[i - df + j] + p - sub) % p);
    }
  }
  c.resize(df);
  trim(c);
  return c;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint64_t p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  auto inv_mod = [p](uint64_t x) {
    // Fermat; p prime
    uint64_t e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    uint64_t lead_inv = inv_mod(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      uint64_t c = a.back() * lead_inv % p;
      if (c) {
        size_t off = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j)
          a[off + j] = static_cast<uint32_t>(
              (a[off + j] + p - c * b[j] % p) % p);
      }
      trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    trim(b);
  }
  return a;
}

}  // namespace

FieldPtr Field::make(uint64_t p, uint32_t k,
                     const std::vector<int64_t>& min_poly) {
  if (!is_prime(p)) throw ValidationError("field modulus p is not prime");
  if (k < 1) throw ValidationError("extension degree k must be >= 1");
  uint64_t q = 1;
  for (uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ) throw ValidationError("field too large (q > 2^20)");
  }

  auto F = FieldPtr(new Field());
  auto* f = const_cast<Field*>(F.get());
  f->p_ = p;
  f->k_ = k;
  f->q_ = q;

  if (k == 1) {
    if (!min_poly.empty())
      throw ValidationError("min_poly given for a prime field");
  } else {
    if (min_poly.size() != k + 1)
      throw ValidationError("min_poly must have degree k (length k+1)");
    Poly mp(k + 1);
    for (size_t i = 0; i <= k; ++i) {
      int64_t c = min_poly[i] % static_cast<int64_t>(p);
      if (c < 0) c += static_cast<int64_t>(p);
      mp[i] = static_cast<uint32_t>(c);
    }
    if (mp[k] != 1) throw ValidationError("min_poly must be monic");
    // Irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i < k and
    // x^(p^k) = x mod f.
    Poly xp = {0, 1};
    for (uint32_t i = 1; i <= k; ++i) {
      xp = poly_powmod(xp, p, mp, p);  // now x^(p^i) mod f
      Poly d = xp;
      // d - x
      if (d.size() < 2) d.resize(2, 0);
      d[1] = static_cast<uint32_t>((d[1] + p - 1) % p);
      trim(d);
      if (i < k) {
        Poly g = poly_gcd(mp, d, p);
        if (g.size() != 1)
          throw ValidationError("min_poly is reducible over GF(p)");
      } else {
        if (!d.empty())
          throw ValidationError("min_poly is reducible over GF(p)");
      }
    }
    f->minpoly_ = std::move(mp);
  }

  f->build_tables_();
  return F;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  return os.str();
}

uint32_t Field::embed_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return static_cast<uint32_t>(r);
}

uint32_t Field::encode(const std::vector<int64_t>& coeffs) const {
  if (coeffs.size() > k_)
    throw ValidationError("coefficient vector longer than extension degree");
  uint64_t code = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    int64_t c = coeffs[i] % static_cast<int64_t>(p_);
    if (c < 0) c += static_cast<int64_t>(p_);
    code = code * p_ + static_cast<uint64_t>(c);
  }
  return static_cast<uint32_t>(code);
}

std::vector<uint32_t> Field::decode(uint32_t code) const {
  std::vector<uint32_t> d(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = static_cast<uint32_t>(code % p_);
    code = static_cast<uint32_t>(code / p_);
  }
  return d;
}

void Field::build_tables_() {
  // digit-level multiply usable before log tables exist
  Poly mp = minpoly_.empty() ? Poly{} : minpoly_;
  auto mul_codes = [&](uint32_t a, uint32_t b) -> uint32_t {
    if (k_ == 1)
      return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
    Poly pa, pb;
    for (uint32_t x = a; x; x /= static_cast<uint32_t>(p_))
      pa.push_back(x % static_cast<uint32_t>(p_));
    for (uint32_t x = b; x; x /= static_cast<uint32_t>(p_))
      pb.push_back(x % static_cast<uint32_t>(p_));
    Poly pc = poly_mulmod(pa, pb, mp, p_);
    uint64_t code = 0;
    for (size_t i = pc.size(); i-- > 0;) code = code * p_ + pc[i];
    return static_cast<uint32_t>(code);
  };
  auto pow_codes = [&](uint32_t a, uint64_t e) {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_codes(r, a);
      a = mul_codes(a, a);
      e >>= 1;
    }
    return r;
  };

  uint64_t n = q_ - 1;
  auto pf = prime_factors(n);
  uint32_t g = 0;
  for (uint32_t cand = 1; cand < q_; ++cand) {
    bool primitive = true;
    for (uint64_t ell : pf) {
      if (pow_codes(cand, n / ell) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  gen_ = g;

  exp_.resize(n ? 2 * n : 1);
  log_.assign(q_, -1);
  uint32_t acc = 1;
  for (uint64_t i = 0; i < n; ++i) {
    exp_[i] = acc;
    exp_[i + n] = acc;
    log_[acc] = static_cast<int32_t>(i);
    acc = mul_codes(acc, g);
  }

  if (k_ == 1) {
    mode_ = Mode::kPrime;
  } else if (q_ <= kAddTableMaxQ) {
    mode_ = Mode::kAddTable;
    addtab_.resize(q_ * q_);
    for (uint32_t a = 0; a < q_; ++a) {
      auto da = decode(a);
      for (uint32_t b = 0; b <= a; ++b) {
        auto db = decode(b);
        uint64_t code = 0;
        for (uint32_t i = k_; i-- > 0;)
          code = code * p_ + (da[i] + db[i]) % p_;
        addtab_[a * q_ + b] = static_cast<uint32_t>(code);
        addtab_[b * q_ + a] = static_cast<uint32_t>(code);
      }
    }
  } else {
    mode_ = Mode::kDigits;
  }
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
  switch (mode_) {
    case Mode::kPrime: {
      uint64_t s = static_cast<uint64_t>(a) + b;
      return static_cast<uint32_t>(s >= p_ ? s - p_ : s);
    }
    case Mode::kAddTable:
      return addtab_[static_cast<uint64_t>(a) * q_ + b];
    case Mode::kDigits: {
      uint64_t mul = 1, out = 0;
      for (uint32_t i = 0; i < k_; ++i) {
        uint64_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * mul;
        mul *= p_;
        a = static_cast<uint32_t>(a / p_);
        b = static_cast<uint32_t>(b / p_);
      }
      return static_cast<uint32_t>(out);
    }
  }
  return 0;
}

uint32_t Field::neg(uint32_t a) const {
  if (mode_ == Mode::kPrime) return a ? static_cast<uint32_t>(p_ - a) : 0;
  uint64_t mul = 1, out = 0;
  for (uint32_t i = 0; i < k_; ++i) {
    uint64_t d = a % p_;
    out += (d ? p_ - d : 0) * mul;
    mul *= p_;
    a = static_cast<uint32_t>(a / p_);
  }
  return static_cast<uint32_t>(out);
}

uint32_t Field::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Field::mul(uint32_t a, uint32_t b) const {
  if (!a || !b) return 0;
  if (mode_ == Mode::kPrime)
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  return exp_[static_cast<uint64_t>(log_[a]) + log_[b]];
}

uint32_t Field::inv(uint32_t a) const {
  if (!a) throw ValidationError("inverse of zero");
  if (a == 1) return 1;
  uint64_t n = q_ - 1;
  return exp_[n - static_cast<uint64_t>(log_[a])];
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
  if (!a) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw ValidationError("inverse of zero");
  }
  uint64_t n = q_ - 1;
  if (n == 0) return 1;
  int64_t r = e % static_cast<int64_t>(n);
  if (r < 0) r += static_cast<int64_t>(n);
  uint64_t idx = static_cast<uint64_t>(log_[a]) * static_cast<uint64_t>(r) % n;
  return exp_[idx];
}

uint64_t Field::mult_order(uint32_t a) const {
  if (!a) throw ValidationError("multiplicative order of zero");
  uint64_t n = q_ - 1;
  if (n == 0) return 1;
  return n / std::gcd(n, static_cast<uint64_t>(log_[a]));
}

std::vector<uint32_t> Field::roots_of_unity(uint64_t d) const {
  if (d < 1) throw ValidationError("root-of-unity order must be >= 1");
  uint64_t n = q_ - 1;
  if (n == 0) return {1};
  uint64_t g = std::gcd(d, n);
  uint64_t step = n / g;
  std::vector<uint32_t> out;
  out.reserve(g);
  for (uint64_t i = 0; i < g; ++i) out.push_back(exp_[i * step]);
  std::sort(out.begin(), out.end());
  return out;
}

void Field::row_axpy(uint32_t* dst, const uint32_t* src, uint32_t c,
                     std::size_t n) const {
  if (!c) return;
  switch (mode_) {
    case Mode::kPrime: {
      uint64_t p = p_;
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t t = dst[i] + static_cast<uint64_t>(c) * src[i];
        dst[i] = static_cast<uint32_t>(t % p);
      }
      break;
    }
    case Mode::kAddTable: {
      const uint32_t* at = addtab_.data();
      const uint32_t* ex = exp_.data();
      const int32_t* lg = log_.data();
      int64_t lc = lg[c];
      uint64_t q = q_;
      for (std::size_t i = 0; i < n; ++i) {
        uint32_t s = src[i];
        if (!s) continue;
        uint32_t prod = ex[lc + lg[s]];
        dst[i] = at[static_cast<uint64_t>(dst[i]) * q + prod];
      }
      break;
    }
    case Mode::kDigits: {
      for (std::size_t i = 0; i < n; ++i) {
        uint32_t s = src[i];
        if (!s) continue;
        dst[i] = add(dst[i], exp_[static_cast<uint64_t>(log_[c]) + log_[s]]);
      }
      break;
    }
  }
}

void Field::row_scale(uint32_t* dst, uint32_t c, std::size_t n) const {
  if (c == 1) return;
  if (mode_ == Mode::kPrime) {
    uint64_t p = p_;
    for (std::size_t i = 0; i < n; ++i)
      dst[i] = static_cast<uint32_t>(static_cast<uint64_t>(dst[i]) * c % p);
    return;
  }
  if (!c) {
    std::fill(dst, dst + n, 0u);
    return;
  }
  const uint32_t* ex = exp_.data();
  const int32_t* lg = log_.data();
  int64_t lc = lg[c];
  for (std::size_t i = 0; i < n; ++i)
    if (dst[i]) dst[i] = ex[lc + lg[dst[i]]];
}

std::ostream& operator<<(std::ostream& os, const GF& a) {
  if (!a.bound()) return os << "lit(" << a.literal() << ")";
  const Field& f = *a.field();
  if (f.k() == 1) return os << a.code();
  auto d = f.decode(a.code());
  os << "[";
  for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << "]";
}

}  // namespace gfrep
