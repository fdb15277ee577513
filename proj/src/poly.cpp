#include "gfrep/poly.hpp"

#include <algorithm>
#include <ostream>
#include <random>

namespace gfrep {

PolyGF PolyGF::from_ints(const Field& F, const std::vector<int64_t>& cs) {
  std::vector<uint32_t> codes(cs.size());
  for (size_t i = 0; i < cs.size(); ++i) codes[i] = F.embed_int(cs[i]);
  return PolyGF(F, std::move(codes));
}

GF PolyGF::eval(GF x) const {
  GF acc = F_->zero();
  GF xb = x.bind(*F_);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * xb + GF(F_, c_[i]);
  return acc;
}

PolyGF operator+(const PolyGF& a, const PolyGF& b) {
  const Field& F = a.field();
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(a.code_at(static_cast<int>(i)), b.code_at(static_cast<int>(i)));
  return PolyGF(F, std::move(c));
}

PolyGF operator-(const PolyGF& a, const PolyGF& b) {
  const Field& F = a.field();
  std::vector<uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(a.code_at(static_cast<int>(i)), b.code_at(static_cast<int>(i)));
  return PolyGF(F, std::move(c));
}

PolyGF operator*(const PolyGF& a, const PolyGF& b) {
  const Field& F = a.field();
  if (a.is_zero() || b.is_zero()) return PolyGF(F);
  std::vector<uint32_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return PolyGF(F, std::move(c));
}

std::pair<PolyGF, PolyGF> divmod(const PolyGF& a, const PolyGF& b) {
  const Field& F = a.field();
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (a.deg() < b.deg()) return {PolyGF(F), a};
  std::vector<uint32_t> rem = a.codes();
  std::vector<uint32_t> quo(a.deg() - b.deg() + 1, 0);
  uint32_t lead_inv = F.inv(b.lead().code());
  for (int i = a.deg(); i >= b.deg(); --i) {
    uint32_t c = rem[i];
    if (!c) continue;
    uint32_t f = F.mul(c, lead_inv);
    quo[i - b.deg()] = f;
    for (int j = 0; j <= b.deg(); ++j)
      rem[i - b.deg() + j] =
          F.sub(rem[i - b.deg() + j], F.mul(f, b.code_at(j)));
  }
  return {PolyGF(F, std::move(quo)), PolyGF(F, std::move(rem))};
}

PolyGF monic(const PolyGF& a) {
  if (a.is_zero()) return a;
  const Field& F = a.field();
  uint32_t li = F.inv(a.lead().code());
  std::vector<uint32_t> c = a.codes();
  for (auto& x : c) x = F.mul(x, li);
  return PolyGF(F, std::move(c));
}

PolyGF gcd(const PolyGF& a, const PolyGF& b) {
  PolyGF x = a, y = b;
  while (!y.is_zero()) {
    PolyGF r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return monic(x);
}

PolyGF lcm(const PolyGF& a, const PolyGF& b) {
  if (a.is_zero() || b.is_zero()) return PolyGF(a.field());
  return monic(divmod(a * b, gcd(a, b)).first);
}

PolyGF derivative(const PolyGF& a) {
  const Field& F = a.field();
  if (a.deg() < 1) return PolyGF(F);
  std::vector<uint32_t> c(a.deg());
  for (int i = 1; i <= a.deg(); ++i)
    c[i - 1] = F.mul(a.code_at(i), F.embed_int(i));
  return PolyGF(F, std::move(c));
}

PolyGF mul_mod(const PolyGF& a, const PolyGF& b, const PolyGF& mod) {
  return divmod(a * b, mod).second;
}

PolyGF pow_mod(const PolyGF& base, uint64_t e, const PolyGF& mod) {
  PolyGF r = PolyGF(base.field(), {1});
  PolyGF b = divmod(base, mod).second;
  while (e) {
    if (e & 1) r = mul_mod(r, b, mod);
    b = mul_mod(b, b, mod);
    e >>= 1;
  }
  return r;
}

namespace {

struct PolyLess {
  bool operator()(const PolyGF& a, const PolyGF& b) const {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return a.codes() < b.codes();
  }
};

// p-th root of a polynomial all of whose terms have exponent divisible
// by p: f(x) = g(x^p) with g_j = f_{jp}^(q/p).
PolyGF pth_root(const PolyGF& f) {
  const Field& F = f.field();
  uint64_t p = F.p();
  uint64_t root_pow = 1;
  for (uint32_t i = 0; i + 1 < F.k(); ++i) root_pow *= p;  // p^(k-1)
  std::vector<uint32_t> c(f.deg() / static_cast<int>(p) + 1, 0);
  for (size_t j = 0; j < c.size(); ++j) {
    uint32_t a = f.code_at(static_cast<int>(j * p));
    c[j] = a ? F.pow(a, static_cast<int64_t>(root_pow)) : 0;
  }
  return PolyGF(F, std::move(c));
}

// Squarefree decomposition; returns (g_i, m_i) with f = prod g_i^{m_i},
// g_i squarefree pairwise coprime.
void squarefree(const PolyGF& f, int outer_mult,
                std::vector<std::pair<PolyGF, int>>& out) {
  const Field& F = f.field();
  PolyGF d = derivative(f);
  if (d.is_zero()) {
    // pure p-th power
    squarefree(pth_root(f), outer_mult * static_cast<int>(F.p()), out);
    return;
  }
  PolyGF c = gcd(f, d);
  PolyGF w = divmod(f, c).first;
  int i = 1;
  while (w.deg() > 0) {
    PolyGF y = gcd(w, c);
    PolyGF z = divmod(w, y).first;
    if (z.deg() > 0) out.emplace_back(monic(z), i * outer_mult);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.deg() > 0) squarefree(c, outer_mult, out);
}

// Random polynomial of degree < d with coefficients from rng.
PolyGF random_poly(const Field& F, int d, std::mt19937_64& rng) {
  std::vector<uint32_t> c(d);
  for (auto& x : c)
    x = static_cast<uint32_t>(rng() % F.q());
  return PolyGF(F, std::move(c));
}

// Equal-degree splitting: f squarefree, all irreducible factors of
// degree d. Cantor-Zassenhaus for odd q, trace splitting for char 2.
void equal_degree(const PolyGF& f, int d, std::mt19937_64& rng,
                  std::vector<PolyGF>& out) {
  const Field& F = f.field();
  if (f.deg() == d) {
    out.push_back(monic(f));
    return;
  }
  PolyGF one(F, {1});
  while (true) {
    PolyGF a = random_poly(F, f.deg(), rng);
    if (a.deg() < 1) continue;
    PolyGF g = gcd(a, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
    PolyGF b(F);
    if (F.p() != 2) {
      // b = a^((q^d-1)/2) via norm: a^((q^d-1)/(q-1)) then ^((q-1)/2)
      PolyGF norm = a;
      PolyGF frob = a;
      for (int i = 1; i < d; ++i) {
        frob = pow_mod(frob, F.q(), f);
        norm = mul_mod(norm, frob, f);
      }
      b = pow_mod(norm, (F.q() - 1) / 2, f);
      b = b - one;
    } else {
      // trace map over GF(2): sum a^(2^i), i < d*k
      PolyGF t = divmod(a, f).second;
      PolyGF acc = t;
      uint64_t steps = static_cast<uint64_t>(d) * F.k();
      for (uint64_t i = 1; i < steps; ++i) {
        t = mul_mod(t, t, f);
        acc = acc + t;
      }
      b = acc;
    }
    PolyGF h = gcd(b, f);
    if (h.deg() > 0 && h.deg() < f.deg()) {
      equal_degree(h, d, rng, out);
      equal_degree(divmod(f, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<PolyGF, int>> factor_poly(const PolyGF& f,
                                                uint64_t seed) {
  if (f.is_zero()) throw ValidationError("factor of zero polynomial");
  if (f.deg() < 1) throw ValidationError("factor of constant polynomial");
  const Field& F = f.field();
  std::mt19937_64 rng(seed);

  std::vector<std::pair<PolyGF, int>> sqf;
  squarefree(monic(f), 1, sqf);

  std::vector<std::pair<PolyGF, int>> factors;
  for (const auto& [g, mult] : sqf) {
    // distinct-degree splitting of squarefree g
    PolyGF rem = g;
    PolyGF h = PolyGF::x(F);
    for (int d = 1; rem.deg() > 0 && d <= rem.deg() / 2; ++d) {
      h = pow_mod(h, F.q(), rem);
      PolyGF hx = h - PolyGF::x(F);
      PolyGF gd = gcd(hx, rem);
      if (gd.deg() > 0) {
        std::vector<PolyGF> irr;
        equal_degree(gd, d, rng, irr);
        for (auto& e : irr) factors.emplace_back(std::move(e), mult);
        rem = divmod(rem, gd).first;
        h = divmod(h, rem).second;
      }
    }
    if (rem.deg() > 0) factors.emplace_back(monic(rem), mult);
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) {
              return PolyLess()(a.first, b.first);
            });
  return factors;
}

bool is_irreducible_poly(const PolyGF& f) {
  if (f.deg() < 1) return false;
  auto fac = factor_poly(f);
  return fac.size() == 1 && fac[0].second == 1;
}

PolyGF min_poly(const MatGF& M) {
  if (M.rows() != M.cols()) throw ValidationError("min_poly of non-square");
  const Field& F = field_of(M);
  int n = static_cast<int>(M.rows());
  CodeMat A = to_codes(M, F);

  PolyGF result(F, {1});
  // Union of processed Krylov spaces, to skip redundant seeds.
  CodeMat seen(F, 0, n);
  auto seen_rank = [&]() {
    CodeMat tmp = seen;
    return static_cast<int>(rref_in_place(tmp).size());
  };

  for (int s = 0; s < n && result.deg() < n; ++s) {
    // seed e_s; skip if already inside the processed span
    {
      CodeMat tmp(F, seen.rows + 1, n);
      std::copy(seen.a.begin(), seen.a.end(), tmp.a.begin());
      tmp.at(seen.rows, s) = 1;
      CodeMat probe = tmp;
      if (static_cast<int>(rref_in_place(probe).size()) == seen_rank())
        continue;
    }
    // Krylov chain from e_s: find first dependence
    std::vector<std::vector<uint32_t>> chain;
    std::vector<uint32_t> v(n, 0);
    v[s] = 1;
    chain.push_back(v);
    PolyGF local(F);
    while (true) {
      // w = A * last
      std::vector<uint32_t> w(n, 0);
      const auto& last = chain.back();
      for (int c = 0; c < n; ++c) {
        if (!last[c]) continue;
        for (int r = 0; r < n; ++r) {
          uint32_t a = A.at(r, c);
          if (a) w[r] = F.add(w[r], F.mul(a, last[c]));
        }
      }
      // dependence of w on chain: solve chain^T x = w
      int t = static_cast<int>(chain.size());
      CodeMat sys(F, n, t + 1);
      for (int j = 0; j < t; ++j)
        for (int i = 0; i < n; ++i) sys.at(i, j) = chain[j][i];
      for (int i = 0; i < n; ++i) sys.at(i, t) = w[i];
      CodeMat sys2 = sys;
      auto piv = rref_in_place(sys2);
      bool dependent =
          piv.empty() || piv.back() != t;  // last col not a pivot
      if (dependent) {
        // w = sum x_j chain_j; local minpoly = x^t - sum x_j x^j
        std::vector<uint32_t> coeffs(t + 1, 0);
        coeffs[t] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
          coeffs[piv[r]] = F.neg(sys2.at(static_cast<int>(r), t));
        local = PolyGF(F, std::move(coeffs));
        break;
      }
      chain.push_back(w);
    }
    result = lcm(result, local);
    // fold the chain into seen
    CodeMat merged(F, seen.rows + static_cast<int>(chain.size()), n);
    std::copy(seen.a.begin(), seen.a.end(), merged.a.begin());
    for (size_t j = 0; j < chain.size(); ++j)
      std::copy(chain[j].begin(), chain[j].end(),
                merged.row(seen.rows + static_cast<int>(j)));
    seen = std::move(merged);
  }
  return result;
}

MatGF eval_poly_at(const PolyGF& f, const MatGF& M) {
  const Field& F = f.field();
  int n = static_cast<int>(M.rows());
  MatGF acc = zeros(F, n, n);
  for (int i = f.deg(); i >= 0; --i) {
    if (i != f.deg()) acc = (acc * M).eval();
    GF c = f.coeff(i);
    for (int d = 0; d < n; ++d) acc(d, d) += c;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const PolyGF& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int i = f.deg(); i >= 0; --i) {
    if (!f.code_at(i)) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || f.code_at(i) != 1) os << f.coeff(i);
    if (i > 0) os << (i == 1 ? "x" : "x^");
    if (i > 1) os << i;
  }
  return os;
}

}  // namespace gfrep
