#include "gfrep/linalg.hpp"

#include <algorithm>

namespace gfrep {

MatGF zeros(const Field& F, Eigen::Index rows, Eigen::Index cols) {
  MatGF m(rows, cols);
  m.setConstant(F.zero());
  return m;
}

MatGF identity(const Field& F, Eigen::Index n) {
  MatGF m = zeros(F, n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

MatGF mat_of(const Field& F,
             std::initializer_list<std::initializer_list<int64_t>> rows) {
  Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  Eigen::Index c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  MatGF m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c)
      throw ValidationError("ragged matrix literal");
    Eigen::Index j = 0;
    for (int64_t v : row) m(i, j++) = F.elem(v);
    ++i;
  }
  return m;
}

VecGF vec_of(const Field& F, std::initializer_list<int64_t> entries) {
  VecGF v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (int64_t e : entries) v(i++) = F.elem(e);
  return v;
}

MatGF bind_all(const Field& F, const MatGF& m) {
  MatGF out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).bind(F);
  return out;
}

const Field& field_of(const MatGF& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j).bound()) return *m(i, j).field();
  throw ValidationError("matrix has no bound entries; field unknown");
}

CodeMat to_codes(const MatGF& m, const Field& F) {
  CodeMat c(F, static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j) c.at(i, j) = m(i, j).bind(F).code();
  return c;
}

CodeMat to_codes(const MatGF& m) { return to_codes(m, field_of(m)); }

MatGF from_codes(const CodeMat& m) {
  MatGF out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = GF(m.F, m.at(i, j));
  return out;
}

namespace {

// Row-reduction core. Rows are reduced one at a time against the pivot
// rows found so far; prime fields accumulate in uint64 with a single
// deferred reduction per entry (products stay below 2^32 and at most
// a few thousand of them pile up, so no overflow). The reduced row
// echelon form is unique, so this produces the same canonical output
// as column-major elimination.
struct RrefWorker {
  const Field& F;
  int cols;
  bool prime;
  uint64_t p;
  std::vector<std::vector<uint32_t>> pivot_rows;  // normalized, pivot = 1
  std::vector<int> pivot_cols;                    // aligned, ascending found
  std::vector<int> row_of_col;
  std::vector<uint64_t> buf;

  RrefWorker(const Field& f, int c)
      : F(f),
        cols(c),
        prime(f.k() == 1),
        p(f.p()),
        row_of_col(c, -1),
        buf(c) {}

  // Reduces row (codes) against the pivots; if a new pivot emerges the
  // normalized row joins the basis. Returns the pivot column or -1.
  int absorb(const uint32_t* row) {
    if (prime) {
      for (int i = 0; i < cols; ++i) buf[i] = row[i];
      for (int c = 0; c < cols; ++c) {
        uint32_t v = static_cast<uint32_t>(buf[c] % p);
        if (!v) continue;
        int pr = row_of_col[c];
        if (pr < 0) {
          std::vector<uint32_t> out(cols, 0);
          uint32_t vi = F.inv(v);
          out[c] = 1;
          for (int j = c + 1; j < cols; ++j)
            out[j] = F.mul(static_cast<uint32_t>(buf[j] % p), vi);
          return insert_(c, std::move(out));
        }
        const uint32_t* src = pivot_rows[pr].data();
        uint64_t f = p - v;
        for (int j = c + 1; j < cols; ++j) buf[j] += f * src[j];
        buf[c] = 0;
      }
      return -1;
    }
    std::vector<uint32_t> work(row, row + cols);
    for (int c = 0; c < cols; ++c) {
      uint32_t v = work[c];
      if (!v) continue;
      int pr = row_of_col[c];
      if (pr < 0) {
        uint32_t vi = F.inv(v);
        F.row_scale(work.data() + c, vi, cols - c);
        return insert_(c, std::move(work));
      }
      F.row_axpy(work.data() + c, pivot_rows[pr].data() + c, F.neg(v),
                 cols - c);
    }
    return -1;
  }

  int insert_(int c, std::vector<uint32_t> row) {
    row_of_col[c] = static_cast<int>(pivot_rows.size());
    pivot_rows.push_back(std::move(row));
    pivot_cols.push_back(c);
    return c;
  }

  // Back-eliminates the pivot rows against each other (descending pivot
  // order keeps later rows canonical while earlier ones reduce).
  void back_eliminate() {
    std::vector<int> order(pivot_cols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pivot_cols[a] < pivot_cols[b]; });
    for (size_t oi = order.size(); oi-- > 0;) {
      int r = order[oi];
      auto& row = pivot_rows[r];
      if (prime) {
        for (int i = 0; i < cols; ++i) buf[i] = row[i];
        for (size_t oj = oi + 1; oj < order.size(); ++oj) {
          int r2 = order[oj];
          int c2 = pivot_cols[r2];
          uint32_t v = static_cast<uint32_t>(buf[c2] % p);
          if (!v) continue;
          const uint32_t* src = pivot_rows[r2].data();
          uint64_t f = p - v;
          for (int j = c2; j < cols; ++j) buf[j] += f * src[j];
        }
        for (int j = 0; j < cols; ++j)
          row[j] = static_cast<uint32_t>(buf[j] % p);
      } else {
        for (size_t oj = oi + 1; oj < order.size(); ++oj) {
          int r2 = order[oj];
          int c2 = pivot_cols[r2];
          uint32_t v = row[c2];
          if (!v) continue;
          F.row_axpy(row.data() + c2, pivot_rows[r2].data() + c2, F.neg(v),
                     cols - c2);
        }
      }
    }
  }
};

}  // namespace

std::vector<int> rref_in_place(CodeMat& m) {
  const Field& F = *m.F;
  RrefWorker w(F, m.cols);
  for (int r = 0; r < m.rows; ++r) w.absorb(m.row(r));
  w.back_eliminate();

  std::vector<int> order(w.pivot_cols.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return w.pivot_cols[a] < w.pivot_cols[b]; });
  std::fill(m.a.begin(), m.a.end(), 0u);
  std::vector<int> pivots;
  pivots.reserve(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    std::copy(w.pivot_rows[order[i]].begin(), w.pivot_rows[order[i]].end(),
              m.row(static_cast<int>(i)));
    pivots.push_back(w.pivot_cols[order[i]]);
  }
  return pivots;
}

int rank(const MatGF& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  CodeMat c = to_codes(m);
  return static_cast<int>(rref_in_place(c).size());
}

MatGF rref(const MatGF& m) {
  CodeMat c = to_codes(m);
  rref_in_place(c);
  return from_codes(c);
}

namespace {

std::vector<VecGF> nullspace_codes(CodeMat& m) {
  const Field& F = *m.F;
  std::vector<int> pivots = rref_in_place(m);
  std::vector<int> pivot_of_col(m.cols, -1);
  for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);
  std::vector<VecGF> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    VecGF v(m.cols);
    for (int j = 0; j < m.cols; ++j) v(j) = F.zero();
    v(c) = F.one();
    for (size_t i = 0; i < pivots.size(); ++i)
      v(pivots[i]) = GF(&F, F.neg(m.at(static_cast<int>(i), c)));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<VecGF> nullspace(const MatGF& m) {
  CodeMat c = to_codes(m);
  return nullspace_codes(c);
}

bool is_invertible(const MatGF& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

MatGF inverse(const MatGF& m) {
  if (m.rows() != m.cols()) throw ValidationError("inverse of non-square");
  const Field& F = field_of(m);
  int n = static_cast<int>(m.rows());
  CodeMat aug(F, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m(i, j).bind(F).code();
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  // invertible iff the left block owns the first n pivot columns
  if (static_cast<int>(pivots.size()) < n || (n && pivots[n - 1] != n - 1))
    throw ValidationError("matrix is singular");
  MatGF out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = GF(&F, aug.at(i, n + j));
  return out;
}

MatGF solve_exact(const MatGF& A, const MatGF& B) {
  if (A.rows() != B.rows()) throw ValidationError("solve: row mismatch");
  const Field& F = field_of(A);
  int rows = static_cast<int>(A.rows());
  int n = static_cast<int>(A.cols());
  int k = static_cast<int>(B.cols());
  CodeMat aug(F, rows, n + k);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A(i, j).bind(F).code();
    for (int j = 0; j < k; ++j) aug.at(i, n + j) = B(i, j).bind(F).code();
  }
  auto pivots = rref_in_place(aug);
  // Full column rank of A means pivots are exactly 0..n-1.
  if (static_cast<int>(pivots.size()) < n || (n && pivots[n - 1] != n - 1))
    throw ValidationError("solve: coefficient matrix is rank-deficient");
  if (pivots.size() > static_cast<size_t>(n))
    throw ValidationError("solve: inconsistent system");
  MatGF X(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) X(i, j) = GF(&F, aug.at(i, n + j));
  return X;
}

std::vector<MatGF> solve_commutant(const std::vector<MatGF>& A,
                                   const std::vector<MatGF>& B) {
  if (A.size() != B.size())
    throw ValidationError("solve_commutant: generator count mismatch");
  const Field* Fp = nullptr;
  int n = -1, m = -1;
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].rows() != A[i].cols() || B[i].rows() != B[i].cols())
      throw ValidationError("solve_commutant: matrices must be square");
    if (n < 0) {
      n = static_cast<int>(A[i].rows());
      m = static_cast<int>(B[i].rows());
    } else if (A[i].rows() != n || B[i].rows() != m) {
      throw ValidationError("solve_commutant: dimension mismatch");
    }
    if (!Fp) {
      for (const auto* M : {&A[i], &B[i]}) {
        for (Eigen::Index r = 0; !Fp && r < M->rows(); ++r)
          for (Eigen::Index c = 0; !Fp && c < M->cols(); ++c)
            if ((*M)(r, c).bound()) Fp = (*M)(r, c).field();
      }
    }
  }
  if (A.empty())
    throw ValidationError("solve_commutant: no generators (caller decides)");
  if (!Fp)
    throw ValidationError("solve_commutant: field unknown");
  const Field& F = *Fp;

  // Unknown X is m x n, vectorized row-major: u(a,b) = a*n + b.
  // Constraint per (gen, r, s): sum_t X[r,t] A[t,s] - sum_t B[r,t] X[t,s] = 0.
  int unknowns = m * n;
  int rows_per_gen = m * n;
  CodeMat sys(F, static_cast<int>(A.size()) * rows_per_gen, unknowns);
  for (size_t g = 0; g < A.size(); ++g) {
    CodeMat Ag = to_codes(A[g], F);
    CodeMat Bg = to_codes(B[g], F);
    int base = static_cast<int>(g) * rows_per_gen;
    for (int r = 0; r < m; ++r) {
      for (int s = 0; s < n; ++s) {
        uint32_t* row = sys.row(base + r * n + s);
        for (int t = 0; t < n; ++t)
          row[r * n + t] = F.add(row[r * n + t], Ag.at(t, s));
        for (int t = 0; t < m; ++t)
          row[t * n + s] = F.sub(row[t * n + s], Bg.at(r, t));
      }
    }
  }
  std::vector<VecGF> null = nullspace_codes(sys);
  std::vector<MatGF> out;
  out.reserve(null.size());
  for (const auto& v : null) {
    MatGF X(m, n);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < n; ++b) X(a, b) = v(a * n + b);
    out.push_back(std::move(X));
  }
  return out;
}

namespace {

// Echelon accumulator for spinning: rows kept reduced, pivot map tracked.
struct Echelon {
  const Field* F;
  int dim;
  std::vector<std::vector<uint32_t>> rows;
  std::vector<int> pivot_col;  // per row
  std::vector<int> row_of_col;

  Echelon(const Field& f, int d) : F(&f), dim(d), row_of_col(d, -1) {}

  // Reduces v in place against the basis; returns pivot column or -1
  // if v reduced to zero. When insert is true the reduced vector joins
  // the basis (normalized, without back-elimination of earlier rows).
  int reduce(std::vector<uint32_t>& v, bool insert) {
    for (int c = 0; c < dim; ++c) {
      if (!v[c]) continue;
      int r = row_of_col[c];
      if (r < 0) {
        if (!insert) return c;
        F->row_scale(v.data() + c, F->inv(v[c]), dim - c);
        rows.push_back(v);
        pivot_col.push_back(c);
        row_of_col[c] = static_cast<int>(rows.size()) - 1;
        return c;
      }
      F->row_axpy(v.data() + c, rows[r].data() + c, F->neg(v[c]), dim - c);
    }
    return -1;
  }

  int size() const { return static_cast<int>(rows.size()); }
};

std::vector<uint32_t> matvec(const CodeMat& M, const std::vector<uint32_t>& v) {
  const Field& F = *M.F;
  std::vector<uint32_t> out(M.rows, 0);
  // column-major accumulation keeps the row kernels usable
  for (int c = 0; c < M.cols; ++c) {
    if (!v[c]) continue;
    // out += v[c] * column c: walk rows
    for (int r = 0; r < M.rows; ++r) {
      uint32_t a = M.at(r, c);
      if (!a) continue;
      out[r] = F.add(out[r], F.mul(a, v[c]));
    }
  }
  return out;
}

std::vector<VecGF> echelon_to_canonical(const Field& F, Echelon& E) {
  // Full RREF pass over the accumulated rows for a canonical basis.
  if (E.rows.empty()) return {};
  CodeMat m(F, E.size(), E.dim);
  for (int i = 0; i < E.size(); ++i)
    std::copy(E.rows[i].begin(), E.rows[i].end(), m.row(i));
  rref_in_place(m);
  std::vector<VecGF> out;
  out.reserve(E.size());
  for (int i = 0; i < E.size(); ++i) {
    VecGF v(E.dim);
    for (int j = 0; j < E.dim; ++j) v(j) = GF(&F, m.at(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<VecGF> spin(const std::vector<VecGF>& seeds,
                        const std::vector<MatGF>& action) {
  if (seeds.empty()) return {};
  const Field* Fp = nullptr;
  for (const auto& s : seeds)
    for (Eigen::Index i = 0; !Fp && i < s.size(); ++i)
      if (s(i).bound()) Fp = s(i).field();
  if (!Fp && !action.empty()) Fp = &field_of(action[0]);
  if (!Fp) throw ValidationError("spin: field unknown");
  const Field& F = *Fp;
  int dim = static_cast<int>(seeds[0].size());

  std::vector<CodeMat> mats;
  mats.reserve(action.size());
  for (const auto& M : action) {
    if (M.rows() != dim || M.cols() != dim)
      throw ValidationError("spin: dimension mismatch");
    mats.push_back(to_codes(M, F));
  }

  Echelon E(F, dim);
  std::vector<std::vector<uint32_t>> queue;
  for (const auto& s : seeds) {
    std::vector<uint32_t> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = s(i).bind(F).code();
    std::vector<uint32_t> w = v;
    if (E.reduce(w, true) >= 0) queue.push_back(E.rows.back());
  }
  for (size_t qi = 0; qi < queue.size() && E.size() < dim; ++qi) {
    std::vector<uint32_t> b = queue[qi];
    for (const auto& M : mats) {
      std::vector<uint32_t> w = matvec(M, b);
      if (E.reduce(w, true) >= 0) {
        queue.push_back(E.rows.back());
        if (E.size() == dim) break;
      }
    }
  }
  return echelon_to_canonical(F, E);
}

MatGF basis_matrix(const Field& F, const std::vector<VecGF>& vs, int dim) {
  MatGF m = zeros(F, dim, static_cast<Eigen::Index>(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j) {
    if (vs[j].size() != dim) throw ValidationError("basis vector size");
    for (int i = 0; i < dim; ++i) m(i, static_cast<Eigen::Index>(j)) = vs[j](i);
  }
  return m;
}

std::vector<VecGF> perp(const Field& F, const std::vector<VecGF>& vs,
                        int dim) {
  CodeMat m(F, static_cast<int>(vs.size()), dim);
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < dim; ++j) m.at(static_cast<int>(i), j) =
        vs[i](j).bind(F).code();
  return nullspace_codes(m);
}

bool is_invariant_subspace(const std::vector<VecGF>& basis,
                           const std::vector<MatGF>& action) {
  if (basis.empty() || action.empty()) return true;
  const Field& F = field_of(action[0]);
  int dim = static_cast<int>(basis[0].size());
  Echelon E(F, dim);
  for (const auto& b : basis) {
    std::vector<uint32_t> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = b(i).bind(F).code();
    E.reduce(v, true);
  }
  for (const auto& M : action) {
    CodeMat mc = to_codes(M, F);
    for (const auto& b : basis) {
      std::vector<uint32_t> v(dim);
      for (int i = 0; i < dim; ++i) v[i] = b(i).bind(F).code();
      std::vector<uint32_t> w = matvec(mc, v);
      if (E.reduce(w, false) >= 0) return false;
    }
  }
  return true;
}

}  // namespace gfrep
