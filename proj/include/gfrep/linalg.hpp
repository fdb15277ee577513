#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "gfrep/field.hpp"

namespace Eigen {

template <>
struct NumTraits<gfrep::GF> {
  typedef gfrep::GF Real;
  typedef gfrep::GF NonInteger;
  typedef gfrep::GF Nested;
  typedef gfrep::GF Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return gfrep::GF(0); }
  static inline Real dummy_precision() { return gfrep::GF(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gfrep {

using MatGF = Eigen::Matrix<GF, Eigen::Dynamic, Eigen::Dynamic>;
using VecGF = Eigen::Matrix<GF, Eigen::Dynamic, 1>;

// Construction helpers; all entries come out bound to F.
MatGF zeros(const Field& F, Eigen::Index rows, Eigen::Index cols);
MatGF identity(const Field& F, Eigen::Index n);
MatGF mat_of(const Field& F,
             std::initializer_list<std::initializer_list<int64_t>> rows);
VecGF vec_of(const Field& F, std::initializer_list<int64_t> entries);
MatGF bind_all(const Field& F, const MatGF& m);

// Field of the first bound entry; throws if the matrix is all literals.
const Field& field_of(const MatGF& m);

// Dense code-level matrix: the substrate the elimination kernels run on.
// Row-major, entries are Field codes.
struct CodeMat {
  const Field* F = nullptr;
  int rows = 0;
  int cols = 0;
  std::vector<uint32_t> a;

  CodeMat() = default;
  CodeMat(const Field& f, int r, int c)
      : F(&f), rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint32_t* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
  const uint32_t* row(int r) const {
    return a.data() + static_cast<size_t>(r) * cols;
  }
  uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  uint32_t at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
};

CodeMat to_codes(const MatGF& m, const Field& F);
CodeMat to_codes(const MatGF& m);  // field inferred via field_of
MatGF from_codes(const CodeMat& m);

// In-place reduced row echelon form; returns pivot column indices.
// Deterministic: leftmost nonzero pivot, first nonzero row, full
// back-elimination with pivots normalized to 1.
std::vector<int> rref_in_place(CodeMat& m);

int rank(const MatGF& m);
MatGF rref(const MatGF& m);

// Echelonized basis of {v : Mv = 0}; size == cols - rank. Canonical:
// each vector has 1 in its free coordinate.
std::vector<VecGF> nullspace(const MatGF& m);

bool is_invertible(const MatGF& m);
MatGF inverse(const MatGF& m);  // throws ValidationError when singular

// Unique X with A*X = B for A of full column rank; throws when the
// system is inconsistent or A is rank-deficient.
MatGF solve_exact(const MatGF& A, const MatGF& B);

// Basis of {X (m x n) : X*A_i = B_i*X for all i}, A_i n x n, B_i m x m.
// With A, B the generator images of representations M, N this is
// Hom(M, N) as matrices, so the basis size is the intertwining number.
std::vector<MatGF> solve_commutant(const std::vector<MatGF>& A,
                                   const std::vector<MatGF>& B);

// Smallest subspace containing the seeds and invariant under every
// matrix in action; returns an echelonized basis.
std::vector<VecGF> spin(const std::vector<VecGF>& seeds,
                        const std::vector<MatGF>& action);

// Columns = the given vectors.
MatGF basis_matrix(const Field& F, const std::vector<VecGF>& vs, int dim);

// {u : v^T u = 0 for all v in vs} (perp w.r.t. the standard bilinear form).
std::vector<VecGF> perp(const Field& F, const std::vector<VecGF>& vs, int dim);

// True when each A*b stays inside span(basis) for every basis vector b.
bool is_invariant_subspace(const std::vector<VecGF>& basis,
                           const std::vector<MatGF>& action);

}  // namespace gfrep
