#pragma once

// Dense complex-matrix substrate used by every other module: arithmetic,
// numerical rank, kernel bases, inversion and Frobenius residuals, all with
// an explicit tolerance policy.  Row-major storage, immutable value
// semantics, no shared state; every function here is pure.
//
// There is deliberately no general eigensolver: the finite-order matrices
// handled downstream are decomposed with exact polynomial projector
// formulas instead.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "lb3/errors.hpp"

namespace lb3 {

using Cplx = std::complex<double>;

/// Primitive cube root of unity exp(2*pi*i/3), fixed once so every module
/// agrees bit-for-bit on eigenvalues.
inline constexpr Cplx kRho{-0.5, 0.86602540378443864676};

/// Primitive sixth root of unity exp(i*pi/3); kRho is its square.
inline constexpr Cplx kSixthRoot{0.5, 0.86602540378443864676};

/// Pivot and residual thresholds.  rank_eps is relative: it is scaled by the
/// largest row norm of the matrix under reduction.  residual_eps is the
/// absolute threshold for relation residuals; matrices in this project are
/// O(1)-scaled by construction.
struct Tolerance {
  double rank_eps = 1e-9;
  double residual_eps = 1e-9;

  Tolerance() = default;
  Tolerance(double rank, double residual) : rank_eps(rank), residual_eps(residual) {
    if (rank_eps <= 0.0 || residual_eps <= 0.0)
      throw Error("Tolerance: thresholds must be strictly positive");
  }
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw Error("ComplexMatrix: negative dimension");
  }

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(std::span<const Cplx> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Cplx>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cplx& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  const Cplx& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  /// Row-major view of all entries.
  std::span<const Cplx> entries() const { return entries_; }
  std::span<Cplx> entries() { return {entries_.data(), entries_.size()}; }

  bool is_finite() const;

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cplx> entries_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const Cplx& c, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix transpose(const ComplexMatrix& a);
Cplx trace(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Numerical rank via row reduction with scaled partial pivoting; pivots
/// below rank_eps * (largest initial row norm) count as zero.
int rank(const ComplexMatrix& a, const Tolerance& tol = {});

/// Indices of the pivot columns met during the same reduction; the
/// corresponding columns of the original matrix span its column space.
std::vector<int> pivot_columns(const ComplexMatrix& a, const Tolerance& tol = {});

/// Columns spanning the null space; exactly cols - rank(a) of them.  Each
/// returned column v satisfies |a v| <= residual_eps * |v| * |a|.
ComplexMatrix kernel_basis(const ComplexMatrix& a, const Tolerance& tol = {});

/// Gauss-Jordan inverse; throws SingularMatrix when the numerical rank
/// drops below n or the inversion residual check fails.
ComplexMatrix inverse(const ComplexMatrix& a, const Tolerance& tol = {});

/// Inverse plus the smallest/largest pivot magnitudes met during
/// elimination.  Callers that feed random matrices use the pivot ratio as a
/// cheap conditioning guard and resample when it is poor.
struct InverseResult {
  ComplexMatrix inv;
  double min_pivot = 0.0;
  double max_pivot = 0.0;
  double pivot_ratio() const { return max_pivot > 0.0 ? min_pivot / max_pivot : 0.0; }
};
InverseResult inverse_with_pivots(const ComplexMatrix& a, const Tolerance& tol = {});

/// Horizontal concatenation [a | b].
ComplexMatrix hconcat(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace lb3
