#include "lb3/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace lb3 {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch(std::string(op) + ": shapes differ");
}

double row_norm(const ComplexMatrix& a, int i) {
  double s = 0.0;
  for (int j = 0; j < a.cols(); ++j) s += std::norm(a.at(i, j));
  return std::sqrt(s);
}

// Row echelon engine shared by rank, kernel_basis and (in augmented form)
// the inverse.  Performs full Gauss-Jordan reduction with scaled partial
// pivoting; pivot magnitudes below `threshold` end the column.
struct Echelon {
  ComplexMatrix rref;
  std::vector<int> pivot_cols;
  double threshold = 0.0;
  double min_pivot = 0.0;
  double max_pivot = 0.0;
};

Echelon reduce(const ComplexMatrix& a, const Tolerance& tol) {
  Echelon e;
  e.rref = a;
  const int m = a.rows(), n = a.cols();

  std::vector<double> scale(m);
  double max_row = 0.0;
  for (int i = 0; i < m; ++i) {
    scale[i] = row_norm(a, i);
    max_row = std::max(max_row, scale[i]);
  }
  e.threshold = tol.rank_eps * max_row;
  if (max_row == 0.0) return e;  // zero matrix
  for (double& s : scale)
    if (s == 0.0) s = 1.0;

  ComplexMatrix& r = e.rref;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int best = -1;
    double best_ratio = 0.0;
    for (int i = row; i < m; ++i) {
      double ratio = std::abs(r.at(i, col)) / scale[i];
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = i;
      }
    }
    if (best < 0 || std::abs(r.at(best, col)) <= e.threshold) continue;

    if (best != row) {
      for (int j = 0; j < n; ++j) std::swap(r.at(best, j), r.at(row, j));
      std::swap(scale[best], scale[row]);
    }
    const Cplx pivot = r.at(row, col);
    const double pmag = std::abs(pivot);
    e.min_pivot = e.pivot_cols.empty() ? pmag : std::min(e.min_pivot, pmag);
    e.max_pivot = std::max(e.max_pivot, pmag);

    const Cplx inv_pivot = Cplx(1.0, 0.0) / pivot;
    for (int j = col; j < n; ++j) r.at(row, j) *= inv_pivot;
    r.at(row, col) = Cplx(1.0, 0.0);
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const Cplx factor = r.at(i, col);
      if (factor == Cplx(0.0, 0.0)) continue;
      for (int j = col; j < n; ++j) r.at(i, j) -= factor * r.at(row, j);
      r.at(i, col) = Cplx(0.0, 0.0);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cplx(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Cplx> diag) {
  const int n = static_cast<int>(diag.size());
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Cplx>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw DimensionMismatch("from_rows: ragged row lengths");
    int j = 0;
    for (const Cplx& v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

bool ComplexMatrix::is_finite() const {
  for (const Cplx& v : entries_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Cplx aik = a.at(i, k);
      if (aik == Cplx(0.0, 0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix operator*(const Cplx& c, const ComplexMatrix& a) {
  ComplexMatrix r = a;
  for (Cplx& v : r.entries()) v *= c;
  return r;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator+");
  ComplexMatrix r = a;
  auto rs = r.entries();
  auto bs = b.entries();
  for (size_t i = 0; i < rs.size(); ++i) rs[i] += bs[i];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "operator-");
  ComplexMatrix r = a;
  auto rs = r.entries();
  auto bs = b.entries();
  for (size_t i = 0; i < rs.size(); ++i) rs[i] -= bs[i];
  return r;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

Cplx trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("trace: matrix not square");
  Cplx t(0.0, 0.0);
  for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Cplx& v : a.entries()) s += std::norm(v);
  return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "frobenius_distance");
  double s = 0.0;
  auto as = a.entries();
  auto bs = b.entries();
  for (size_t i = 0; i < as.size(); ++i) s += std::norm(as[i] - bs[i]);
  return std::sqrt(s);
}

int rank(const ComplexMatrix& a, const Tolerance& tol) {
  return static_cast<int>(reduce(a, tol).pivot_cols.size());
}

std::vector<int> pivot_columns(const ComplexMatrix& a, const Tolerance& tol) {
  return reduce(a, tol).pivot_cols;
}

ComplexMatrix kernel_basis(const ComplexMatrix& a, const Tolerance& tol) {
  const Echelon e = reduce(a, tol);
  const int n = a.cols();
  const int r = static_cast<int>(e.pivot_cols.size());
  ComplexMatrix basis(n, n - r);

  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  int k = 0;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis.at(f, k) = Cplx(1.0, 0.0);
    for (int p = 0; p < r; ++p) basis.at(e.pivot_cols[p], k) = -e.rref.at(p, f);
    ++k;
  }
  // rank-nullity must hold structurally
  if (r + (n - r) != n || k != n - r) throw Error("kernel_basis: rank-nullity violated");
  return basis;
}

InverseResult inverse_with_pivots(const ComplexMatrix& a, const Tolerance& tol) {
  if (!a.is_square()) throw DimensionMismatch("inverse: matrix not square");
  const int n = a.rows();
  const Echelon e = reduce(hconcat(a, ComplexMatrix::identity(n)), tol);
  if (static_cast<int>(e.pivot_cols.size()) != n || e.pivot_cols.back() >= n)
    throw SingularMatrix("inverse: matrix is numerically singular");

  InverseResult result;
  result.min_pivot = e.min_pivot;
  result.max_pivot = e.max_pivot;
  result.inv = ComplexMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) result.inv.at(i, j) = e.rref.at(i, n + j);

  const double residual = frobenius_distance(a * result.inv, ComplexMatrix::identity(n));
  const double cond_scale = result.min_pivot > 0.0
                                ? static_cast<double>(n) * result.max_pivot / result.min_pivot
                                : 0.0;
  if (residual > tol.residual_eps * std::max(1.0, cond_scale))
    throw SingularMatrix("inverse: residual check failed, matrix too ill-conditioned");
  return result;
}

ComplexMatrix inverse(const ComplexMatrix& a, const Tolerance& tol) {
  return inverse_with_pivots(a, tol).inv;
}

ComplexMatrix hconcat(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hconcat: row counts differ");
  ComplexMatrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

}  // namespace lb3
