#include "lb3/irreducibility.hpp"

#include <cmath>
#include <vector>

#include "lb3/errors.hpp"

namespace lb3 {

namespace {

Cplx dot(const ComplexMatrix& a, const ComplexMatrix& b) {
  Cplx s(0.0, 0.0);
  auto as = a.entries();
  auto bs = b.entries();
  for (size_t i = 0; i < as.size(); ++i) s += std::conj(as[i]) * bs[i];
  return s;
}

// Threshold separating genuine new directions from roundoff after
// projection; adequate for the n <= 50 scale this library targets.
constexpr double kNewDirectionFloor = 1e-8;

// Gram-Schmidt against `basis` with one re-orthogonalization pass.
// Returns true and appends when a new direction survives.
bool absorb(std::vector<ComplexMatrix>& basis, ComplexMatrix cand) {
  const double pre = frobenius_norm(cand);
  if (pre == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (const ComplexMatrix& e : basis) {
      const Cplx coeff = dot(e, cand);
      if (coeff == Cplx(0.0, 0.0)) continue;
      auto cs = cand.entries();
      auto es = e.entries();
      for (size_t i = 0; i < cs.size(); ++i) cs[i] -= coeff * es[i];
    }
  }
  const double post = frobenius_norm(cand);
  if (post <= kNewDirectionFloor * pre) return false;
  basis.push_back((Cplx(1.0 / post, 0.0)) * cand);
  return true;
}

}  // namespace

int burnside_dimension(std::span<const ComplexMatrix> gens, const Tolerance&) {
  if (gens.empty()) throw Error("burnside_dimension: no generators");
  const int n = gens.front().rows();
  for (const ComplexMatrix& g : gens)
    if (!g.is_square() || g.rows() != n)
      throw DimensionMismatch("burnside_dimension: generators must be square and equally sized");

  std::vector<ComplexMatrix> basis;
  absorb(basis, ComplexMatrix::identity(n));

  const size_t full = static_cast<size_t>(n) * n;
  size_t frontier = 0;
  while (frontier < basis.size() && basis.size() < full) {
    const ComplexMatrix element = basis[frontier++];
    for (const ComplexMatrix& g : gens) {
      absorb(basis, element * g);
      if (basis.size() >= full) break;
    }
  }
  return static_cast<int>(basis.size());
}

bool is_irreducible(const GammaRep& rep, const Tolerance& tol) {
  const ComplexMatrix gens[] = {rep.S, rep.T};
  const int n = rep.n();
  return burnside_dimension(gens, tol) == n * n;
}

namespace {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Cplx aij = a.at(i, j);
      if (aij == Cplx(0.0, 0.0)) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          k.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
    }
  return k;
}

}  // namespace

int commutant_dimension(std::span<const ComplexMatrix> gens, const Tolerance& tol) {
  if (gens.empty()) throw Error("commutant_dimension: no generators");
  const int n = gens.front().rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);

  // Row-major vectorization: vec(XG) = (I (x) G^T) vec(X),
  // vec(GX) = (G (x) I) vec(X); stack one block per generator.
  ComplexMatrix system(static_cast<int>(gens.size()) * n * n, n * n);
  int row0 = 0;
  for (const ComplexMatrix& g : gens) {
    if (!g.is_square() || g.rows() != n)
      throw DimensionMismatch("commutant_dimension: generators must be square and equally sized");
    const ComplexMatrix block = kron(id, transpose(g)) - kron(g, id);
    for (int i = 0; i < n * n; ++i)
      for (int j = 0; j < n * n; ++j) system.at(row0 + i, j) = block.at(i, j);
    row0 += n * n;
  }
  return kernel_basis(system, tol).cols();
}

int commutant_dimension(const GammaRep& rep, const Tolerance& tol) {
  const ComplexMatrix gens[] = {rep.S, rep.T};
  return commutant_dimension(gens, tol);
}

}  // namespace lb3
