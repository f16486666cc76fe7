#include "lb3/loopbraid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lb3/errors.hpp"

namespace lb3 {

double RelationReport::max_residual() const {
  return *std::max_element(residuals.begin(), residuals.end());
}

const char* relation_name(int index) {
  switch (index) {
    case 0: return "sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2";
    case 1: return "s1 s2 s1 = s2 s1 s2";
    case 2: return "s1^2 = s2^2 = 1";
    case 3: return "s1 s2 sigma1 = sigma2 s1 s2";
    case 4: return "sigma1 sigma2 s1 = s2 sigma1 sigma2";
  }
  return "?";
}

EigenData eigen_data_order3(const ComplexMatrix& T, const Tolerance& tol) {
  if (!T.is_square()) throw DimensionMismatch("eigen_data_order3: not square");
  const int n = T.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix t2 = T * T;
  if (frobenius_distance(T * t2, id) > tol.residual_eps)
    throw NotOrderThree("eigen_data_order3: T^3 != I");

  EigenData ed;
  const Cplx third(1.0 / 3.0, 0.0);
  const Cplx rho2 = std::conj(kRho);
  for (int k = 0; k < 3; ++k) {
    const Cplx rk = k == 0 ? Cplx(1.0, 0.0) : (k == 1 ? rho2 : kRho);  // rho^{-k}
    ed.projectors[k] = third * (id + rk * T + (rk * rk) * t2);

    const Cplx tr = trace(ed.projectors[k]);
    const double rounded = std::round(tr.real());
    if (std::abs(tr.imag()) > 1e-6 || std::abs(tr.real() - rounded) > 1e-6 || rounded < -0.5)
      throw NonIntegralMultiplicity("eigen_data_order3: projector trace not a natural number");
    ed.mults[k] = static_cast<int>(rounded);
  }

  // Column-pivoted reduction of each projector picks a basis of its image;
  // the polynomial formula is exact, so this is numerically benign.  A
  // vanishing multiplicity leaves a roundoff-sized projector whose rank must
  // be judged on the absolute scale, not relative to its own entries.
  for (int k = 0; k < 3; ++k) {
    const ComplexMatrix& p = ed.projectors[k];
    if (ed.mults[k] == 0) {
      if (frobenius_norm(p) > tol.residual_eps)
        throw Error("eigen_data_order3: projector for an empty eigenspace is not negligible");
      ed.bases[k] = ComplexMatrix(n, 0);
      continue;
    }
    const std::vector<int> pivots = pivot_columns(p, tol);
    if (static_cast<int>(pivots.size()) != ed.mults[k])
      throw Error("eigen_data_order3: projector rank " + std::to_string(pivots.size()) +
                  " disagrees with trace multiplicity " + std::to_string(ed.mults[k]));
    // unit-normalized pivot columns keep the assembled basis well conditioned
    ComplexMatrix basis(n, ed.mults[k]);
    for (int c = 0; c < ed.mults[k]; ++c) {
      double norm2 = 0.0;
      for (int i = 0; i < n; ++i) norm2 += std::norm(p.at(i, pivots[c]));
      const double inv_norm = 1.0 / std::sqrt(norm2);
      for (int i = 0; i < n; ++i) basis.at(i, c) = inv_norm * p.at(i, pivots[c]);
    }
    ed.bases[k] = basis;
  }
  return ed;
}

std::variant<ComplexMatrix, ObstructionCertificate> build_involution_q(
    const EigenData& ed, std::optional<int> v1_split, const Tolerance& tol) {
  const int x = ed.mults[0], y = ed.mults[1], z = ed.mults[2];
  if (y != z) return ObstructionCertificate{ed.mults};

  const int split = v1_split.value_or(x);
  if (split < 0 || split > x)
    throw SplitOutOfRange("build_involution_q: split " + std::to_string(split) +
                          " outside [0, " + std::to_string(x) + "]");

  const int n = x + y + z;
  // Full basis F = [B0 | B1 | B2]; in that basis Q is the block matrix
  // diag(+1 x split, -1 x (x - split)) on V1 and the swap of the rho and
  // rho^2 blocks.
  const ComplexMatrix f = hconcat(hconcat(ed.bases[0], ed.bases[1]), ed.bases[2]);
  ComplexMatrix qb(n, n);
  for (int i = 0; i < x; ++i) qb.at(i, i) = Cplx(i < split ? 1.0 : -1.0, 0.0);
  for (int i = 0; i < y; ++i) {
    qb.at(x + i, x + y + i) = Cplx(1.0, 0.0);
    qb.at(x + y + i, x + i) = Cplx(1.0, 0.0);
  }
  return f * qb * inverse(f, tol);
}

std::variant<std::pair<ComplexMatrix, ComplexMatrix>, ObstructionCertificate> extend_to_g(
    const GammaRep& rep, std::optional<int> v1_split, const Tolerance& tol) {
  const EigenData ed = eigen_data_order3(rep.T, tol);
  auto q_or_obstruction = build_involution_q(ed, v1_split, tol);
  if (std::holds_alternative<ObstructionCertificate>(q_or_obstruction))
    return std::get<ObstructionCertificate>(q_or_obstruction);

  const ComplexMatrix& q = std::get<ComplexMatrix>(q_or_obstruction);
  const ComplexMatrix s1 = q;
  const ComplexMatrix s2 = q * rep.T;

  const int n = rep.n();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const double residual = std::max({frobenius_distance(s1 * s1, id),
                                    frobenius_distance(s2 * s2, id),
                                    frobenius_distance(s1 * s2 * s1, s2 * s1 * s2),
                                    frobenius_distance(s1 * s2, rep.T)});
  if (residual > tol.residual_eps)
    throw Error("extend_to_g: construction self-check failed, residual " +
                std::to_string(residual));
  return std::make_pair(s1, s2);
}

std::variant<LB3Rep, ObstructionCertificate> assemble_lb3(const GammaRep& rep, Cplx lambda,
                                                          std::optional<int> v1_split,
                                                          const Tolerance& tol) {
  auto ext = extend_to_g(rep, v1_split, tol);
  if (std::holds_alternative<ObstructionCertificate>(ext))
    return std::get<ObstructionCertificate>(ext);
  auto [s1, s2] = std::get<std::pair<ComplexMatrix, ComplexMatrix>>(ext);

  const B3Rep braid = braid_images(rep, lambda, tol);
  LB3Rep out;
  out.sigma1 = braid.sigma1;
  out.sigma2 = braid.sigma2;
  out.s1 = s1;
  out.s2 = s2;
  out.lambda = lambda;
  out.source = rep;
  out.v1_split = v1_split.value_or(restriction_multiplicities_c3(rep.T, tol)[0]);
  return out;
}

RelationReport verify_lb3_relations(const LB3Rep& rep, const Tolerance& tol) {
  const ComplexMatrix &g1 = rep.sigma1, &g2 = rep.sigma2, &s1 = rep.s1, &s2 = rep.s2;
  for (const ComplexMatrix* m : {&g1, &g2, &s1, &s2})
    if (!m->is_square() || m->rows() != g1.rows())
      throw DimensionMismatch("verify_lb3_relations: matrices must be square, same size");

  const ComplexMatrix id = ComplexMatrix::identity(g1.rows());
  RelationReport report;
  report.tol = tol.residual_eps;
  report.residuals[0] = frobenius_distance(g1 * g2 * g1, g2 * g1 * g2);
  report.residuals[1] = frobenius_distance(s1 * s2 * s1, s2 * s1 * s2);
  report.residuals[2] =
      std::max(frobenius_distance(s1 * s1, id), frobenius_distance(s2 * s2, id));
  report.residuals[3] = frobenius_distance(s1 * s2 * g1, g2 * s1 * s2);
  report.residuals[4] = frobenius_distance(g1 * g2 * s1, s2 * g1 * g2);
  report.pass = report.max_residual() <= report.tol;
  return report;
}

}  // namespace lb3
