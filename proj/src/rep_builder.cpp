#include "lb3/rep_builder.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "lb3/errors.hpp"
#include "lb3/irreducibility.hpp"
#include "lb3/random.hpp"

namespace lb3 {

namespace {

int round_checked(double value, const char* what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6)
    throw NonIntegralMultiplicity(std::string(what) + ": trace residue " +
                                  std::to_string(std::abs(value - rounded)));
  return static_cast<int>(rounded);
}

}  // namespace

std::pair<int, int> restriction_multiplicities_c2(const ComplexMatrix& S, const Tolerance& tol) {
  if (!S.is_square()) throw DimensionMismatch("restriction_multiplicities_c2: not square");
  const int n = S.rows();
  if (frobenius_distance(S * S, ComplexMatrix::identity(n)) > tol.residual_eps)
    throw NotAnInvolution("restriction_multiplicities_c2: S^2 != I");
  const Cplx tr = trace(S);
  if (std::abs(tr.imag()) > 1e-6)
    throw NonIntegralMultiplicity("restriction_multiplicities_c2: complex trace");
  const int a = round_checked((n + tr.real()) / 2.0, "restriction_multiplicities_c2");
  if (a < 0 || a > n)
    throw NonIntegralMultiplicity("restriction_multiplicities_c2: multiplicity out of range");
  return {a, n - a};
}

std::array<int, 3> restriction_multiplicities_c3(const ComplexMatrix& T, const Tolerance& tol) {
  if (!T.is_square()) throw DimensionMismatch("restriction_multiplicities_c3: not square");
  const int n = T.rows();
  const ComplexMatrix t2 = T * T;
  if (frobenius_distance(T * t2, ComplexMatrix::identity(n)) > tol.residual_eps)
    throw NotOrderThree("restriction_multiplicities_c3: T^3 != I");

  const Cplx tr1 = trace(T);
  const Cplx tr2 = trace(t2);
  const Cplx rho2 = kRho * kRho;
  std::array<int, 3> mults{};
  for (int k = 0; k < 3; ++k) {
    // conj(rho^k) = rho^{-k} since |rho| = 1
    const Cplx rk = k == 0 ? Cplx(1.0, 0.0) : (k == 1 ? std::conj(kRho) : std::conj(rho2));
    const Cplx tr_pk = (Cplx(static_cast<double>(n), 0.0) + rk * tr1 + rk * rk * tr2) / 3.0;
    if (std::abs(tr_pk.imag()) > 1e-6)
      throw NonIntegralMultiplicity("restriction_multiplicities_c3: complex projector trace");
    mults[k] = round_checked(tr_pk.real(), "restriction_multiplicities_c3");
    if (mults[k] < 0)
      throw NonIntegralMultiplicity("restriction_multiplicities_c3: negative multiplicity");
  }
  if (mults[0] + mults[1] + mults[2] != n)
    throw NonIntegralMultiplicity("restriction_multiplicities_c3: multiplicities do not sum to n");
  return mults;
}

AlphaTuple restriction_alpha(const ComplexMatrix& S, const ComplexMatrix& T,
                             const Tolerance& tol) {
  const auto [a, b] = restriction_multiplicities_c2(S, tol);
  const auto xyz = restriction_multiplicities_c3(T, tol);
  return {a, b, xyz[0], xyz[1], xyz[2]};
}

GammaRep build_gamma_rep(const AlphaTuple& alpha, std::uint64_t seed, const BuildOptions& opts,
                         const Tolerance& tol) {
  if (!alpha.consistent()) throw DegenerateAlpha("build_gamma_rep: inconsistent tuple");
  const int n = alpha.n();
  if (n == 0) throw DegenerateAlpha("build_gamma_rep: zero-dimensional tuple");

  std::vector<Cplx> s_diag(n), t_diag(n);
  for (int i = 0; i < n; ++i) s_diag[i] = i < alpha.a ? Cplx(1.0, 0.0) : Cplx(-1.0, 0.0);
  const Cplx rho2 = std::conj(kRho);
  for (int i = 0; i < n; ++i)
    t_diag[i] = i < alpha.x ? Cplx(1.0, 0.0) : (i < alpha.x + alpha.y ? kRho : rho2);

  GammaRep rep;
  rep.S = ComplexMatrix::diagonal(s_diag);
  rep.alpha = alpha;
  rep.seed = seed;

  const ComplexMatrix d = ComplexMatrix::diagonal(t_diag);
  SeededRng rng(seed);
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    const ComplexMatrix c = random_unit_square_matrix(n, n, rng);
    InverseResult inv;
    try {
      inv = inverse_with_pivots(c, tol);
    } catch (const SingularMatrix&) {
      continue;
    }
    if (inv.pivot_ratio() < opts.pivot_ratio_floor) continue;

    rep.T = c * d * inv.inv;
    if (frobenius_norm(rep.T) > opts.t_norm_ceiling) continue;
    if (restriction_alpha(rep.S, rep.T, tol) != alpha) continue;
    if (opts.require_irreducible && !is_irreducible(rep, tol)) continue;
    return rep;
  }
  throw RetryExhausted("build_gamma_rep: no usable base change after " +
                       std::to_string(opts.max_retries + 1) + " attempts for " +
                       to_string(alpha));
}

B3Rep braid_images(const GammaRep& rep, Cplx lambda, const Tolerance& tol) {
  B3Rep b;
  b.lambda = lambda;
  b.source = rep;
  const ComplexMatrix t2 = rep.T * rep.T;
  b.sigma1 = lambda * (t2 * rep.S);
  b.sigma2 = lambda * (rep.S * t2);

  const double braid = frobenius_distance(b.sigma1 * b.sigma2 * b.sigma1,
                                          b.sigma2 * b.sigma1 * b.sigma2);
  const double factor = frobenius_distance(b.sigma1 * b.sigma2, (lambda * lambda) * rep.T);
  // roundoff in the two triple products grows with the generator norms
  const double scale =
      std::max(1.0, std::pow(std::max(frobenius_norm(b.sigma1), 1.0), 3.0));
  if (braid > tol.residual_eps * scale || factor > tol.residual_eps * scale)
    throw Error("braid_images: construction self-check failed, residual " +
                std::to_string(std::max(braid, factor)));
  return b;
}

AlphaTuple mu6_scaled_alpha(const GammaRep& rep, const Tolerance& tol) {
  const B3Rep b = braid_images(rep, Cplx(1.0, 0.0), tol);
  const ComplexMatrix s1 = kSixthRoot * b.sigma1;
  const ComplexMatrix s2 = kSixthRoot * b.sigma2;
  // t = sigma1 sigma2 and s = sigma1 sigma2 sigma1 in the quotient group
  const ComplexMatrix t_scaled = s1 * s2;
  const ComplexMatrix s_scaled = t_scaled * s1;
  return restriction_alpha(s_scaled, t_scaled, tol);
}

}  // namespace lb3
