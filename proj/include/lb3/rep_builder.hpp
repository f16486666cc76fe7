#pragma once

// Construction of explicit matrix representations of the modular group
// inside a chosen component, recovery of eigenvalue multiplicities from
// matrices, and braid generator images.
//
// The involution image S is kept exactly diagonal, diag(+1 x a, -1 x b);
// only the order-3 image T = C D C^{-1} carries a seeded random base
// change.  This halves the free parameters (only the relative position of
// the two eigenbasis flags matters) and makes the (a, b) recovery exact.

#include <array>
#include <cstdint>
#include <utility>

#include "lb3/components.hpp"
#include "lb3/linalg.hpp"

namespace lb3 {

struct GammaRep {
  ComplexMatrix S;  // order 2
  ComplexMatrix T;  // order 3
  AlphaTuple alpha;
  std::uint64_t seed = 0;
  Cplx lambda{1.0, 0.0};  // unit-modulus scale applied to braid images

  int n() const { return S.rows(); }
};

struct B3Rep {
  ComplexMatrix sigma1;  // lambda * T^2 S
  ComplexMatrix sigma2;  // lambda * S T^2
  Cplx lambda{1.0, 0.0};
  GammaRep source;
};

struct BuildOptions {
  bool require_irreducible = true;
  int max_retries = 16;
  /// Base changes whose smallest elimination pivot falls below this
  /// fraction of the largest are resampled.
  double pivot_ratio_floor = 1e-6;
  /// Base changes producing |T|_F above this are also resampled: relation
  /// residuals grow like eps * |T|^4, so the ceiling keeps every downstream
  /// 1e-9 residual promise meaningful.  (The pivot-ratio guard alone admits
  /// rare samples with |T| in the hundreds.)
  double t_norm_ceiling = 100.0;
};

/// Build a seeded representation with the requested multiplicities:
/// S = diag(+1 x a, -1 x b) and T = C diag(1 x x, rho x y, rho^2 x z) C^{-1}
/// with C drawn entrywise from the uniform distribution on the unit square.
GammaRep build_gamma_rep(const AlphaTuple& alpha, std::uint64_t seed,
                         const BuildOptions& opts = {}, const Tolerance& tol = {});

/// (a, b) from the trace of the spectral projector (I + S) / 2.
std::pair<int, int> restriction_multiplicities_c2(const ComplexMatrix& S,
                                                  const Tolerance& tol = {});

/// (x, y, z) from the traces of the three order-3 eigenprojectors
/// P_k = (I + rho^{-k} T + rho^{-2k} T^2) / 3.
std::array<int, 3> restriction_multiplicities_c3(const ComplexMatrix& T,
                                                 const Tolerance& tol = {});

/// Full multiplicity tuple of an (S, T) pair.
AlphaTuple restriction_alpha(const ComplexMatrix& S, const ComplexMatrix& T,
                             const Tolerance& tol = {});

/// sigma1 = lambda T^2 S and sigma2 = lambda S T^2; checks the braid
/// relation and sigma1 sigma2 = lambda^2 T before returning.
B3Rep braid_images(const GammaRep& rep, Cplx lambda, const Tolerance& tol = {});

/// Numeric oracle for the sixth-root scaling action on components: scale
/// the braid images of `rep` by exp(i pi / 3), recover the underlying
/// (S', T') from braid words, and read off their multiplicities.
AlphaTuple mu6_scaled_alpha(const GammaRep& rep, const Tolerance& tol = {});

}  // namespace lb3
