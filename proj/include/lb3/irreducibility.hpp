#pragma once

// Numerical irreducibility: a representation is irreducible exactly when
// its images generate the full matrix algebra, so the decision procedure
// closes the generated algebra and compares its dimension with n^2.  The
// commutant dimension (Schur: 1 for irreducibles) serves as an independent
// one-directional cross-check, not as the decision procedure.

#include <span>

#include "lb3/linalg.hpp"
#include "lb3/rep_builder.hpp"

namespace lb3 {

/// Dimension of the unital algebra generated by `gens`: starting from the
/// identity, repeatedly multiply the span basis by the generators and
/// re-orthonormalize under the trace inner product until the dimension
/// stabilizes.  New directions are accepted when the norm surviving the
/// projection exceeds 1e-8 of the pre-projection norm.
int burnside_dimension(std::span<const ComplexMatrix> gens, const Tolerance& tol = {});

/// True iff the algebra generated by {S, T} has dimension n^2.
bool is_irreducible(const GammaRep& rep, const Tolerance& tol = {});

/// Dimension of {X : XG = GX for all generators G}, computed as the kernel
/// dimension of the stacked Sylvester system in the n^2 unknowns of X.
int commutant_dimension(std::span<const ComplexMatrix> gens, const Tolerance& tol = {});
int commutant_dimension(const GammaRep& rep, const Tolerance& tol = {});

}  // namespace lb3
