#pragma once

// Extension of a modular-group representation to the three-component loop
// braid group.  The added symmetric-group generators are realized through
// an involution Q with Q T Q = T^{-1}: Q fixes the 1-eigenspace of T up to
// a sign split and swaps chosen bases of the rho and rho^2 eigenspaces.
// Such a Q exists exactly when those two eigenspaces have equal dimension;
// otherwise an obstruction certificate is returned instead.

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "lb3/linalg.hpp"
#include "lb3/rep_builder.hpp"

namespace lb3 {

/// Spectral data of an order-3 matrix: polynomial projectors onto the
/// eigenvalue-1, rho and rho^2 eigenspaces, selected column bases for each,
/// and the multiplicities (x, y, z).
struct EigenData {
  std::array<ComplexMatrix, 3> projectors;
  std::array<ComplexMatrix, 3> bases;
  std::array<int, 3> mults{};
};

/// Extension is impossible: the rho and rho^2 eigenspace multiplicities
/// differ (mults[1] != mults[2]), which is the complete conjugacy
/// obstruction to T ~ T^{-1} for an order-3 matrix.
struct ObstructionCertificate {
  std::array<int, 3> mults{};
};

struct LB3Rep {
  ComplexMatrix sigma1, sigma2;  // braid images, scaled by lambda
  ComplexMatrix s1, s2;          // symmetric-group images
  Cplx lambda{1.0, 0.0};
  GammaRep source;
  int v1_split = 0;  // +1-block size of s1 on the 1-eigenspace of T
};

/// Frobenius residuals of the five defining relations:
///   (1) sigma1 sigma2 sigma1 = sigma2 sigma1 sigma2
///   (2) s1 s2 s1 = s2 s1 s2
///   (3) s1^2 = s2^2 = 1          (largest of the two residuals)
///   (4) s1 s2 sigma1 = sigma2 s1 s2
///   (5) sigma1 sigma2 s1 = s2 sigma1 sigma2
struct RelationReport {
  std::array<double, 5> residuals{};
  double tol = 0.0;
  bool pass = false;

  double max_residual() const;
};

/// Names the relations in the order used by RelationReport::residuals.
const char* relation_name(int index);

EigenData eigen_data_order3(const ComplexMatrix& T, const Tolerance& tol = {});

/// Involution Q with Q^2 = I and Q T Q = T^{-1}; acts as +1 on the first
/// v1_split basis vectors of the 1-eigenspace and -1 on the rest (default:
/// all +1), and swaps the chosen rho / rho^2 bases.  The sign split selects
/// which extended component the result lands in; it never affects the
/// defining relations.
std::variant<ComplexMatrix, ObstructionCertificate> build_involution_q(
    const EigenData& ed, std::optional<int> v1_split = std::nullopt,
    const Tolerance& tol = {});

/// Symmetric-group images (s1, s2) = (Q, Q T) extending the representation
/// to the amalgamated product, with self-checks of the group relations.
std::variant<std::pair<ComplexMatrix, ComplexMatrix>, ObstructionCertificate> extend_to_g(
    const GammaRep& rep, std::optional<int> v1_split = std::nullopt,
    const Tolerance& tol = {});

/// Full loop-braid representation: sigma1 = lambda T^2 S, sigma2 = lambda S T^2,
/// s1 = Q, s2 = Q T.
std::variant<LB3Rep, ObstructionCertificate> assemble_lb3(
    const GammaRep& rep, Cplx lambda, std::optional<int> v1_split = std::nullopt,
    const Tolerance& tol = {});

RelationReport verify_lb3_relations(const LB3Rep& rep, const Tolerance& tol = {});

}  // namespace lb3
