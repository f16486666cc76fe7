#pragma once

// Dimension-vector bookkeeping for representations of the amalgam
// G = (C2 * C3) *_{C3} S3 ~ C2 * S3.  A G-representation restricts on one
// side to +/-1 eigenspaces (a,b) and on the other to multiplicities
// (x,y,z) of the trivial, sign and two-dimensional S3-irreducibles.  The
// semisimple points decompose into five minimal types S1..S5 with
// multiplicities (p,q,r,s,t), and simplicity of such a multiplicity vector
// in the associated local quiver decides which components carry dense
// irreducible G-representations.

#include <array>
#include <compare>
#include <vector>

#include "lb3/components.hpp"
#include "lb3/linalg.hpp"

namespace lb3 {

/// Left vertices (a,b): +/-1 multiplicities of the involution; right
/// vertices (x,y,z): multiplicities of the trivial, sign and 2-dimensional
/// S3-irreducibles.  Consistency: a + b = x + y + 2z.
struct GQuiverDimVector {
  int a = 0, b = 0;
  int x = 0, y = 0, z = 0;

  int n() const { return a + b; }
  bool consistent() const {
    return a >= 0 && b >= 0 && x >= 0 && y >= 0 && z >= 0 && a + b == x + y + 2 * z;
  }
  auto operator<=>(const GQuiverDimVector&) const = default;
};

/// Multiplicities (p,q,r,s,t) of the five minimal semisimple types.
/// S1..S4 are one-dimensional, S5 is two-dimensional.
struct GDimVector {
  int p = 0, q = 0, r = 0, s = 0, t = 0;

  int total_dim() const { return p + q + r + s + 2 * t; }
  bool is_zero() const { return p == 0 && q == 0 && r == 0 && s == 0 && t == 0; }
  auto operator<=>(const GDimVector&) const = default;
};

std::string to_string(const GDimVector& g);
std::string to_string(const GQuiverDimVector& beta);

/// Stability weights (-1,-1;1,1,2) pairing with (a,b;x,y,z).
inline constexpr std::array<int, 5> kStabilityWeights{-1, -1, 1, 1, 2};

long long stability_pairing(const GQuiverDimVector& beta);

/// The five minimal dimension vectors carrying stable representations:
/// (1,0;1,0,0), (1,0;0,1,0), (0,1;1,0,0), (0,1;0,1,0), (1,1;0,0,1).
std::array<GQuiverDimVector, 5> minimal_theta_stable_vectors();

/// Dimension vector of S1^p + S2^q + S3^r + S4^s + S5^t, namely
/// (p+q+t, r+s+t; p+r, q+s, t).
GQuiverDimVector g_component_of(const GDimVector& g);

/// Simplicity of (p,q,r,s,t) for the local quiver: the vector is
/// (1,0,0,1,0) or (0,1,1,0,0), or it is nonzero and satisfies
/// p <= s+t, q <= r+t, r <= q+t, s <= p+t.  Applied verbatim: the unit
/// vectors at the four loop-free vertices fail the inequalities and are
/// rejected even though each carries a one-dimensional representation;
/// see excluded_simple_singletons.
bool is_simple_dimvector(const GDimVector& g);

/// Restriction to the modular group: (p+q+t, r+s+t; p+q+r+s, t, t).
AlphaTuple restrict_to_gamma(const GDimVector& g);

/// t >= r+s and t >= p+q; provably equivalent to evaluating
/// max(x,y,z) <= min(a,b) on restrict_to_gamma(g).
bool gamma_condition_via_g(const GDimVector& g);

/// All (p,q,r,s,t) with p+q+r+s+2t = n.
std::vector<GDimVector> all_g_dimvectors(int n);

std::vector<GDimVector> enumerate_g_simple_components(int n);

/// Unit vectors at loop-free vertices that the verbatim criterion rejects
/// although they support one-dimensional representations (nonempty only
/// for n = 1).  Reported alongside enumeration output instead of patching
/// the criterion.
std::vector<GDimVector> excluded_simple_singletons(int n);

/// Multiplicities of the trivial, sign and 2-dimensional irreducibles in
/// the S3-representation generated by (s1, s2), from character sums over
/// the three conjugacy classes.
std::array<int, 3> s3_restriction_multiplicities(const ComplexMatrix& s1,
                                                 const ComplexMatrix& s2,
                                                 const Tolerance& tol = {});

}  // namespace lb3
