#pragma once

// Combinatorial classification of the irreducible components of the
// representation varieties of the modular group and of the three-string
// braid group.  A component is labelled by a 5-tuple alpha = (a,b;x,y,z):
// a and b count the +1/-1 eigenvalues of the order-2 generator image, and
// x,y,z count the 1/rho/rho^2 eigenvalues of the order-3 generator image.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace lb3 {

struct AlphaTuple {
  int a = 0, b = 0;
  int x = 0, y = 0, z = 0;

  int n() const { return a + b; }
  bool consistent() const {
    return a >= 0 && b >= 0 && x >= 0 && y >= 0 && z >= 0 && a + b == x + y + z;
  }

  auto operator<=>(const AlphaTuple&) const = default;
};

std::string to_string(const AlphaTuple& alpha);

/// Whether the component generically consists of irreducible representations.
///   Yes                -- dense irreducibles exist
///   No                 -- xyz != 0 but max(x,y,z) > min(a,b)
///   UnknownDegenerate  -- some multiplicity vanishes and no criterion applies
enum class Density { Yes, No, UnknownDegenerate };

const char* to_string(Density d);

struct UVW {
  int u = 0, v = 0, w = 0;
  auto operator<=>(const UVW&) const = default;
};

/// A braid-side match: which slot of (x,y,z) carries u+v (0,1,2); the two
/// remaining slots both equal w.
struct UVWAssignment {
  UVW uvw;
  int uplusv_slot = 0;
};

struct ComponentRecord {
  AlphaTuple alpha;
  int n = 0;
  long long dim = 0;
  Density irreducible_dense = Density::UnknownDegenerate;
  std::optional<UVW> gamma_extends;
  std::optional<UVWAssignment> b3_extends;
};

/// Component dimension 1 + n^2 - (a^2 + b^2 + x^2 + y^2 + z^2).
long long component_dimension(const AlphaTuple& alpha);

Density irreducible_density(const AlphaTuple& alpha);

/// True for the equal-pair family (w,w;0,w,w) with w >= 2: those components
/// carry no irreducible representations at all -- every representation in
/// them splits into w two-dimensional irreducible summands (numerically:
/// generated algebra dimension 4w, commutant dimension w).  The family is
/// still labelled Yes by irreducible_density because the quiver-side
/// parametrization certifies it; this predicate records the refinement.
bool generically_decomposable(const AlphaTuple& alpha);

/// Action of scaling the braid generator images by a primitive sixth root
/// of unity: the order-2 image flips sign (swapping a and b) and the
/// order-3 image picks up a factor rho (cyclic shift of the eigenvalue
/// multiplicities).  Returns (b, a; z, x, y).  Pinned by the numeric
/// rescaling oracle in the representation builder, not by formula lore;
/// the tests recompute it from matrices.
AlphaTuple mu6_generator_action(const AlphaTuple& alpha);

/// Distinct orbit members under the sixth-root scaling action, in
/// generator-power order starting from alpha itself.
std::vector<AlphaTuple> mu6_orbit(const AlphaTuple& alpha);

/// Canonical representative of the orbit: lexicographic minimum among
/// members with a >= b and x = max(x,y,z).  Such members always exist; the
/// strict_form flag additionally records whether b >= x holds for it, i.e.
/// whether the representative satisfies the full chain a >= b >= x.
struct B3NormalForm {
  AlphaTuple alpha;
  bool strict_form = true;
};
B3NormalForm b3_normal_form(const AlphaTuple& alpha);

/// Modular-group extension criterion: Some(u,v,w) iff
/// alpha = (v+w, u+w; u+v, w, w) with natural u,v,w and w >= max(u,v).
std::optional<UVW> gamma_extends(const AlphaTuple& alpha);

/// Braid-group extension criterion: a = v+w, b = u+w and {x,y,z} matches
/// the multiset {u+v, w, w}, with w >= max(u,v).  Slots are tried in the
/// order x, y, z, first on alpha and then with a and b swapped; the first
/// admissible assignment wins.
std::optional<UVWAssignment> b3_extends(const AlphaTuple& alpha);

/// All consistent 5-tuples with a+b = n = x+y+z, lexicographically sorted.
std::vector<AlphaTuple> all_alpha_tuples(int n);

std::vector<ComponentRecord> enumerate_gamma_components(int n);

/// One braid-group component: an orbit of modular-group components under
/// the sixth-root scaling, at least one of which is irreducible-dense.
struct B3Component {
  AlphaTuple normal_form;
  std::vector<AlphaTuple> orbit;  // sorted
  bool strict_normal_form = true;
  /// Lexicographically minimal orbit member with y == z; a concrete
  /// extension witness is constructed in this member's component.  Empty
  /// when the orbit has no such member (the extension criterion fails).
  std::optional<AlphaTuple> extension_witness;
  ComponentRecord record;  // evaluated at normal_form
};

std::vector<B3Component> enumerate_b3_components(int n);

}  // namespace lb3
