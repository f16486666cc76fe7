#include "lb3/quiver.hpp"

#include <algorithm>
#include <cmath>

#include "lb3/errors.hpp"

namespace lb3 {

std::string to_string(const GDimVector& g) {
  return "(" + std::to_string(g.p) + "," + std::to_string(g.q) + "," + std::to_string(g.r) +
         "," + std::to_string(g.s) + "," + std::to_string(g.t) + ")";
}

std::string to_string(const GQuiverDimVector& beta) {
  return "(" + std::to_string(beta.a) + "," + std::to_string(beta.b) + ";" +
         std::to_string(beta.x) + "," + std::to_string(beta.y) + "," + std::to_string(beta.z) +
         ")";
}

long long stability_pairing(const GQuiverDimVector& beta) {
  return static_cast<long long>(kStabilityWeights[0]) * beta.a + kStabilityWeights[1] * beta.b +
         kStabilityWeights[2] * beta.x + kStabilityWeights[3] * beta.y +
         kStabilityWeights[4] * beta.z;
}

std::array<GQuiverDimVector, 5> minimal_theta_stable_vectors() {
  return {GQuiverDimVector{1, 0, 1, 0, 0}, GQuiverDimVector{1, 0, 0, 1, 0},
          GQuiverDimVector{0, 1, 1, 0, 0}, GQuiverDimVector{0, 1, 0, 1, 0},
          GQuiverDimVector{1, 1, 0, 0, 1}};
}

GQuiverDimVector g_component_of(const GDimVector& g) {
  return {g.p + g.q + g.t, g.r + g.s + g.t, g.p + g.r, g.q + g.s, g.t};
}

bool is_simple_dimvector(const GDimVector& g) {
  if (g.is_zero()) return false;
  if (g == GDimVector{1, 0, 0, 1, 0} || g == GDimVector{0, 1, 1, 0, 0}) return true;
  return g.p <= g.s + g.t && g.q <= g.r + g.t && g.r <= g.q + g.t && g.s <= g.p + g.t;
}

AlphaTuple restrict_to_gamma(const GDimVector& g) {
  return {g.p + g.q + g.t, g.r + g.s + g.t, g.p + g.q + g.r + g.s, g.t, g.t};
}

bool gamma_condition_via_g(const GDimVector& g) {
  return g.t >= g.r + g.s && g.t >= g.p + g.q;
}

std::vector<GDimVector> all_g_dimvectors(int n) {
  std::vector<GDimVector> out;
  for (int t = 0; 2 * t <= n; ++t) {
    const int rest = n - 2 * t;
    for (int p = 0; p <= rest; ++p)
      for (int q = 0; p + q <= rest; ++q)
        for (int r = 0; p + q + r <= rest; ++r) out.push_back({p, q, r, rest - p - q - r, t});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GDimVector> enumerate_g_simple_components(int n) {
  if (n < 1) throw Error("enumerate_g_simple_components: n must be >= 1");
  std::vector<GDimVector> out;
  for (const GDimVector& g : all_g_dimvectors(n))
    if (is_simple_dimvector(g)) out.push_back(g);
  return out;
}

std::vector<GDimVector> excluded_simple_singletons(int n) {
  std::vector<GDimVector> out;
  if (n == 1) {
    out = {GDimVector{1, 0, 0, 0, 0}, GDimVector{0, 1, 0, 0, 0}, GDimVector{0, 0, 1, 0, 0},
           GDimVector{0, 0, 0, 1, 0}};
  }
  return out;
}

namespace {

int round_to_multiplicity(double value, const char* what) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) > 1e-6 || rounded < -0.5)
    throw NonIntegralMultiplicity(std::string(what) + ": trace is not a nonnegative integer");
  return static_cast<int>(rounded);
}

}  // namespace

std::array<int, 3> s3_restriction_multiplicities(const ComplexMatrix& s1,
                                                 const ComplexMatrix& s2,
                                                 const Tolerance& tol) {
  if (!s1.is_square() || !s2.is_square() || s1.rows() != s2.rows())
    throw DimensionMismatch("s3_restriction_multiplicities: shapes differ");
  const int n = s1.rows();
  const ComplexMatrix id = ComplexMatrix::identity(n);
  const ComplexMatrix c3 = s1 * s2;

  const double rel = std::max({frobenius_distance(s1 * s1, id), frobenius_distance(s2 * s2, id),
                               frobenius_distance(s1 * s2 * s1, s2 * s1 * s2),
                               frobenius_distance(c3 * c3 * c3, id)});
  if (rel > tol.residual_eps)
    throw NotAnS3Rep("s3_restriction_multiplicities: relations violated, residual " +
                     std::to_string(rel));

  const Cplx tr1 = trace(s1);
  const Cplx tr3 = trace(c3);
  if (std::abs(tr1.imag()) > 1e-6 || std::abs(tr3.imag()) > 1e-6)
    throw NonIntegralMultiplicity("s3_restriction_multiplicities: complex character sums");

  const double dn = static_cast<double>(n);
  const int mt = round_to_multiplicity((dn + 3.0 * tr1.real() + 2.0 * tr3.real()) / 6.0, "trivial");
  const int ms = round_to_multiplicity((dn - 3.0 * tr1.real() + 2.0 * tr3.real()) / 6.0, "sign");
  const int mp = round_to_multiplicity((2.0 * dn - 2.0 * tr3.real()) / 6.0, "2-dimensional");
  if (mt + ms + 2 * mp != n)
    throw NonIntegralMultiplicity("s3_restriction_multiplicities: multiplicities do not sum to n");
  return {mt, ms, mp};
}

}  // namespace lb3
