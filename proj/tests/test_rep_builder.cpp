#include <cmath>
#include <doctest.h>

#include "lb3/irreducibility.hpp"
#include "lb3/rep_builder.hpp"
#include "test_helpers.hpp"

using namespace lb3;
using lb3::testing::near;
using lb3::testing::well_conditioned_matrix;

namespace {
const Cplx kOne{1.0, 0.0};
const Cplx kRho2 = std::conj(kRho);
}  // namespace

TEST_SUITE("rep_builder") {

TEST_CASE("scalar component builds the trivial pair") {
  const GammaRep rep = build_gamma_rep({1, 0, 1, 0, 0}, 99);
  REQUIRE(rep.n() == 1);
  CHECK(near(rep.S.at(0, 0), kOne));
  CHECK(near(rep.T.at(0, 0), kOne));
}

TEST_CASE("trace of T is basis independent: (1,1;0,1,1) gives trace -1") {
  const GammaRep rep = build_gamma_rep({1, 1, 0, 1, 1}, 12345);
  CHECK(near(trace(rep.T), Cplx(-1.0, 0.0), 1e-10));  // rho + rho^2 = -1
}

TEST_CASE("seeded builds are irreducible and recover their multiplicities") {
  const AlphaTuple targets[] = {{2, 1, 1, 1, 1}, {2, 2, 2, 1, 1}, {3, 3, 3, 2, 1},
                                {3, 2, 2, 2, 1}, {1, 1, 0, 1, 1}};
  for (const AlphaTuple& alpha : targets)
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      const GammaRep rep = build_gamma_rep(alpha, seed);
      CHECK(restriction_alpha(rep.S, rep.T) == alpha);
      CHECK(is_irreducible(rep));
      CHECK(frobenius_distance(rep.S * rep.S, ComplexMatrix::identity(rep.n())) <= 1e-12);
      CHECK(frobenius_distance(rep.T * rep.T * rep.T, ComplexMatrix::identity(rep.n())) <=
            1e-10);
    }
}

TEST_CASE("builds are reproducible for a fixed seed") {
  const GammaRep a = build_gamma_rep({2, 1, 1, 1, 1}, 7);
  const GammaRep b = build_gamma_rep({2, 1, 1, 1, 1}, 7);
  CHECK(a.T == b.T);  // bit-identical
  const GammaRep c = build_gamma_rep({2, 1, 1, 1, 1}, 8);
  CHECK(frobenius_distance(a.T, c.T) > 1e-6);
}

TEST_CASE("degenerate and inconsistent tuples are rejected") {
  CHECK_THROWS_AS(build_gamma_rep({0, 0, 0, 0, 0}, 1), DegenerateAlpha);
  CHECK_THROWS_AS(build_gamma_rep({2, 0, 1, 0, 0}, 1), DegenerateAlpha);
}

TEST_CASE("involution multiplicities from traces") {
  const Cplx d2[] = {kOne, Cplx(-1, 0)};
  CHECK(restriction_multiplicities_c2(ComplexMatrix::diagonal(d2)) == std::pair{1, 1});
  CHECK(restriction_multiplicities_c2(ComplexMatrix::identity(3)) == std::pair{3, 0});

  SeededRng rng(31);
  const ComplexMatrix c = well_conditioned_matrix(3, rng);
  const Cplx d3[] = {kOne, kOne, Cplx(-1, 0)};
  const ComplexMatrix s = c * ComplexMatrix::diagonal(d3) * inverse(c);
  CHECK(restriction_multiplicities_c2(s, Tolerance{1e-9, 1e-8}) == std::pair{2, 1});

  CHECK_THROWS_AS(restriction_multiplicities_c2(Cplx(2.0, 0.0) * ComplexMatrix::identity(2)),
                  NotAnInvolution);
}

TEST_CASE("order-3 multiplicities from projector traces") {
  const Cplx d3[] = {kOne, kRho, kRho2};
  CHECK(restriction_multiplicities_c3(ComplexMatrix::diagonal(d3)) ==
        std::array<int, 3>{1, 1, 1});
  CHECK(restriction_multiplicities_c3(ComplexMatrix::identity(2)) ==
        std::array<int, 3>{2, 0, 0});

  SeededRng rng(77);
  const ComplexMatrix c = well_conditioned_matrix(6, rng);
  const Cplx d6[] = {kOne, kOne, kOne, kRho, kRho2, kRho2};
  const ComplexMatrix t = c * ComplexMatrix::diagonal(d6) * inverse(c);
  CHECK(restriction_multiplicities_c3(t, Tolerance{1e-9, 1e-7}) == std::array<int, 3>{3, 1, 2});

  CHECK_THROWS_AS(restriction_multiplicities_c3(Cplx(0.5, 0.0) * ComplexMatrix::identity(2)),
                  NotOrderThree);
}

TEST_CASE("braid images: scalar case and hand-computed diagonal case") {
  const GammaRep scalar = build_gamma_rep({1, 0, 1, 0, 0}, 1);
  const B3Rep sb = braid_images(scalar, kOne);
  CHECK(near(sb.sigma1.at(0, 0), kOne));
  CHECK(near(sb.sigma2.at(0, 0), kOne));

  GammaRep rep;
  const Cplx sd[] = {kOne, Cplx(-1, 0)};
  const Cplx td[] = {kRho, kRho2};
  rep.S = ComplexMatrix::diagonal(sd);
  rep.T = ComplexMatrix::diagonal(td);
  rep.alpha = {1, 1, 0, 1, 1};
  const B3Rep b = braid_images(rep, kOne);
  // T^2 S computed by hand: diag(rho^2, -rho)
  const Cplx expect[] = {kRho2, -kRho};
  CHECK(near(b.sigma1, ComplexMatrix::diagonal(expect), 1e-14));
}

TEST_CASE("central element: (sigma1 sigma2)^3 = lambda^6 I") {
  const AlphaTuple targets[] = {{2, 1, 1, 1, 1}, {2, 2, 0, 2, 2}};
  int k = 0;
  for (const AlphaTuple& alpha : targets)
    for (std::uint64_t seed : {11ull, 12ull}) {
      const Cplx lambda = std::polar(1.0, 0.3 + 0.9 * ++k);
      const GammaRep rep = build_gamma_rep(alpha, seed, BuildOptions{false, 16, 1e-6});
      const B3Rep b = braid_images(rep, lambda);
      const ComplexMatrix prod = b.sigma1 * b.sigma2;
      const Cplx l6 = std::pow(lambda, 6);
      const double scale = std::max(1.0, std::pow(frobenius_norm(b.sigma1), 3.0));
      CHECK(frobenius_distance(prod * prod * prod,
                               l6 * ComplexMatrix::identity(rep.n())) <= 1e-10 * scale);
      // braid relation residual at the documented scale
      CHECK(frobenius_distance(b.sigma1 * b.sigma2 * b.sigma1,
                               b.sigma2 * b.sigma1 * b.sigma2) <= 1e-10 * scale);
      CHECK(frobenius_distance(prod, (lambda * lambda) * rep.T) <= 1e-10 * scale);
    }
}

TEST_CASE("multiplicities are conjugation invariant") {
  const GammaRep rep = build_gamma_rep({2, 2, 2, 1, 1}, 5);
  SeededRng rng(6);
  const ComplexMatrix c = well_conditioned_matrix(rep.n(), rng);
  const ComplexMatrix cinv = inverse(c);
  const AlphaTuple moved =
      restriction_alpha(c * rep.S * cinv, c * rep.T * cinv, Tolerance{1e-9, 1e-7});
  CHECK(moved == rep.alpha);
}

TEST_CASE("mu6 rescaling oracle matches the combinatorial action on seeded builds") {
  const AlphaTuple targets[] = {{1, 0, 1, 0, 0}, {1, 1, 0, 1, 1}, {2, 1, 1, 1, 1},
                                {3, 3, 3, 2, 1}, {2, 2, 2, 1, 1}};
  for (const AlphaTuple& alpha : targets)
    for (std::uint64_t seed : {21ull, 22ull}) {
      const GammaRep rep = build_gamma_rep(alpha, seed);
      CHECK(mu6_scaled_alpha(rep, Tolerance{1e-9, 1e-7}) == mu6_generator_action(alpha));
    }
}

}  // TEST_SUITE
