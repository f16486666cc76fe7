#include <doctest.h>
#include <json.hpp>

#include "lb3/loopbraid.hpp"
#include "lb3/rep_builder.hpp"
#include "lb3/rep_io.hpp"

using namespace lb3;

namespace {

LB3Rep make_lb3(const AlphaTuple& alpha, std::uint64_t seed, Cplx lambda) {
  GammaRep rep = build_gamma_rep(alpha, seed);
  rep.lambda = lambda;
  auto assembled = assemble_lb3(rep, lambda);
  REQUIRE(std::holds_alternative<LB3Rep>(assembled));
  return std::get<LB3Rep>(assembled);
}

}  // namespace

TEST_SUITE("rep_io") {

TEST_CASE("gamma files round-trip bit-identically") {
  GammaRep rep = build_gamma_rep({2, 1, 1, 1, 1}, 7);
  rep.lambda = std::polar(1.0, 0.25);
  const std::string text = serialize_rep(rep);
  const GammaRep back = deserialize_rep(text);
  CHECK(back.S == rep.S);
  CHECK(back.T == rep.T);
  CHECK(back.alpha == rep.alpha);
  CHECK(back.seed == rep.seed);
  CHECK(back.lambda == rep.lambda);
  CHECK(peek_kind(text) == RepFileKind::Gamma);
}

TEST_CASE("lb3 files round-trip bit-identically with their report") {
  const LB3Rep lb3 = make_lb3({2, 2, 2, 1, 1}, 3, Cplx(1.0, 0.0));
  const RelationReport report = verify_lb3_relations(lb3);
  const std::string text = serialize_lb3(lb3, report);
  const LoadedLB3 back = deserialize_lb3(text);
  CHECK(back.rep.sigma1 == lb3.sigma1);
  CHECK(back.rep.sigma2 == lb3.sigma2);
  CHECK(back.rep.s1 == lb3.s1);
  CHECK(back.rep.s2 == lb3.s2);
  CHECK(back.rep.v1_split == lb3.v1_split);
  CHECK(back.stored_report.pass == report.pass);
  CHECK(back.stored_report.residuals == report.residuals);
  CHECK(peek_kind(text) == RepFileKind::LB3);
}

TEST_CASE("loading rejects a non-involution") {
  GammaRep rep = build_gamma_rep({2, 1, 1, 1, 1}, 9);
  auto j = nlohmann::ordered_json::parse(serialize_rep(rep));
  j["S"][0][0][0] = 0.25;  // S^2 != I now
  CHECK_THROWS_AS(deserialize_rep(j.dump()), ValidationError);
}

TEST_CASE("loading rejects multiplicities that differ from the declared tuple") {
  GammaRep rep = build_gamma_rep({2, 1, 1, 1, 1}, 9);
  auto j = nlohmann::ordered_json::parse(serialize_rep(rep));
  j["alpha"] = {1, 2, 1, 1, 1};  // still consistent, but wrong for these matrices
  CHECK_THROWS_AS(deserialize_rep(j.dump()), ValidationError);

  // tampering one diagonal entry of S keeps it an involution but moves (a,b)
  auto j2 = nlohmann::ordered_json::parse(serialize_rep(rep));
  j2["S"][0][0][0] = -1.0;
  CHECK_THROWS_AS(deserialize_rep(j2.dump()), ValidationError);
}

TEST_CASE("validation can be deferred for diagnostic loads") {
  GammaRep rep = build_gamma_rep({2, 1, 1, 1, 1}, 9);
  auto j = nlohmann::ordered_json::parse(serialize_rep(rep));
  j["alpha"] = {1, 2, 1, 1, 1};
  const GammaRep loose = deserialize_rep(j.dump(), Tolerance{}, false);
  CHECK(loose.alpha == AlphaTuple{1, 2, 1, 1, 1});
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(deserialize_rep("not json at all {"), ValidationError);
  CHECK_THROWS_AS(deserialize_rep("[1,2,3]"), ValidationError);
  CHECK_THROWS_AS(peek_kind("{\"no_kind\": true}"), ValidationError);
}

TEST_CASE("lb3 validation recomputes relations and braid-word consistency") {
  const LB3Rep lb3 = make_lb3({2, 1, 1, 1, 1}, 5, Cplx(1.0, 0.0));
  const RelationReport report = verify_lb3_relations(lb3);
  auto j = nlohmann::ordered_json::parse(serialize_lb3(lb3, report));
  j["s1"][0][0][0] = j["s1"][0][0][0].get<double>() + 0.5;
  CHECK_THROWS_AS(deserialize_lb3(j.dump()), ValidationError);
  CHECK_NOTHROW(deserialize_lb3(j.dump(), Tolerance{}, false));
}

}  // TEST_SUITE
