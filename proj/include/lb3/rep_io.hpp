#pragma once

// JSON (de)serialization of representation files.  Two kinds share one set
// of conventions: matrices are arrays of rows whose entries are [re, im]
// pairs, written with enough digits to round-trip bit-exactly.
//
//   gamma_rep: schema_version, kind, alpha [a,b,x,y,z], n, seed,
//              lambda [re,im], matrices S and T
//   lb3_rep:   the gamma_rep fields plus v1_split, matrices sigma1,
//              sigma2, s1, s2 and the residual report of the five
//              defining relations

#include <string>

#include "lb3/loopbraid.hpp"
#include "lb3/rep_builder.hpp"

namespace lb3 {

enum class RepFileKind { Gamma, LB3 };

/// Kind of a serialized document without full validation.
RepFileKind peek_kind(const std::string& text);

std::string serialize_rep(const GammaRep& rep);

/// Parse and, when validate is set, enforce the invariants: finite entries,
/// S^2 = I and T^3 = I within tolerance, and recovered multiplicities equal
/// to the declared tuple.  Throws ValidationError.
GammaRep deserialize_rep(const std::string& text, const Tolerance& tol = {},
                         bool validate = true);

std::string serialize_lb3(const LB3Rep& rep, const RelationReport& report);

struct LoadedLB3 {
  LB3Rep rep;
  RelationReport stored_report;
};

/// Parse an lb3_rep document; when validate is set the five relation
/// residuals are recomputed and must pass at the stored tolerance, and the
/// braid images must match lambda * T^2 S and lambda * S T^2.
LoadedLB3 deserialize_lb3(const std::string& text, const Tolerance& tol = {},
                          bool validate = true);

void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

}  // namespace lb3
