#pragma once

// Classification tables and the end-to-end reproduction report: for every
// braid-group component up to a dimension bound, decide extendability and
// confirm each positive answer by seeded construct -> extend -> verify runs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lb3/components.hpp"
#include "lb3/linalg.hpp"

namespace lb3 {

enum class RowStatus { Extends, No, Unknown, UnknownDegenerate };

const char* to_string(RowStatus s);

struct WitnessRun {
  std::uint64_t seed = 0;
  Cplx lambda{1.0, 0.0};
  double max_residual = 0.0;
  int burnside_dim = 0;
  int commutant_dim = 0;
  bool pass = false;
};

struct ReportRow {
  AlphaTuple alpha;  // braid-side normal form
  int n = 0;
  long long dim = 0;
  RowStatus status = RowStatus::Unknown;
  std::optional<UVWAssignment> uvw;
  std::optional<AlphaTuple> witness_alpha;
  std::vector<WitnessRun> runs;
  /// For non-extendable rows: the certificate multiplicities produced by a
  /// seeded extension attempt.
  std::optional<std::array<int, 3>> obstruction_mults;
};

struct ReportOptions {
  int seeds_per_component = 3;
  std::uint64_t seed_base = 1;
  bool verify_witnesses = true;
  /// Also attempt one seeded extension on non-extendable rows to record the
  /// obstruction certificate.
  bool demonstrate_obstructions = true;
  Tolerance tol{};
};

/// Braid-group rows for a single dimension.
std::vector<ReportRow> b3_report_rows(int n, const ReportOptions& opts = {});

struct Report {
  int n_max = 0;
  std::vector<ReportRow> rows;
  int components = 0;
  int extends = 0;
  int unknown = 0;
  int witnesses_run = 0;
  int witnesses_passed = 0;
  double max_residual = 0.0;
  bool all_witnesses_pass() const { return witnesses_run == witnesses_passed; }
};

Report build_report(int n_max, const ReportOptions& opts = {});

/// Status of a single modular-group component for the classification table:
/// Extends / No by the equal-multiplicity criterion on irreducible-dense
/// tuples, UnknownDegenerate otherwise.
RowStatus gamma_row_status(const ComponentRecord& rec);

}  // namespace lb3
