#include "lb3/report.hpp"

#include <algorithm>

#include "lb3/errors.hpp"
#include "lb3/irreducibility.hpp"
#include "lb3/loopbraid.hpp"
#include "lb3/rep_builder.hpp"

namespace lb3 {

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Extends: return "EXTENDS";
    case RowStatus::No: return "NO";
    case RowStatus::Unknown: return "UNKNOWN";
    case RowStatus::UnknownDegenerate: return "UNKNOWN-degenerate";
  }
  return "?";
}

RowStatus gamma_row_status(const ComponentRecord& rec) {
  switch (rec.irreducible_dense) {
    case Density::Yes:
      // Equal rho / rho^2 multiplicities are exactly when the involution
      // realizing the extension exists; for n >= 2 this coincides with the
      // (u,v,w) parametrization, and at n = 1 it covers the scalar
      // components the parametrization misses.
      return rec.alpha.y == rec.alpha.z ? RowStatus::Extends : RowStatus::No;
    case Density::No:
      return RowStatus::No;
    case Density::UnknownDegenerate:
      return RowStatus::UnknownDegenerate;
  }
  return RowStatus::Unknown;
}

namespace {

WitnessRun run_witness(const AlphaTuple& witness_alpha, std::uint64_t seed, Cplx lambda,
                       const Tolerance& tol) {
  WitnessRun run;
  run.seed = seed;
  run.lambda = lambda;

  // The equal-pair family splits by nature; everywhere else the witness
  // must generate the full matrix algebra.
  const bool expect_irreducible = !generically_decomposable(witness_alpha);
  BuildOptions opts;
  opts.require_irreducible = expect_irreducible;

  GammaRep rep = build_gamma_rep(witness_alpha, seed, opts, tol);
  rep.lambda = lambda;
  auto assembled = assemble_lb3(rep, lambda, std::nullopt, tol);
  if (std::holds_alternative<ObstructionCertificate>(assembled))
    throw Error("report: unexpected obstruction in component " + to_string(witness_alpha));
  const LB3Rep& lb3 = std::get<LB3Rep>(assembled);

  const RelationReport rel = verify_lb3_relations(lb3, tol);
  run.max_residual = rel.max_residual();

  const ComplexMatrix quad[] = {lb3.sigma1, lb3.sigma2, lb3.s1, lb3.s2};
  run.burnside_dim = burnside_dimension(quad, tol);
  run.commutant_dim = commutant_dimension(rep, tol);

  const int n = rep.n();
  run.pass = rel.pass &&
             (!expect_irreducible || (run.burnside_dim == n * n && run.commutant_dim == 1));
  return run;
}

}  // namespace

std::vector<ReportRow> b3_report_rows(int n, const ReportOptions& opts) {
  std::vector<ReportRow> rows;
  for (const B3Component& comp : enumerate_b3_components(n)) {
    ReportRow row;
    row.alpha = comp.normal_form;
    row.n = n;
    row.dim = comp.record.dim;
    row.uvw = comp.record.b3_extends;
    row.witness_alpha = comp.extension_witness;
    row.status = comp.extension_witness ? RowStatus::Extends : RowStatus::Unknown;

    if (row.status == RowStatus::Extends && opts.verify_witnesses) {
      for (int k = 0; k < opts.seeds_per_component; ++k)
        row.runs.push_back(
            run_witness(*comp.extension_witness, opts.seed_base + k, Cplx(1.0, 0.0), opts.tol));
    }
    if (row.status == RowStatus::Unknown && opts.demonstrate_obstructions) {
      const GammaRep rep = build_gamma_rep(comp.normal_form, opts.seed_base, BuildOptions{}, opts.tol);
      auto attempt = assemble_lb3(rep, Cplx(1.0, 0.0), std::nullopt, opts.tol);
      if (std::holds_alternative<ObstructionCertificate>(attempt))
        row.obstruction_mults = std::get<ObstructionCertificate>(attempt).mults;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& l, const ReportRow& r) { return l.alpha < r.alpha; });
  return rows;
}

Report build_report(int n_max, const ReportOptions& opts) {
  if (n_max < 1) throw Error("build_report: n_max must be >= 1");
  Report report;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    for (ReportRow& row : b3_report_rows(n, opts)) {
      ++report.components;
      if (row.status == RowStatus::Extends)
        ++report.extends;
      else
        ++report.unknown;
      for (const WitnessRun& run : row.runs) {
        ++report.witnesses_run;
        if (run.pass) ++report.witnesses_passed;
        report.max_residual = std::max(report.max_residual, run.max_residual);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace lb3
