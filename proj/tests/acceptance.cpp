// Acceptance suite: every headline claim of the library, each run at its
// stated tolerance with one PASS/FAIL line of output.  Returns the number
// of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "lb3/components.hpp"
#include "lb3/irreducibility.hpp"
#include "lb3/loopbraid.hpp"
#include "lb3/quiver.hpp"
#include "lb3/random.hpp"
#include "lb3/rep_builder.hpp"
#include "lb3/report.hpp"

using namespace lb3;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

// ---------------------------------------------------------------------------
// 1. All braid-group components of dimension <= 5 extend, and three seeded
//    witnesses per component verify all relations below 1e-9.
Outcome criterion_extendability_upto_5() {
  Outcome out;
  ReportOptions opts;
  opts.seeds_per_component = 3;
  const Report report = build_report(5, opts);

  int rows = 0;
  double worst = 0.0;
  for (const ReportRow& row : report.rows) {
    ++rows;
    if (row.status != RowStatus::Extends) {
      out.pass = false;
      out.detail << "component " << to_string(row.alpha) << " not marked EXTENDS; ";
    }
    if (static_cast<int>(row.runs.size()) != 3) out.pass = false;
    for (const WitnessRun& run : row.runs) {
      worst = std::max(worst, run.max_residual);
      if (!run.pass || run.max_residual >= 1e-9) {
        out.pass = false;
        out.detail << "witness failure in " << to_string(row.alpha) << " seed " << run.seed
                   << "; ";
      }
    }
  }
  if (rows == 0) out.pass = false;
  out.detail << rows << " components, " << report.witnesses_run
             << " witness runs, max relation residual " << worst << " (< 1e-9)";
  return out;
}

// ---------------------------------------------------------------------------
// 2. At dimension 6 the component (3,3;3,2,1) is flagged, and five seeded
//    extension attempts all certify the (3,2,1) multiplicity mismatch.
Outcome criterion_dimension6_obstruction() {
  Outcome out;
  ReportOptions opts;
  opts.verify_witnesses = false;
  opts.demonstrate_obstructions = false;
  const std::vector<ReportRow> rows = b3_report_rows(6, opts);

  const AlphaTuple target{3, 3, 3, 2, 1};
  const auto hit = std::find_if(rows.begin(), rows.end(),
                                [&](const ReportRow& r) { return r.alpha == target; });
  if (hit == rows.end() || hit->status != RowStatus::Unknown) {
    out.pass = false;
    out.detail << "(3,3;3,2,1) missing or not flagged; ";
  }

  int certified = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const GammaRep rep = build_gamma_rep(target, seed);
    const auto attempt = assemble_lb3(rep, Cplx(1.0, 0.0));
    if (std::holds_alternative<ObstructionCertificate>(attempt) &&
        std::get<ObstructionCertificate>(attempt).mults == std::array<int, 3>{3, 2, 1})
      ++certified;
  }
  if (certified != 5) out.pass = false;
  out.detail << "component flagged UNKNOWN, " << certified
             << "/5 seeds produced certificate (3,2,1)";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Component dimension formula, exact integers.
Outcome criterion_dimension_formula() {
  Outcome out;
  struct Case {
    AlphaTuple alpha;
    long long dim;
  };
  const Case cases[] = {{{3, 3, 3, 2, 1}, 5}, {{2, 1, 1, 1, 1}, 2}, {{1, 0, 1, 0, 0}, 0}};
  for (const Case& c : cases) {
    const long long got = component_dimension(c.alpha);
    if (got != c.dim) {
      out.pass = false;
      out.detail << to_string(c.alpha) << " -> " << got << " (expected " << c.dim << "); ";
    }
  }
  out.detail << "dim(3,3;3,2,1)=5, dim(2,1;1,1,1)=2, dim(1,0;1,0,0)=0, exact";
  return out;
}

// ---------------------------------------------------------------------------
// 4. The closed-form extension criterion agrees with brute-force search over
//    all (u,v,w) with u,v,w <= n, for every 5-tuple with n <= 12.
Outcome criterion_uvw_oracle() {
  Outcome out;
  long long cases = 0, mismatches = 0;
  for (int n = 1; n <= 12; ++n)
    for (const AlphaTuple& t : all_alpha_tuples(n)) {
      ++cases;
      std::optional<UVW> brute;
      for (int u = 0; u <= n && !brute; ++u)
        for (int v = 0; v <= n && !brute; ++v)
          for (int w = 0; w <= n && !brute; ++w)
            if (w >= std::max(u, v) && t.a == v + w && t.b == u + w && t.x == u + v &&
                t.y == w && t.z == w)
              brute = UVW{u, v, w};
      if (gamma_extends(t) != brute) ++mismatches;
    }
  if (mismatches != 0) out.pass = false;
  out.detail << cases << " tuples checked, " << mismatches << " discrepancies";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Proof as a test: for each n <= 10 the tuples reached from simple
//    five-vertex dimension vectors through restriction and the density
//    filter equal the irreducible-dense tuples accepted by the criterion.
Outcome criterion_proof_as_test() {
  Outcome out;
  long long total_g = 0;
  for (int n = 1; n <= 10; ++n) {
    std::set<AlphaTuple> from_g;
    for (const GDimVector& g : enumerate_g_simple_components(n)) {
      ++total_g;
      if (gamma_condition_via_g(g)) from_g.insert(restrict_to_gamma(g));
    }
    std::set<AlphaTuple> from_gamma;
    for (const AlphaTuple& t : all_alpha_tuples(n))
      if (irreducible_density(t) == Density::Yes && gamma_extends(t).has_value())
        from_gamma.insert(t);
    if (from_g != from_gamma) {
      out.pass = false;
      out.detail << "set mismatch at n=" << n << "; ";
    }
  }
  out.detail << "exact set equality for n=1..10 (" << total_g << " simple vectors)";
  return out;
}

// ---------------------------------------------------------------------------
// 6. 50 seeded end-to-end runs across extendable components with n <= 8 and
//    random unit scales: all five relation residuals < 1e-9, full generated
//    algebra, trivial commutant, and central (sigma1 sigma2)^3 = lambda^6 I.
//    Components of the equal-pair family are skipped: they provably contain
//    no irreducible representations.
Outcome criterion_relation_suite() {
  Outcome out;
  std::vector<AlphaTuple> witnesses;
  for (int n = 1; n <= 8; ++n)
    for (const B3Component& comp : enumerate_b3_components(n))
      if (comp.extension_witness && !generically_decomposable(*comp.extension_witness))
        witnesses.push_back(*comp.extension_witness);

  SeededRng angles(424242);
  double worst_rel = 0.0, worst_central = 0.0;
  int runs = 0, failures = 0;
  for (int i = 0; i < 50; ++i) {
    const AlphaTuple alpha = witnesses[i % witnesses.size()];
    const std::uint64_t seed = 1000 + i;
    const Cplx lambda = std::polar(1.0, 2.0 * 3.14159265358979323846 * angles.unit());

    const GammaRep rep = build_gamma_rep(alpha, seed);
    const auto assembled = assemble_lb3(rep, lambda);
    if (std::holds_alternative<ObstructionCertificate>(assembled)) {
      ++failures;
      continue;
    }
    const LB3Rep& lb3 = std::get<LB3Rep>(assembled);
    const RelationReport rel = verify_lb3_relations(lb3);
    worst_rel = std::max(worst_rel, rel.max_residual());

    const int n = rep.n();
    const ComplexMatrix quad[] = {lb3.sigma1, lb3.sigma2, lb3.s1, lb3.s2};
    const ComplexMatrix prod = lb3.sigma1 * lb3.sigma2;
    const Cplx l6 = std::pow(lambda, 6);
    const double central =
        frobenius_distance(prod * prod * prod, l6 * ComplexMatrix::identity(n));
    worst_central = std::max(worst_central, central);

    const bool ok = rel.max_residual() < 1e-9 && burnside_dimension(quad) == n * n &&
                    commutant_dimension(rep) == 1 && central < 1e-9;
    if (!ok) {
      ++failures;
      out.detail << "failure for " << to_string(alpha) << " seed " << seed << "; ";
    }
    ++runs;
  }
  if (failures != 0 || runs != 50) out.pass = false;
  out.detail << runs << " runs over " << witnesses.size()
             << " components, max relation residual " << worst_rel << ", max centrality "
             << worst_central << " (< 1e-9)";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Eigenprojector identities and the involution identities hold within
//    1e-9 for 100 seeded order-3 matrices up to n = 24.
Outcome criterion_projector_involution() {
  Outcome out;
  double worst = 0.0;
  int built = 0;
  const Cplx rho2 = std::conj(kRho);
  for (int i = 0; i < 100; ++i) {
    SeededRng rng(9000 + i);
    const int n = 3 + static_cast<int>(rng.next() % 22);  // 3..24
    const int w = 1 + static_cast<int>(rng.next() % (n / 2));
    const int x = n - 2 * w;

    std::vector<Cplx> diag(n);
    for (int k = 0; k < n; ++k)
      diag[k] = k < x ? Cplx(1.0, 0.0) : (k < x + w ? kRho : rho2);

    ComplexMatrix t;
    for (;;) {
      const ComplexMatrix c = random_unit_square_matrix(n, n, rng);
      try {
        const InverseResult inv = inverse_with_pivots(c);
        if (inv.pivot_ratio() < 1e-6) continue;
        t = c * ComplexMatrix::diagonal(diag) * inv.inv;
        if (frobenius_norm(t) <= 100.0) break;  // same ceiling as the builder
      } catch (const SingularMatrix&) {
      }
    }
    ++built;

    const EigenData ed = eigen_data_order3(t, Tolerance{1e-9, 1e-7});
    const ComplexMatrix id = ComplexMatrix::identity(n);
    ComplexMatrix sum(n, n);
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix& p = ed.projectors[k];
      worst = std::max(worst, frobenius_distance(p * p, p));
      const Cplx rho_k = k == 0 ? Cplx(1.0, 0.0) : (k == 1 ? kRho : rho2);
      worst = std::max(worst, frobenius_distance(t * p, rho_k * p));
      for (int j = 0; j < 3; ++j)
        if (j != k) worst = std::max(worst, frobenius_norm(ed.projectors[j] * p));
      sum = sum + p;
    }
    worst = std::max(worst, frobenius_distance(sum, id));

    const auto q_or = build_involution_q(ed, std::nullopt, Tolerance{1e-9, 1e-7});
    if (!std::holds_alternative<ComplexMatrix>(q_or)) {
      out.pass = false;
      continue;
    }
    const ComplexMatrix& q = std::get<ComplexMatrix>(q_or);
    worst = std::max(worst, frobenius_distance(q * q, id));
    worst = std::max(worst, frobenius_distance(q * t * q, t * t));  // T^2 = T^{-1}
  }
  if (built != 100 || worst >= 1e-9) out.pass = false;
  out.detail << built << " matrices (n up to 24), worst identity residual " << worst
             << " (< 1e-9)";
  return out;
}

// ---------------------------------------------------------------------------
// 8. The combinatorial sixth-root action matches the numeric rescaling
//    oracle exactly on 100 seeded representations.
Outcome criterion_mu6_oracle() {
  Outcome out;
  int matches = 0;
  for (int i = 0; i < 100; ++i) {
    SeededRng pick(31000 + i);
    const int n = 1 + static_cast<int>(pick.next() % 10);
    const int a = static_cast<int>(pick.next() % (n + 1));
    const int x = static_cast<int>(pick.next() % (n + 1));
    const int y = static_cast<int>(pick.next() % (n - x + 1));
    const AlphaTuple alpha{a, n - a, x, y, n - x - y};

    const GammaRep rep =
        build_gamma_rep(alpha, 500 + i, BuildOptions{false, 16, 1e-6}, Tolerance{1e-9, 1e-7});
    if (mu6_scaled_alpha(rep, Tolerance{1e-9, 1e-7}) == mu6_generator_action(alpha))
      ++matches;
    else
      out.detail << "mismatch for " << to_string(alpha) << "; ";
  }
  if (matches != 100) out.pass = false;
  out.detail << matches << "/100 exact multiplicity matches";
  return out;
}

struct Criterion {
  const char* label;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"dimension <= 5 extendability with verified witnesses", criterion_extendability_upto_5},
      {"n = 6 obstruction certificate for (3,3;3,2,1)", criterion_dimension6_obstruction},
      {"component dimension formula", criterion_dimension_formula},
      {"closed-form criterion vs brute force, n <= 12", criterion_uvw_oracle},
      {"simple-vector restriction equals dense extendable set, n <= 10",
       criterion_proof_as_test},
      {"relation suite: 50 seeded runs, n <= 8", criterion_relation_suite},
      {"projector and involution identities, 100 seeds, n <= 24",
       criterion_projector_involution},
      {"sixth-root scaling oracle, 100 seeds", criterion_mu6_oracle},
  };

  int failed = 0;
  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << c.label
              << " -- " << out.detail.str() << " [" << std::fixed << secs << "s]\n"
              << std::defaultfloat;
    if (!out.pass) ++failed;
  }
  std::cout << (failed == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << (8 - failed) << "/8)\n";
  return failed;
}
