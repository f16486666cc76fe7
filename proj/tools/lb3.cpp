// Command-line interface: classification tables for the modular-group /
// braid-group / amalgam components, seeded witness construction, loop braid
// extension with obstruction certificates, file verification, and the full
// reproduction report.
//
// Exit codes: 0 success, 1 error or failed check, 2 extension obstruction.

#include <CLI11.hpp>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "lb3/components.hpp"
#include "lb3/errors.hpp"
#include "lb3/irreducibility.hpp"
#include "lb3/loopbraid.hpp"
#include "lb3/quiver.hpp"
#include "lb3/rep_builder.hpp"
#include "lb3/rep_io.hpp"
#include "lb3/report.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lb3;

constexpr double kPi = 3.14159265358979323846;

AlphaTuple parse_alpha(const std::string& text) {
  AlphaTuple alpha;
  int fields[5] = {0, 0, 0, 0, 0};
  std::stringstream ss(text);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count >= 5) throw Error("--alpha expects five comma-separated naturals");
    fields[count++] = std::stoi(item);
  }
  if (count != 5) throw Error("--alpha expects five comma-separated naturals");
  alpha = {fields[0], fields[1], fields[2], fields[3], fields[4]};
  if (!alpha.consistent())
    throw Error("alpha " + to_string(alpha) + " is inconsistent: need a+b = x+y+z, all >= 0");
  return alpha;
}

// Unit-circle scale given as a rational multiple of pi, "p/q" or "p".
Cplx parse_lambda_angle(const std::string& text) {
  if (text.empty()) return {1.0, 0.0};
  long p = 0, q = 1;
  const auto slash = text.find('/');
  p = std::stol(text.substr(0, slash));
  if (slash != std::string::npos) q = std::stol(text.substr(slash + 1));
  if (q == 0) throw Error("--lambda-angle: zero denominator");
  return std::polar(1.0, kPi * static_cast<double>(p) / static_cast<double>(q));
}

json alpha_json(const AlphaTuple& a) { return json::array({a.a, a.b, a.x, a.y, a.z}); }

json uvw_assignment_json(const UVWAssignment& m) {
  return {{"u", m.uvw.u}, {"v", m.uvw.v}, {"w", m.uvw.w}, {"uplusv_slot", m.uplusv_slot}};
}

std::string uvw_text(const std::optional<UVW>& uvw) {
  if (!uvw) return "-";
  return "u=" + std::to_string(uvw->u) + ",v=" + std::to_string(uvw->v) +
         ",w=" + std::to_string(uvw->w);
}

std::string residual_text(double r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << r;
  return os.str();
}

// ---------------------------------------------------------------- components

int run_components(const std::string& group, int n, const std::string& format) {
  if (group == "gamma") {
    json rows = json::array();
    std::cout.setf(std::ios::left);
    if (format == "table")
      std::cout << std::setw(18) << "alpha" << std::setw(6) << "dim" << std::setw(20)
                << "density" << std::setw(20) << "status" << "uvw\n";
    for (const ComponentRecord& rec : enumerate_gamma_components(n)) {
      const RowStatus status = gamma_row_status(rec);
      const bool dense = rec.irreducible_dense == Density::Yes;
      if (format == "table") {
        std::cout << std::setw(18) << to_string(rec.alpha) << std::setw(6)
                  << (dense ? std::to_string(rec.dim) : std::string("-")) << std::setw(20)
                  << to_string(rec.irreducible_dense) << std::setw(20) << to_string(status)
                  << uvw_text(rec.gamma_extends) << "\n";
      } else {
        json row = {{"alpha", alpha_json(rec.alpha)},
                    {"dim", rec.dim},
                    {"density", to_string(rec.irreducible_dense)},
                    {"status", to_string(status)}};
        row["uvw"] = rec.gamma_extends
                         ? json::array({rec.gamma_extends->u, rec.gamma_extends->v,
                                        rec.gamma_extends->w})
                         : json();
        rows.push_back(std::move(row));
      }
    }
    if (format == "json")
      std::cout << json{{"group", "gamma"}, {"n", n}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }

  if (group == "b3") {
    json rows = json::array();
    std::cout.setf(std::ios::left);
    if (format == "table")
      std::cout << std::setw(18) << "alpha" << std::setw(6) << "dim" << std::setw(10)
                << "status" << std::setw(22) << "uvw" << std::setw(18) << "witness"
                << "orbit\n";
    for (const B3Component& comp : enumerate_b3_components(n)) {
      const RowStatus status =
          comp.extension_witness ? RowStatus::Extends : RowStatus::Unknown;
      if (format == "table") {
        std::string uvw = "-";
        if (comp.record.b3_extends) {
          const UVWAssignment& m = *comp.record.b3_extends;
          uvw = "u=" + std::to_string(m.uvw.u) + ",v=" + std::to_string(m.uvw.v) +
                ",w=" + std::to_string(m.uvw.w) + ",slot=" + "xyz"[m.uplusv_slot];
        }
        std::cout << std::setw(18) << to_string(comp.normal_form) << std::setw(6)
                  << comp.record.dim << std::setw(10) << to_string(status) << std::setw(22)
                  << uvw << std::setw(18)
                  << (comp.extension_witness ? to_string(*comp.extension_witness) : "-")
                  << comp.orbit.size() << "\n";
      } else {
        json row = {{"alpha", alpha_json(comp.normal_form)},
                    {"dim", comp.record.dim},
                    {"status", to_string(status)},
                    {"strict_normal_form", comp.strict_normal_form},
                    {"orbit_size", comp.orbit.size()}};
        row["uvw"] = comp.record.b3_extends ? uvw_assignment_json(*comp.record.b3_extends)
                                            : json();
        row["witness"] =
            comp.extension_witness ? alpha_json(*comp.extension_witness) : json();
        json orbit = json::array();
        for (const AlphaTuple& m : comp.orbit) orbit.push_back(alpha_json(m));
        row["orbit"] = std::move(orbit);
        rows.push_back(std::move(row));
      }
    }
    if (format == "json")
      std::cout << json{{"group", "b3"}, {"n", n}, {"rows", rows}}.dump(2) << "\n";
    return 0;
  }

  if (group == "g") {
    json rows = json::array();
    std::cout.setf(std::ios::left);
    if (format == "table")
      std::cout << std::setw(14) << "gamma-vec" << std::setw(16) << "beta" << std::setw(16)
                << "restriction" << "dense-after-restriction\n";
    for (const GDimVector& g : enumerate_g_simple_components(n)) {
      if (format == "table") {
        std::cout << std::setw(14) << to_string(g) << std::setw(16)
                  << to_string(g_component_of(g)) << std::setw(16)
                  << to_string(restrict_to_gamma(g))
                  << (gamma_condition_via_g(g) ? "yes" : "no") << "\n";
      } else {
        rows.push_back({{"gamma_vector", {g.p, g.q, g.r, g.s, g.t}},
                        {"beta",
                         {g_component_of(g).a, g_component_of(g).b, g_component_of(g).x,
                          g_component_of(g).y, g_component_of(g).z}},
                        {"restriction", alpha_json(restrict_to_gamma(g))},
                        {"dense_after_restriction", gamma_condition_via_g(g)}});
      }
    }
    const auto excluded = excluded_simple_singletons(n);
    if (format == "table") {
      if (!excluded.empty()) {
        std::cout << "note: the criterion rejects " << excluded.size()
                  << " loop-free unit vectors that still carry 1-dimensional "
                     "representations:";
        for (const GDimVector& g : excluded) std::cout << " " << to_string(g);
        std::cout << "\n";
      }
    } else {
      json ex = json::array();
      for (const GDimVector& g : excluded) ex.push_back({g.p, g.q, g.r, g.s, g.t});
      std::cout << json{{"group", "g"}, {"n", n}, {"rows", rows}, {"excluded_singletons", ex}}
                       .dump(2)
                << "\n";
    }
    return 0;
  }

  throw Error("unknown group \"" + group + "\" (expected gamma, b3 or g)");
}

// ----------------------------------------------------------------- construct

int run_construct(const std::string& alpha_text, std::uint64_t seed,
                  const std::string& lambda_angle, std::string out_path,
                  bool allow_reducible) {
  const AlphaTuple alpha = parse_alpha(alpha_text);
  if (irreducible_density(alpha) != Density::Yes)
    throw Error("component " + to_string(alpha) +
                " is not irreducible-dense; construction targets dense components only");

  BuildOptions opts;
  if (allow_reducible || generically_decomposable(alpha)) opts.require_irreducible = false;
  if (generically_decomposable(alpha) && !allow_reducible)
    throw Error("component " + to_string(alpha) +
                " has no irreducible representations (every point splits into "
                "2-dimensional summands); rerun with --allow-reducible to build anyway");

  GammaRep rep = build_gamma_rep(alpha, seed, opts);
  rep.lambda = parse_lambda_angle(lambda_angle);

  const ComplexMatrix gens[] = {rep.S, rep.T};
  const int n = rep.n();
  const int bd = burnside_dimension(gens);
  if (opts.require_irreducible && bd != n * n)
    throw Error("irreducibility verification failed unexpectedly");

  if (out_path.empty()) {
    std::ostringstream name;
    name << "gamma_rep_" << alpha.a << "-" << alpha.b << "-" << alpha.x << "-" << alpha.y
         << "-" << alpha.z << "_seed" << seed << ".json";
    out_path = name.str();
  }
  save_text(out_path, serialize_rep(rep));
  std::cout << "wrote " << out_path << "\n"
            << "alpha " << to_string(alpha) << ", n=" << n << ", seed=" << seed
            << ", burnside dimension " << bd << " of n^2 = " << n * n
            << (bd == n * n ? " (irreducible)" : " (reducible)") << "\n";
  return 0;
}

// -------------------------------------------------------------------- extend

int run_extend(const std::string& in_path, int v1_split, bool split_given,
               std::string out_path) {
  const GammaRep rep = deserialize_rep(load_text(in_path));
  std::optional<int> split;
  if (split_given) split = v1_split;

  auto assembled = assemble_lb3(rep, rep.lambda, split);
  if (std::holds_alternative<ObstructionCertificate>(assembled)) {
    const auto& cert = std::get<ObstructionCertificate>(assembled);
    std::cout << "obstruction: rho/rho^2 eigenvalue multiplicities differ\n"
              << "certificate: multiplicities (" << cert.mults[0] << "," << cert.mults[1]
              << "," << cert.mults[2] << "), y != z\n";
    return 2;
  }

  const LB3Rep& lb3 = std::get<LB3Rep>(assembled);
  const RelationReport report = verify_lb3_relations(lb3);
  for (int i = 0; i < 5; ++i)
    std::cout << "(" << i + 1 << ") " << std::setw(45) << std::left << relation_name(i)
              << " residual " << residual_text(report.residuals[i]) << "\n";
  std::cout << (report.pass ? "all relations hold" : "RELATION FAILURE") << " at tolerance "
            << report.tol << "\n";
  if (!report.pass) return 1;

  if (out_path.empty()) {
    std::string stem = in_path;
    const auto dot = stem.rfind(".json");
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    out_path = stem + ".lb3.json";
  }
  save_text(out_path, serialize_lb3(lb3, report));
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

// --------------------------------------------------------------------- check

int run_check(const std::string& path, double residual_eps) {
  const Tolerance tol{1e-9, residual_eps};
  const std::string text = load_text(path);
  if (peek_kind(text) == RepFileKind::Gamma) {
    const GammaRep rep = deserialize_rep(text, tol, false);
    const int n = rep.n();
    const double s_res = frobenius_distance(rep.S * rep.S, ComplexMatrix::identity(n));
    const double t_res =
        frobenius_distance(rep.T * rep.T * rep.T, ComplexMatrix::identity(n));
    std::cout << "kind gamma_rep, alpha " << to_string(rep.alpha) << ", n=" << n << "\n";
    std::cout << "S^2 - I residual " << residual_text(s_res) << "\n";
    std::cout << "T^3 - I residual " << residual_text(t_res) << "\n";
    bool ok = s_res <= tol.residual_eps && t_res <= tol.residual_eps;
    if (ok) {
      const AlphaTuple recovered = restriction_alpha(rep.S, rep.T, tol);
      std::cout << "recovered multiplicities " << to_string(recovered) << "\n";
      ok = recovered == rep.alpha;
      const B3Rep braid = braid_images(rep, rep.lambda, tol);
      std::cout << "braid relation residual "
                << residual_text(frobenius_distance(braid.sigma1 * braid.sigma2 * braid.sigma1,
                                                    braid.sigma2 * braid.sigma1 * braid.sigma2))
                << "\n";
      const ComplexMatrix gens[] = {rep.S, rep.T};
      const int bd = burnside_dimension(gens, tol);
      std::cout << "burnside dimension " << bd << " of n^2 = " << n * n
                << (bd == n * n ? " (irreducible)" : " (reducible)") << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
  }

  const LoadedLB3 loaded = deserialize_lb3(text, tol, false);
  const RelationReport report = verify_lb3_relations(loaded.rep, tol);
  std::cout << "kind lb3_rep, alpha " << to_string(loaded.rep.source.alpha)
            << ", n=" << loaded.rep.source.n() << "\n";
  for (int i = 0; i < 5; ++i)
    std::cout << "(" << i + 1 << ") " << std::setw(45) << std::left << relation_name(i)
              << " residual " << residual_text(report.residuals[i])
              << (report.residuals[i] <= tol.residual_eps ? "" : "  <-- VIOLATED") << "\n";
  const ComplexMatrix quad[] = {loaded.rep.sigma1, loaded.rep.sigma2, loaded.rep.s1,
                                loaded.rep.s2};
  const int n = loaded.rep.source.n();
  const int bd = burnside_dimension(quad, tol);
  std::cout << "burnside dimension " << bd << " of n^2 = " << n * n
            << (bd == n * n ? " (irreducible)" : " (reducible)") << "\n";
  std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  return report.pass ? 0 : 1;
}

// -------------------------------------------------------------------- report

json report_to_json(const Report& report) {
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    json jr = {{"n", row.n},
               {"alpha", alpha_json(row.alpha)},
               {"dim", row.dim},
               {"status", to_string(row.status)}};
    jr["uvw"] = row.uvw ? uvw_assignment_json(*row.uvw) : json();
    jr["witness_component"] = row.witness_alpha ? alpha_json(*row.witness_alpha) : json();
    json runs = json::array();
    for (const WitnessRun& run : row.runs)
      runs.push_back({{"seed", run.seed},
                      {"max_residual", run.max_residual},
                      {"burnside_dim", run.burnside_dim},
                      {"commutant_dim", run.commutant_dim},
                      {"pass", run.pass}});
    jr["runs"] = std::move(runs);
    if (row.obstruction_mults)
      jr["obstruction_mults"] = {(*row.obstruction_mults)[0], (*row.obstruction_mults)[1],
                                 (*row.obstruction_mults)[2]};
    rows.push_back(std::move(jr));
  }
  return {{"n_max", report.n_max},
          {"rows", rows},
          {"summary",
           {{"components", report.components},
            {"extends", report.extends},
            {"unknown", report.unknown},
            {"witnesses_run", report.witnesses_run},
            {"witnesses_passed", report.witnesses_passed},
            {"max_residual", report.max_residual}}}};
}

int run_report(int n_max, int seeds, std::uint64_t seed_base, const std::string& format) {
  ReportOptions opts;
  opts.seeds_per_component = seeds;
  opts.seed_base = seed_base;
  const Report report = build_report(n_max, opts);

  if (format == "json") {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout.setf(std::ios::left);
    int current_n = 0;
    for (const ReportRow& row : report.rows) {
      if (row.n != current_n) {
        current_n = row.n;
        std::cout << "n = " << current_n << "\n";
      }
      std::cout << "  " << std::setw(18) << to_string(row.alpha) << std::setw(6) << row.dim
                << std::setw(10) << to_string(row.status);
      if (!row.runs.empty()) {
        double worst = 0.0;
        bool pass = true;
        for (const WitnessRun& run : row.runs) {
          worst = std::max(worst, run.max_residual);
          pass = pass && run.pass;
        }
        std::cout << " witness " << to_string(*row.witness_alpha) << ": " << row.runs.size()
                  << " seeds, max residual " << residual_text(worst)
                  << (pass ? ", verified" : ", FAILED");
      } else if (row.obstruction_mults) {
        std::cout << " obstruction certificate (" << (*row.obstruction_mults)[0] << ","
                  << (*row.obstruction_mults)[1] << "," << (*row.obstruction_mults)[2]
                  << ")";
      }
      std::cout << "\n";
    }
    json summary = report_to_json(report)["summary"];
    std::cout << "summary " << summary.dump() << "\n";
  }
  return report.all_witnesses_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification and loop braid extension of braid-group representations"};
  app.require_subcommand(1);

  std::string group = "b3";
  int n = 1;
  std::string format = "table";
  CLI::App* components = app.add_subcommand("components", "classification tables");
  components->add_option("--group", group, "gamma, b3 or g")->default_val("b3");
  components->add_option("--n", n, "dimension")->required()->check(CLI::PositiveNumber);
  components->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  std::string alpha_text;
  std::uint64_t seed = 1;
  std::string lambda_angle;
  std::string out_path;
  bool allow_reducible = false;
  CLI::App* construct = app.add_subcommand("construct", "build a seeded witness");
  construct->add_option("--alpha", alpha_text, "a,b,x,y,z")->required();
  construct->add_option("--seed", seed, "build seed");
  construct->add_option("--lambda-angle", lambda_angle, "lambda as exp(i pi p/q), e.g. 1/7");
  construct->add_option("--out", out_path, "output path");
  construct->add_flag("--allow-reducible", allow_reducible,
                      "skip the irreducibility requirement");

  std::string in_path;
  int v1_split = 0;
  CLI::App* extend = app.add_subcommand("extend", "extend a witness file");
  extend->add_option("--in", in_path, "gamma_rep file")->required();
  CLI::Option* split_opt =
      extend->add_option("--v1-split", v1_split, "+1 block size on the 1-eigenspace");
  extend->add_option("--out", out_path, "output path");

  std::string check_path;
  double check_tol = 1e-9;
  CLI::App* check = app.add_subcommand("check", "verify a representation file");
  check->add_option("--in", check_path, "file to verify")->required();
  check->add_option("--tol", check_tol, "residual tolerance")->check(CLI::PositiveNumber);

  int n_max = 1;
  int seeds = 3;
  std::uint64_t seed_base = 1;
  CLI::App* report = app.add_subcommand("report", "full reproduction run");
  report->add_option("--n-max", n_max, "largest dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  report->add_option("--seeds", seeds, "seeds per component")->check(CLI::PositiveNumber);
  report->add_option("--seed-base", seed_base, "first seed");
  report->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (components->parsed()) return run_components(group, n, format);
    if (construct->parsed())
      return run_construct(alpha_text, seed, lambda_angle, out_path, allow_reducible);
    if (extend->parsed())
      return run_extend(in_path, v1_split, split_opt->count() > 0, out_path);
    if (check->parsed()) return run_check(check_path, check_tol);
    if (report->parsed()) return run_report(n_max, seeds, seed_base, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
