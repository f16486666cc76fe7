#include "lb3/rep_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lb3/errors.hpp"

namespace lb3 {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const Cplx& v = m.at(i, j);
      row.push_back(json::array({v.real(), v.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.empty())
    throw ValidationError(std::string("matrix ") + name + ": expected a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.front().size());
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ValidationError(std::string("matrix ") + name + ": ragged rows");
    for (int jj = 0; jj < cols; ++jj) {
      const json& e = row.at(jj);
      if (!e.is_array() || e.size() != 2)
        throw ValidationError(std::string("matrix ") + name + ": entries must be [re, im]");
      m.at(i, jj) = Cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  if (!m.is_finite())
    throw ValidationError(std::string("matrix ") + name + ": non-finite entries");
  return m;
}

json alpha_to_json(const AlphaTuple& a) { return json::array({a.a, a.b, a.x, a.y, a.z}); }

AlphaTuple alpha_from_json(const json& j) {
  if (!j.is_array() || j.size() != 5)
    throw ValidationError("alpha: expected five natural numbers");
  AlphaTuple a{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>(), j.at(3).get<int>(),
               j.at(4).get<int>()};
  if (!a.consistent()) throw ValidationError("alpha: inconsistent tuple " + to_string(a));
  return a;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("malformed JSON document");
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  return j;
}

void check_version_kind(const json& j, const char* kind) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
    throw ValidationError("unsupported schema_version");
  if (!j.contains("kind") || j.at("kind").get<std::string>() != kind)
    throw ValidationError(std::string("expected kind \"") + kind + "\"");
}

Cplx lambda_from_json(const json& j) {
  const json& l = j.at("lambda");
  if (!l.is_array() || l.size() != 2) throw ValidationError("lambda: expected [re, im]");
  return {l.at(0).get<double>(), l.at(1).get<double>()};
}

void fill_gamma_common(json& j, const GammaRep& rep) {
  j["schema_version"] = kSchemaVersion;
  j["alpha"] = alpha_to_json(rep.alpha);
  j["n"] = rep.n();
  j["seed"] = rep.seed;
  j["lambda"] = json::array({rep.lambda.real(), rep.lambda.imag()});
}

GammaRep gamma_from_json(const json& j, const Tolerance& tol, bool validate) {
  GammaRep rep;
  rep.alpha = alpha_from_json(j.at("alpha"));
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.lambda = lambda_from_json(j);
  rep.S = matrix_from_json(j.at("S"), "S");
  rep.T = matrix_from_json(j.at("T"), "T");

  if (j.at("n").get<int>() != rep.alpha.n() || rep.S.rows() != rep.alpha.n() ||
      rep.T.rows() != rep.alpha.n() || !rep.S.is_square() || !rep.T.is_square())
    throw ValidationError("matrix sizes disagree with n");

  if (validate) {
    AlphaTuple recovered;
    try {
      recovered = restriction_alpha(rep.S, rep.T, tol);
    } catch (const Error& e) {
      throw ValidationError(std::string("generator invariants violated: ") + e.what());
    }
    if (recovered != rep.alpha)
      throw ValidationError("recovered multiplicities " + to_string(recovered) +
                            " differ from declared " + to_string(rep.alpha));
  }
  return rep;
}

}  // namespace

RepFileKind peek_kind(const std::string& text) {
  const json j = parse(text);
  if (!j.contains("kind")) throw ValidationError("missing kind field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "gamma_rep") return RepFileKind::Gamma;
  if (kind == "lb3_rep") return RepFileKind::LB3;
  throw ValidationError("unknown kind \"" + kind + "\"");
}

std::string serialize_rep(const GammaRep& rep) {
  json j;
  j["kind"] = "gamma_rep";
  fill_gamma_common(j, rep);
  j["S"] = matrix_to_json(rep.S);
  j["T"] = matrix_to_json(rep.T);
  return j.dump(2) + "\n";
}

GammaRep deserialize_rep(const std::string& text, const Tolerance& tol, bool validate) {
  const json j = parse(text);
  check_version_kind(j, "gamma_rep");
  return gamma_from_json(j, tol, validate);
}

std::string serialize_lb3(const LB3Rep& rep, const RelationReport& report) {
  json j;
  j["kind"] = "lb3_rep";
  fill_gamma_common(j, rep.source);
  j["v1_split"] = rep.v1_split;
  j["S"] = matrix_to_json(rep.source.S);
  j["T"] = matrix_to_json(rep.source.T);
  j["sigma1"] = matrix_to_json(rep.sigma1);
  j["sigma2"] = matrix_to_json(rep.sigma2);
  j["s1"] = matrix_to_json(rep.s1);
  j["s2"] = matrix_to_json(rep.s2);

  json res;
  for (int i = 0; i < 5; ++i) res[relation_name(i)] = report.residuals[i];
  res["max"] = report.max_residual();
  res["tol"] = report.tol;
  res["pass"] = report.pass;
  j["residuals"] = std::move(res);
  return j.dump(2) + "\n";
}

LoadedLB3 deserialize_lb3(const std::string& text, const Tolerance& tol, bool validate) {
  const json j = parse(text);
  check_version_kind(j, "lb3_rep");

  LoadedLB3 out;
  out.rep.source = gamma_from_json(j, tol, validate);
  out.rep.lambda = out.rep.source.lambda;
  out.rep.v1_split = j.at("v1_split").get<int>();
  out.rep.sigma1 = matrix_from_json(j.at("sigma1"), "sigma1");
  out.rep.sigma2 = matrix_from_json(j.at("sigma2"), "sigma2");
  out.rep.s1 = matrix_from_json(j.at("s1"), "s1");
  out.rep.s2 = matrix_from_json(j.at("s2"), "s2");

  const json& res = j.at("residuals");
  for (int i = 0; i < 5; ++i)
    out.stored_report.residuals[i] = res.at(relation_name(i)).get<double>();
  out.stored_report.tol = res.at("tol").get<double>();
  out.stored_report.pass = res.at("pass").get<bool>();

  if (validate) {
    const Tolerance stored_tol{tol.rank_eps, out.stored_report.tol};
    const RelationReport live = verify_lb3_relations(out.rep, stored_tol);
    if (!live.pass)
      throw ValidationError("stored matrices violate the defining relations, max residual " +
                            std::to_string(live.max_residual()));
    const B3Rep braid = braid_images(out.rep.source, out.rep.lambda, tol);
    if (frobenius_distance(braid.sigma1, out.rep.sigma1) > tol.residual_eps ||
        frobenius_distance(braid.sigma2, out.rep.sigma2) > tol.residual_eps)
      throw ValidationError("stored braid images do not match lambda-scaled generator words");
  }
  return out;
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("write failed for " + path);
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lb3
