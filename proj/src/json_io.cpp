#include "sasaki/json_io.hpp"

#include "sasaki/errors.hpp"

namespace sasaki {

Json scalar_to_json(const Scalar& s) { return scalar_to_fraction(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  if (j.is_number_float()) {
    double d = j.get<double>();
    long long r = static_cast<long long>(d);
    if (static_cast<double>(r) == d) return Scalar(r);
  }
  throw Error("cannot read an exact scalar from " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error("a vector must be a JSON array");
  Vector v;
  for (const Json& e : j) v.push_back(scalar_from_json(e));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.rows; ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error("a matrix must be a JSON array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.front().size()) : 0;
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    Vector r = vector_from_json(j[i]);
    if (static_cast<int>(r.size()) != cols) throw Error("matrix rows have unequal lengths");
    for (int c = 0; c < cols; ++c) m(i, c) = r[c];
  }
  return m;
}

namespace {

int read_index(const Json& j, int dim, const char* what) {
  if (!j.is_number_integer()) throw Error(std::string(what) + " index must be an integer");
  long long i = j.get<long long>();
  if (i < 1 || i > dim) throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) +
                                              " is outside 1.." + std::to_string(dim));
  return static_cast<int>(i) - 1;
}

std::vector<Vector> read_subspace(const Json& j, int dim, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be a JSON array");
  std::vector<Vector> out;
  for (const Json& e : j) {
    if (e.is_array()) {
      Vector v = vector_from_json(e);
      if (static_cast<int>(v.size()) != dim)
        throw Error(std::string(what) + " vectors must have length " + std::to_string(dim));
      out.push_back(v);
    } else {
      out.push_back(basis_vector(dim, read_index(e, dim, what)));
    }
  }
  return out;
}

LieAlgebra brackets_from_json(const Json& j, int dim) {
  std::vector<std::vector<Vector>> table(
      static_cast<std::size_t>(dim),
      std::vector<Vector>(static_cast<std::size_t>(dim), zero_vector(dim)));
  if (!j.is_array()) throw Error("\"brackets\" must be a JSON array");
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 4) throw Error("each bracket entry must be [i, j, k, value]");
    int i = read_index(e[0], dim, "bracket");
    int jj = read_index(e[1], dim, "bracket");
    int k = read_index(e[2], dim, "bracket");
    Scalar v = scalar_from_json(e[3]);
    if (i == jj) throw Error("bracket entries need two distinct arguments");
    if (i < jj)
      table[i][jj][k] += v;
    else
      table[jj][i][k] -= v;
  }
  LieAlgebra L(dim);
  for (int i = 0; i < dim; ++i)
    for (int jj = i + 1; jj < dim; ++jj)
      if (!is_zero(table[i][jj])) L.set_bracket(i, jj, table[i][jj]);
  return L;
}

Json brackets_to_json(const LieAlgebra& L) {
  Json out = Json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      for (int k = 0; k < L.dim(); ++k) {
        Scalar v = L.c(i, j, k);
        if (v != 0) out.push_back(Json::array({i + 1, j + 1, k + 1, scalar_to_json(v)}));
      }
  return out;
}

}  // namespace

AlgebraFile algebra_from_json(const Json& j) {
  if (!j.is_object()) throw Error("an algebra file must be a JSON object");
  if (!j.contains("dim")) throw Error("missing \"dim\"");
  int dim = static_cast<int>(j.at("dim").get<long long>());
  if (dim < 0 || dim > max_dim) throw Error("\"dim\" must lie in 0.." + std::to_string(max_dim));
  LieAlgebra L = brackets_from_json(j.contains("brackets") ? j.at("brackets") : Json::array(), dim);
  if (!j.contains("metric")) throw Error("missing \"metric\"");
  Matrix g = matrix_from_json(j.at("metric"));
  AlgebraFile out{MetricLieAlgebra(L, g), std::nullopt, std::nullopt, std::nullopt};

  if (j.contains("xi")) {
    Vector xi = vector_from_json(j.at("xi"));
    if (static_cast<int>(xi.size()) != dim) throw Error("\"xi\" must have length dim");
    out.xi = xi;
  }
  if (j.contains("phi")) {
    Matrix phi = matrix_from_json(j.at("phi"));
    if (phi.rows != dim || phi.cols != dim) throw Error("\"phi\" must be dim x dim");
    out.phi = phi;
  }
  if (j.contains("decomposition")) {
    const Json& d = j.at("decomposition");
    if (!d.is_object() || !d.contains("ideal") || !d.contains("abelian"))
      throw Error("\"decomposition\" needs \"ideal\" and \"abelian\"");
    StandardDecomposition dec;
    dec.nilradical_part = read_subspace(d.at("ideal"), dim, "\"ideal\"");
    dec.abelian_part = read_subspace(d.at("abelian"), dim, "\"abelian\"");
    if (d.contains("xi") && !out.xi) {
      Vector xi = vector_from_json(d.at("xi"));
      if (static_cast<int>(xi.size()) != dim) throw Error("\"xi\" must have length dim");
      out.xi = xi;
    }
    out.dec = std::move(dec);
  }
  return out;
}

Json algebra_to_json(const MetricLieAlgebra& M, const Vector* xi, const Matrix* phi,
                     const StandardDecomposition* dec) {
  Json out = Json::object();
  out["dim"] = M.dim();
  out["brackets"] = brackets_to_json(M.algebra());
  out["metric"] = matrix_to_json(M.metric());
  if (xi) out["xi"] = vector_to_json(*xi);
  if (phi) out["phi"] = matrix_to_json(*phi);
  if (dec) {
    Json d = Json::object();
    Json ideal = Json::array();
    for (const Vector& v : dec->nilradical_part) ideal.push_back(vector_to_json(v));
    Json ab = Json::array();
    for (const Vector& v : dec->abelian_part) ab.push_back(vector_to_json(v));
    d["ideal"] = std::move(ideal);
    d["abelian"] = std::move(ab);
    if (dec->rank() == 1) {
      d["e0"] = vector_to_json(dec->e0());
      d["tau"] = scalar_to_json(M.inner(dec->e0(), dec->e0()));
    }
    if (xi) d["xi"] = vector_to_json(*xi);
    out["decomposition"] = std::move(d);
  }
  return out;
}

KahlerSeed seed_from_json(const Json& j) {
  if (!j.is_object()) throw Error("a seed file must be a JSON object");
  for (const char* key : {"dim", "metric", "J", "omega", "D", "h", "tau"})
    if (!j.contains(key)) throw Error(std::string("missing \"") + key + "\"");
  int dim = static_cast<int>(j.at("dim").get<long long>());
  if (dim < 0 || dim > max_dim) throw Error("\"dim\" must lie in 0.." + std::to_string(max_dim));
  LieAlgebra L = brackets_from_json(j.contains("brackets") ? j.at("brackets") : Json::array(), dim);
  Matrix g = matrix_from_json(j.at("metric"));
  Matrix J = matrix_from_json(j.at("J"));
  Matrix W = matrix_from_json(j.at("omega"));
  if (W.rows != dim || W.cols != dim || !W.is_antisymmetric())
    throw Error("\"omega\" must be an antisymmetric dim x dim matrix");
  Matrix D = matrix_from_json(j.at("D"));
  return {MetricLieAlgebra(L, g), J, Form::two_form(W), D, scalar_from_json(j.at("h")),
          scalar_from_json(j.at("tau"))};
}

Json seed_to_json(const KahlerSeed& seed) {
  Json out = Json::object();
  out["dim"] = seed.g.dim();
  out["brackets"] = brackets_to_json(seed.g.algebra());
  out["metric"] = matrix_to_json(seed.g.metric());
  out["J"] = matrix_to_json(seed.J);
  out["omega"] = matrix_to_json(seed.omega.as_matrix());
  out["D"] = matrix_to_json(seed.D);
  out["h"] = scalar_to_json(seed.h);
  out["tau"] = scalar_to_json(seed.tau);
  return out;
}

Json sasaki_report_to_json(const SasakiReport& r) {
  Json out = Json::object();
  out["schema"] = 1;
  out["almost_contact_metric"] = r.is_acms;
  if (!r.is_acms) out["first_failing"] = r.acms_failure;
  out["normal"] = r.normal;
  out["contact"] = r.contact;
  out["nabla_phi_identity"] = r.nabla_phi_identity;
  out["consequences"] = Json::array({r.consequences[0], r.consequences[1], r.consequences[2],
                                     r.consequences[3], r.consequences[4]});
  out["routes_agree"] = r.routes_agree;
  out["sasaki"] = r.verdict;
  return out;
}

}  // namespace sasaki
