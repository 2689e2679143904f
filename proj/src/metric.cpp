#include "sasaki/metric.hpp"

#include "sasaki/errors.hpp"

namespace sasaki {

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra algebra, Matrix metric)
    : algebra_(std::move(algebra)), metric_(std::move(metric)) {
  if (metric_.rows != algebra_.dim() || metric_.cols != algebra_.dim())
    throw Error("metric size does not match the algebra dimension");
  if (!metric_.is_symmetric()) throw NotSymmetric("metric must be symmetric");
  auto inv = inverse(metric_);
  if (!inv) throw DegenerateMetric("metric must be nondegenerate");
  metric_inv_ = std::move(*inv);
}

Scalar MetricLieAlgebra::inner(const Vector& x, const Vector& y) const {
  return dot(x, metric_ * y);
}

Vector MetricLieAlgebra::flat(const Vector& x) const { return metric_ * x; }

Form MetricLieAlgebra::flat_form(const Vector& x) const { return Form::one_form(flat(x)); }

Vector MetricLieAlgebra::sharp(const Vector& covector) const { return metric_inv_ * covector; }

Matrix metric_adjoint(const MetricLieAlgebra& M, const Matrix& f) {
  return M.metric_inverse() * f.transpose() * M.metric();
}

std::pair<Matrix, Matrix> sym_anti_split(const MetricLieAlgebra& M, const Matrix& f) {
  Matrix star = metric_adjoint(M, f);
  Scalar half(1, 2);
  return {half * (f + star), half * (f - star)};
}

Matrix ad_star(const MetricLieAlgebra& M, const Vector& x) {
  return metric_adjoint(M, M.algebra().ad(x));
}

bool is_metric_symmetric(const MetricLieAlgebra& M, const Matrix& f) {
  return metric_adjoint(M, f) == f;
}

bool is_metric_antisymmetric(const MetricLieAlgebra& M, const Matrix& f) {
  return metric_adjoint(M, f) == -f;
}

Matrix Connection::operator_of(const Vector& x) const {
  int n = dim();
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    if (x[i] != 0) out = out + x[i] * N[i];
  return out;
}

Vector Connection::covariant(const Vector& x, const Vector& y) const {
  return operator_of(x) * y;
}

Connection levi_civita(const MetricLieAlgebra& M) {
  int n = M.dim();
  const LieAlgebra& L = M.algebra();
  Scalar half(1, 2);
  std::vector<Matrix> ad_stars(n);
  for (int i = 0; i < n; ++i) ad_stars[i] = ad_star(M, basis_vector(n, i));

  Connection C;
  C.N.assign(n, Matrix(n, n));
  for (int i = 0; i < n; ++i) {
    Vector ei = basis_vector(n, i);
    for (int j = 0; j < n; ++j) {
      // 2 nabla_x y = [x,y] - (ad y)* x - (ad x)* y
      Vector v = sub(L.bracket(i, j), add(ad_stars[j] * ei, ad_stars[i] * basis_vector(n, j)));
      for (int k = 0; k < n; ++k) C.N[i](k, j) = half * v[k];
    }
  }
  return C;
}

bool check_torsion_free(const LieAlgebra& L, const Connection& C) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector t = sub(sub(C.N[i].col(j), C.N[j].col(i)), L.bracket(i, j));
      if (!is_zero(t)) return false;
    }
  return true;
}

bool check_metric_compatible(const MetricLieAlgebra& M, const Connection& C) {
  // g(nabla_x y, z) + g(y, nabla_x z) = 0 for all basis vectors
  for (const Matrix& Nx : C.N) {
    Matrix d = Nx.transpose() * M.metric() + M.metric() * Nx;
    if (!d.is_zero()) return false;
  }
  return true;
}

Matrix CurvatureData::of(const Vector& x, const Vector& y) const {
  int n = static_cast<int>(R.size());
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[i] != 0 && y[j] != 0) out = out + (x[i] * y[j]) * R[i][j];
  return out;
}

CurvatureData curvature(const MetricLieAlgebra& M, const Connection& C) {
  int n = M.dim();
  CurvatureData data;
  data.R.assign(n, std::vector<Matrix>(n, Matrix(n, n)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix r = commutator(C.N[i], C.N[j]) - C.operator_of(M.algebra().bracket(i, j));
      data.R[i][j] = r;
      data.R[j][i] = -r;
    }
  data.ric = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar s = 0;
      for (int k = 0; k < n; ++k) s += data.R[k][i](k, j);
      data.ric(i, j) = s;
    }
  return data;
}

Scalar scalar_curvature(const MetricLieAlgebra& M, const CurvatureData& R) {
  return (M.metric_inverse() * R.ric).trace();
}

std::optional<Scalar> einstein_constant(const MetricLieAlgebra& M, const CurvatureData& R) {
  int n = M.dim();
  Scalar c = 0;
  bool found = false;
  for (int i = 0; i < n && !found; ++i)
    for (int j = 0; j < n && !found; ++j)
      if (M.metric()(i, j) != 0) {
        c = R.ric(i, j) / M.metric()(i, j);
        found = true;
      }
  if (R.ric == c * M.metric()) return c;
  return std::nullopt;
}

bool first_bianchi(const CurvatureData& R) {
  int n = static_cast<int>(R.R.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector s = add(add(R.R[i][j].col(k), R.R[j][k].col(i)), R.R[k][i].col(j));
        if (!is_zero(s)) return false;
      }
  return true;
}

bool second_bianchi(const Connection& C, const CurvatureData& R) {
  int n = C.dim();
  auto nabla_R = [&](int x, int y, int z) {
    // (nabla_x R)(e_y, e_z)
    Matrix out = commutator(C.N[x], R.R[y][z]);
    out = out - R.of(C.N[x].col(y), basis_vector(n, z));
    out = out - R.of(basis_vector(n, y), C.N[x].col(z));
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Matrix s = nabla_R(i, j, k) + nabla_R(j, k, i) + nabla_R(k, i, j);
        if (!s.is_zero()) return false;
      }
  return true;
}

Form nabla_two_form(const Connection& C, const Form& beta, const Vector& x) {
  Matrix B = beta.as_matrix();
  Matrix Nx = C.operator_of(x);
  return Form::two_form(-(Nx.transpose() * B) - B * Nx);
}

}  // namespace sasaki
