#pragma once
#include "sasaki/form.hpp"

#include <optional>

namespace sasaki {

// Lie algebra with a (possibly indefinite) nondegenerate inner product,
// everything expressed in one fixed basis
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra algebra, Matrix metric);

  int dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }
  const Matrix& metric() const { return metric_; }
  const Matrix& metric_inverse() const { return metric_inv_; }

  Scalar inner(const Vector& x, const Vector& y) const;
  Vector flat(const Vector& x) const;        // coordinates of g(x,·)
  Form flat_form(const Vector& x) const;     // g(x,·) as a one-form
  Vector sharp(const Vector& covector) const;

  bool operator==(const MetricLieAlgebra& other) const {
    return algebra_ == other.algebra_ && metric_ == other.metric_;
  }

 private:
  LieAlgebra algebra_;
  Matrix metric_;
  Matrix metric_inv_;
};

// metric adjoint f* with g(f x, y) = g(x, f* y)
Matrix metric_adjoint(const MetricLieAlgebra& M, const Matrix& f);
// (symmetric part, antisymmetric part) of f with respect to the metric
std::pair<Matrix, Matrix> sym_anti_split(const MetricLieAlgebra& M, const Matrix& f);
Matrix ad_star(const MetricLieAlgebra& M, const Vector& x);
bool is_metric_symmetric(const MetricLieAlgebra& M, const Matrix& f);
bool is_metric_antisymmetric(const MetricLieAlgebra& M, const Matrix& f);

// a left-invariant connection, stored as the operators N[i] = nabla_{e_i}
struct Connection {
  std::vector<Matrix> N;

  int dim() const { return static_cast<int>(N.size()); }
  Matrix operator_of(const Vector& x) const;
  Vector covariant(const Vector& x, const Vector& y) const;
};

Connection levi_civita(const MetricLieAlgebra& M);
bool check_torsion_free(const LieAlgebra& L, const Connection& C);
bool check_metric_compatible(const MetricLieAlgebra& M, const Connection& C);

struct CurvatureData {
  // R[i][j] is the operator R(e_i, e_j)
  std::vector<std::vector<Matrix>> R;
  Matrix ric;

  Matrix of(const Vector& x, const Vector& y) const;
};

CurvatureData curvature(const MetricLieAlgebra& M, const Connection& C);
Scalar scalar_curvature(const MetricLieAlgebra& M, const CurvatureData& R);
// ric == c * g for some constant c
std::optional<Scalar> einstein_constant(const MetricLieAlgebra& M, const CurvatureData& R);

bool first_bianchi(const CurvatureData& R);
bool second_bianchi(const Connection& C, const CurvatureData& R);

// (nabla_x beta) for a 2-form beta
Form nabla_two_form(const Connection& C, const Form& beta, const Vector& x);

}  // namespace sasaki
