#pragma once
#include "sasaki/lie_algebra.hpp"

#include <initializer_list>

namespace sasaki {

// exterior form of degree 0..3; coefficients indexed by strictly increasing
// index tuples in lexicographic order
class Form {
 public:
  Form() = default;
  Form(int dim, int degree);
  static Form one_form(const Vector& covector);
  static Form two_form(const Matrix& antisym);

  int dim() const { return n_; }
  int degree() const { return k_; }

  // strictly increasing 0-based indices
  Scalar& coeff(std::initializer_list<int> idx);
  const Scalar& coeff(std::initializer_list<int> idx) const;
  // any index order; antisymmetric sign; 0 on repeated indices
  Scalar value(std::initializer_list<int> idx) const;
  // multilinear antisymmetric evaluation on degree() vectors
  Scalar evaluate(const std::vector<Vector>& args) const;

  bool is_zero() const;
  Vector as_covector() const;  // degree 1
  Matrix as_matrix() const;    // degree 2 (antisymmetric matrix of values)

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }
  friend Form operator-(Form a) { return a *= -1; }
  bool operator==(const Form&) const = default;

  const std::vector<Scalar>& raw() const { return c_; }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Scalar> c_;
};

Form wedge(const Form& a, const Form& b);  // (α∧β)(X,Y) = α(X)β(Y) − α(Y)β(X); result degree ≤ 3
// Chevalley–Eilenberg differential, dα(X,Y) = −α([X,Y]) on degree 1,
// extended as an antiderivation; input degree ≤ 2
Form ce_d(const LieAlgebra& L, const Form& a);
Form interior(const Vector& x, const Form& a);          // x ⌟ α
Form endo_action(const Matrix& A, const Form& a);       // (A·α)(…,X,…) summed as −α(…,AX,…)
Form lie_derivative(const LieAlgebra& L, const Vector& x, const Form& a);

}  // namespace sasaki
