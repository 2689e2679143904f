#pragma once
#include "sasaki/errors.hpp"
#include "sasaki/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sasaki {

using Vector = std::vector<Scalar>;

Vector zero_vector(int n);
Vector basis_vector(int n, int i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
Vector negate(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

// dense row-major exact matrix; dimensions in this project stay tiny (n <= 16)
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> entries;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  static Matrix identity(int n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_cols(const std::vector<Vector>& cols);

  Scalar& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  const Scalar& operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * cols + j];
  }

  bool operator==(const Matrix&) const = default;

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  Vector row(int i) const;
  Vector col(int j) const;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);
Matrix commutator(const Matrix& a, const Matrix& b);

// Gaussian elimination with deterministic pivoting (first nonzero in row-major order).
// Returns the reduced row echelon form; pivot columns reported through the out-parameter.
Matrix rref(const Matrix& m, std::vector<int>* pivot_cols = nullptr);
int rank(const Matrix& m);
Scalar determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// basis of {v : m v = 0}, one vector per free column, unit in the free coordinate
std::vector<Vector> kernel(const Matrix& m);

// exact solution of m x = b: particular solution (free coordinates zero) plus kernel basis;
// empty result iff b is outside the column space
std::optional<std::pair<Vector, std::vector<Vector>>> solve(const Matrix& m, const Vector& b);

struct Signature {
  int plus = 0;
  int minus = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

// Sylvester signature by symmetric congruence elimination; throws NotSymmetric
Signature congruence_signature(Matrix g);

}  // namespace sasaki
