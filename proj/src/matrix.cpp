#include "sasaki/matrix.hpp"

namespace sasaki {

Vector zero_vector(int n) { return Vector(static_cast<std::size_t>(n)); }

Vector basis_vector(int n, int i) {
  Vector v = zero_vector(n);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const Scalar& x : v)
    if (x != 0) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector r = v;
  for (Scalar& x : r) x *= c;
  return r;
}

Vector negate(const Vector& v) { return scale(-1, v); }

Scalar dot(const Vector& a, const Vector& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vector>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  Scalar s = 0;
  for (int i = 0; i < rows && i < cols; ++i) s += (*this)(i, i);
  return s;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : entries)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < cols; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_antisymmetric() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = i; j < cols; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Vector Matrix::row(int i) const {
  Vector v(static_cast<std::size_t>(cols));
  for (int j = 0; j < cols; ++j) v[static_cast<std::size_t>(j)] = (*this)(i, j);
  return v;
}

Vector Matrix::col(int j) const {
  Vector v(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
  return v;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
  return r;
}

Matrix operator-(const Matrix& a) {
  Matrix r = a;
  for (Scalar& x : r.entries) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
  Matrix r = a;
  for (Scalar& x : r.entries) x *= c;
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  Vector r = zero_vector(a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix rref(const Matrix& m, std::vector<int>* pivot_cols) {
  Matrix r = m;
  if (pivot_cols) pivot_cols->clear();
  int lead = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows; ++i)
      if (r(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols; ++j) std::swap(r(piv, j), r(lead, j));
    Scalar inv = Scalar(1) / r(lead, col);
    for (int j = 0; j < r.cols; ++j) r(lead, j) *= inv;
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead || r(i, col) == 0) continue;
      Scalar f = r(i, col);
      for (int j = 0; j < r.cols; ++j) r(i, j) -= f * r(lead, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++lead;
  }
  return r;
}

int rank(const Matrix& m) {
  std::vector<int> pivots;
  rref(m, &pivots);
  return static_cast<int>(pivots.size());
}

Scalar determinant(const Matrix& m) {
  if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
  Matrix a = m;
  int n = a.rows;
  Scalar det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = Scalar(1) / a(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Scalar f = a(i, col) * inv;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Matrix red = rref(aug);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (red(i, j) != (i == j ? 1 : 0)) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

std::vector<Vector> kernel(const Matrix& m) {
  std::vector<int> pivots;
  Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v = zero_vector(m.cols);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      v[static_cast<std::size_t>(pivots[p])] = -r(static_cast<int>(p), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::pair<Vector, std::vector<Vector>>> solve(const Matrix& m, const Vector& b) {
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots;
  Matrix r = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  Vector x = zero_vector(m.cols);
  for (std::size_t p = 0; p < pivots.size(); ++p)
    x[static_cast<std::size_t>(pivots[p])] = r(static_cast<int>(p), m.cols);
  return std::make_pair(std::move(x), kernel(m));
}

Signature congruence_signature(Matrix g) {
  if (!g.is_symmetric()) throw NotSymmetric("congruence_signature requires a symmetric matrix");
  int n = g.rows;
  Signature sig;
  for (int k = 0; k < n; ++k) {
    if (g(k, k) == 0) {
      // bring a nonzero diagonal entry into position, or synthesize one from an
      // off-diagonal entry (char 0: adding row+col j doubles the off-diagonal term)
      int d = -1;
      for (int i = k + 1; i < n; ++i)
        if (g(i, i) != 0) {
          d = i;
          break;
        }
      if (d >= 0) {
        for (int j = 0; j < n; ++j) std::swap(g(k, j), g(d, j));
        for (int i = 0; i < n; ++i) std::swap(g(i, k), g(i, d));
      } else {
        int j_off = -1;
        for (int j = k + 1; j < n && j_off < 0; ++j)
          if (g(k, j) != 0) j_off = j;
        if (j_off < 0) {
          // row k is zero on the active block; look for any nonzero off-diagonal pair
          int pi = -1, pj = -1;
          for (int i = k + 1; i < n && pi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
              if (g(i, j) != 0) {
                pi = i;
                pj = j;
                break;
              }
          if (pi < 0) {
            sig.zero += n - k;
            return sig;
          }
          for (int j = 0; j < n; ++j) std::swap(g(k, j), g(pi, j));
          for (int i = 0; i < n; ++i) std::swap(g(i, k), g(i, pi));
          j_off = pj;
        }
        for (int j = 0; j < n; ++j) g(k, j) += g(j_off, j);
        for (int i = 0; i < n; ++i) g(i, k) += g(i, j_off);
      }
    }
    const Scalar d = g(k, k);
    if (d > 0)
      ++sig.plus;
    else
      ++sig.minus;
    for (int i = k + 1; i < n; ++i) {
      if (g(i, k) == 0) continue;
      Scalar f = g(i, k) / d;
      for (int j = 0; j < n; ++j) g(i, j) -= f * g(k, j);
      for (int j = 0; j < n; ++j) g(j, i) -= f * g(j, k);
    }
  }
  return sig;
}

}  // namespace sasaki
