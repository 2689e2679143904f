#include "sasaki/lie_algebra.hpp"

namespace sasaki {

LieAlgebra::LieAlgebra(int dim) : n_(dim) {
  if (dim < 0 || dim > max_dim) throw IndexOutOfRange("dimension out of range");
  table_.assign(static_cast<std::size_t>(dim) * dim, zero_vector(dim));
}

void LieAlgebra::set_bracket(int i, int j, const Vector& v) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw IndexOutOfRange("bracket index out of range");
  if (static_cast<int>(v.size()) != n_) throw IndexOutOfRange("bracket value has wrong dimension");
  if (i == j) {
    if (!is_zero(v)) throw NotALieAlgebra("[x,x] must vanish");
    return;
  }
  table_[static_cast<std::size_t>(i) * n_ + j] = v;
  table_[static_cast<std::size_t>(j) * n_ + i] = negate(v);
}

const Vector& LieAlgebra::bracket(int i, int j) const {
  return table_[static_cast<std::size_t>(i) * n_ + j];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector r = zero_vector(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      Scalar c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const Vector& bij = bracket(i, j);
      for (int k = 0; k < n_; ++k) r[static_cast<std::size_t>(k)] += c * bij[static_cast<std::size_t>(k)];
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(n_, n_);
  for (int j = 0; j < n_; ++j) {
    Vector col = bracket(x, basis_vector(n_, j));
    for (int i = 0; i < n_; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

Matrix LieAlgebra::ad(int i) const { return ad(basis_vector(n_, i)); }

Scalar LieAlgebra::c(int i, int j, int k) const { return bracket(i, j)[static_cast<std::size_t>(k)]; }

JacobiReport jacobi_check(const LieAlgebra& L) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector d = L.bracket(L.bracket(i, j), basis_vector(n, k));
        d = add(d, L.bracket(L.bracket(j, k), basis_vector(n, i)));
        d = add(d, L.bracket(L.bracket(k, i), basis_vector(n, j)));
        if (!is_zero(d)) return {false, i, j, k, d};
      }
  return {};
}

std::vector<Vector> canonical_basis(const std::vector<Vector>& span) {
  if (span.empty()) return {};
  std::vector<int> pivots;
  Matrix r = rref(Matrix::from_rows(span), &pivots);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(r.row(static_cast<int>(i)));
  return basis;
}

bool in_span(const std::vector<Vector>& span, const Vector& v) {
  if (is_zero(v)) return true;
  if (span.empty()) return false;
  std::vector<Vector> rows = span;
  int base = rank(Matrix::from_rows(rows));
  rows.push_back(v);
  return rank(Matrix::from_rows(rows)) == base;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  return canonical_basis(a) == canonical_basis(b);
}

std::vector<Vector> bracket_space(const LieAlgebra& L, const std::vector<Vector>& A,
                                  const std::vector<Vector>& B) {
  std::vector<Vector> products;
  for (const Vector& a : A)
    for (const Vector& b : B) {
      Vector v = L.bracket(a, b);
      if (!is_zero(v)) products.push_back(std::move(v));
    }
  return canonical_basis(products);
}

namespace {

std::vector<Vector> full_basis(int n) {
  std::vector<Vector> b;
  for (int i = 0; i < n; ++i) b.push_back(basis_vector(n, i));
  return b;
}

void require_lie(const LieAlgebra& L) {
  JacobiReport r = jacobi_check(L);
  if (!r.ok)
    throw NotALieAlgebra("Jacobi identity fails at triple (" + std::to_string(r.i + 1) + "," +
                         std::to_string(r.j + 1) + "," + std::to_string(r.k + 1) + ")");
}

}  // namespace

std::vector<std::vector<Vector>> lower_central_series(const LieAlgebra& L) {
  require_lie(L);
  std::vector<std::vector<Vector>> chain{full_basis(L.dim())};
  for (;;) {
    std::vector<Vector> next = bracket_space(L, chain.front(), chain.back());
    if (same_span(next, chain.back())) break;
    chain.push_back(std::move(next));
    if (chain.back().empty()) break;
  }
  return chain;
}

std::vector<std::vector<Vector>> derived_series(const LieAlgebra& L) {
  require_lie(L);
  std::vector<std::vector<Vector>> chain{full_basis(L.dim())};
  for (;;) {
    std::vector<Vector> next = bracket_space(L, chain.back(), chain.back());
    if (same_span(next, chain.back())) break;
    chain.push_back(std::move(next));
    if (chain.back().empty()) break;
  }
  return chain;
}

NilpotencyReport is_nilpotent(const LieAlgebra& L) {
  auto chain = lower_central_series(L);
  if (!chain.back().empty()) return {false, 0};
  return {true, static_cast<int>(chain.size()) - 1};
}

bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().empty(); }

namespace {

// kernel of the stacked maps x -> [v, x], one block per v
std::vector<Vector> joint_bracket_kernel(const LieAlgebra& L, const std::vector<Vector>& vs) {
  int n = L.dim();
  Matrix stacked(static_cast<int>(vs.size()) * n, n);
  int row = 0;
  for (const Vector& v : vs) {
    Matrix m = L.ad(v);
    for (int i = 0; i < n; ++i, ++row)
      for (int j = 0; j < n; ++j) stacked(row, j) = m(i, j);
  }
  return kernel(stacked);
}

}  // namespace

std::vector<Vector> center(const LieAlgebra& L) { return joint_bracket_kernel(L, full_basis(L.dim())); }

std::vector<Vector> centralizer(const LieAlgebra& L, const Vector& x) {
  return joint_bracket_kernel(L, {x});
}

bool is_subalgebra(const LieAlgebra& L, const std::vector<Vector>& span) {
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j)
      if (!in_span(span, L.bracket(span[i], span[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& L, const std::vector<Vector>& span) {
  for (int i = 0; i < L.dim(); ++i)
    for (const Vector& v : span)
      if (!in_span(span, L.bracket(basis_vector(L.dim(), i), v))) return false;
  return true;
}

bool is_abelian_subspace(const LieAlgebra& L, const std::vector<Vector>& span) {
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = i + 1; j < span.size(); ++j)
      if (!is_zero(L.bracket(span[i], span[j]))) return false;
  return true;
}

bool is_derivation(const LieAlgebra& L, const Matrix& D) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector lhs = D * L.bracket(i, j);
      Vector rhs = add(L.bracket(D.col(i), basis_vector(n, j)),
                       L.bracket(basis_vector(n, i), D.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Matrix> derivation_algebra(const LieAlgebra& L) {
  int n = L.dim();
  // unknowns D(a,b) flattened row-major; one equation per (i<j, k)
  int pairs = n * (n - 1) / 2;
  Matrix sys(pairs * n, n * n);
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k, ++row) {
        // (D[e_i,e_j])_k - [De_i, e_j]_k - [e_i, De_j]_k = 0
        const Vector& cij = L.bracket(i, j);
        for (int a = 0; a < n; ++a) sys(row, k * n + a) += cij[static_cast<std::size_t>(a)];
        for (int a = 0; a < n; ++a) {
          // De_i = sum_a D(a,i) e_a; [e_a, e_j]_k
          sys(row, a * n + i) -= L.c(a, j, k);
          sys(row, a * n + j) -= L.c(i, a, k);
        }
      }
    }
  std::vector<Matrix> basis;
  for (const Vector& v : kernel(sys)) {
    Matrix D(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) D(a, b) = v[static_cast<std::size_t>(a) * n + b];
    basis.push_back(std::move(D));
  }
  return basis;
}

LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<Vector>& basis) {
  int m = static_cast<int>(basis.size());
  Matrix B = Matrix::from_cols(basis);
  LieAlgebra sub(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vector v = L.bracket(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      auto sol = solve(B, v);
      if (!sol) throw NotALieAlgebra("subspace is not closed under the bracket");
      sub.set_bracket(i, j, sol->first);
    }
  return sub;
}

LieAlgebra quotient(const LieAlgebra& L, const std::vector<Vector>& ideal_basis,
                    const std::vector<Vector>& complement_basis) {
  if (!is_ideal(L, ideal_basis)) throw NotALieAlgebra("quotient requires an ideal");
  std::vector<Vector> all = ideal_basis;
  all.insert(all.end(), complement_basis.begin(), complement_basis.end());
  Matrix B = Matrix::from_cols(all);
  if (B.rows != B.cols || rank(B) != B.rows)
    throw NotALieAlgebra("ideal and complement do not decompose the algebra");
  int m = static_cast<int>(complement_basis.size());
  int s = static_cast<int>(ideal_basis.size());
  LieAlgebra q(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vector v = L.bracket(complement_basis[static_cast<std::size_t>(i)],
                           complement_basis[static_cast<std::size_t>(j)]);
      auto sol = solve(B, v);
      Vector w = zero_vector(m);
      for (int k = 0; k < m; ++k) w[static_cast<std::size_t>(k)] = sol->first[static_cast<std::size_t>(s + k)];
      q.set_bracket(i, j, w);
    }
  return q;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& new_basis) {
  int n = L.dim();
  auto inv = inverse(new_basis);
  if (!inv) throw NotALieAlgebra("change of basis must be invertible");
  LieAlgebra out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector v = L.bracket(new_basis.col(i), new_basis.col(j));
      out.set_bracket(i, j, *inv * v);
    }
  return out;
}

}  // namespace sasaki
