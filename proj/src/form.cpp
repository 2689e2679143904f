#include "sasaki/form.hpp"

#include <algorithm>

namespace sasaki {

namespace {

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

// position of a strictly increasing tuple in lexicographic enumeration
int comb_index(int n, const std::vector<int>& idx) {
  int pos = 0;
  int prev = -1;
  int k = static_cast<int>(idx.size());
  for (int t = 0; t < k; ++t) {
    for (int v = prev + 1; v < idx[static_cast<std::size_t>(t)]; ++v) pos += binom(n - 1 - v, k - 1 - t);
    prev = idx[static_cast<std::size_t>(t)];
  }
  return pos;
}

// sorts indices, returns permutation sign or 0 on repeats
int normalize_indices(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

void check_range(int n, const std::vector<int>& idx) {
  for (int v : idx)
    if (v < 0 || v >= n) throw IndexOutOfRange("form index out of range");
}

}  // namespace

Form::Form(int dim, int degree) : n_(dim), k_(degree) {
  if (degree < 0 || degree > 3) throw IndexOutOfRange("form degree must be 0..3");
  c_.assign(static_cast<std::size_t>(binom(dim, degree)), Scalar(0));
}

Form Form::one_form(const Vector& covector) {
  Form f(static_cast<int>(covector.size()), 1);
  f.c_ = covector;
  return f;
}

Form Form::two_form(const Matrix& antisym) {
  if (!antisym.is_antisymmetric()) throw NotSymmetric("two_form requires an antisymmetric matrix");
  Form f(antisym.rows, 2);
  for (int i = 0; i < antisym.rows; ++i)
    for (int j = i + 1; j < antisym.cols; ++j) f.coeff({i, j}) = antisym(i, j);
  return f;
}

Scalar& Form::coeff(std::initializer_list<int> idx) {
  std::vector<int> v(idx);
  check_range(n_, v);
  if (static_cast<int>(v.size()) != k_) throw IndexOutOfRange("wrong number of form indices");
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) throw IndexOutOfRange("coeff wants strictly increasing indices");
  return c_[static_cast<std::size_t>(comb_index(n_, v))];
}

const Scalar& Form::coeff(std::initializer_list<int> idx) const {
  return const_cast<Form*>(this)->coeff(idx);
}

Scalar Form::value(std::initializer_list<int> idx) const {
  std::vector<int> v(idx);
  check_range(n_, v);
  if (static_cast<int>(v.size()) != k_) throw IndexOutOfRange("wrong number of form indices");
  int s = normalize_indices(v);
  if (s == 0) return 0;
  return Scalar(s) * c_[static_cast<std::size_t>(comb_index(n_, v))];
}

namespace {

// iterate strictly increasing k-tuples
bool next_tuple(std::vector<int>& t, int n) {
  int k = static_cast<int>(t.size());
  for (int i = k - 1; i >= 0; --i) {
    if (t[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++t[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_tuple(int k) {
  std::vector<int> t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = i;
  return t;
}

Scalar minor_det(const std::vector<Vector>& args, const std::vector<int>& rows) {
  int k = static_cast<int>(rows.size());
  if (k == 0) return 1;
  if (k == 1) return args[0][static_cast<std::size_t>(rows[0])];
  if (k == 2)
    return args[0][static_cast<std::size_t>(rows[0])] * args[1][static_cast<std::size_t>(rows[1])] -
           args[0][static_cast<std::size_t>(rows[1])] * args[1][static_cast<std::size_t>(rows[0])];
  Scalar det = 0;
  for (int p = 0; p < 3; ++p) {
    int q = (p + 1) % 3, r = (p + 2) % 3;
    det += args[0][static_cast<std::size_t>(rows[static_cast<std::size_t>(p)])] *
           (args[1][static_cast<std::size_t>(rows[static_cast<std::size_t>(q)])] *
                args[2][static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])] -
            args[1][static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])] *
                args[2][static_cast<std::size_t>(rows[static_cast<std::size_t>(q)])]);
  }
  return det;
}

}  // namespace

Scalar Form::evaluate(const std::vector<Vector>& args) const {
  if (static_cast<int>(args.size()) != k_) throw IndexOutOfRange("wrong number of arguments");
  if (k_ == 0) return c_[0];
  Scalar total = 0;
  std::vector<int> t = first_tuple(k_);
  std::size_t pos = 0;
  do {
    if (c_[pos] != 0) total += c_[pos] * minor_det(args, t);
    ++pos;
  } while (next_tuple(t, n_));
  return total;
}

bool Form::is_zero() const {
  for (const Scalar& x : c_)
    if (x != 0) return false;
  return true;
}

Vector Form::as_covector() const {
  if (k_ != 1) throw IndexOutOfRange("as_covector requires degree 1");
  return c_;
}

Matrix Form::as_matrix() const {
  if (k_ != 2) throw IndexOutOfRange("as_matrix requires degree 2");
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      m(i, j) = value({i, j});
      m(j, i) = -m(i, j);
    }
  return m;
}

Form& Form::operator+=(const Form& o) {
  if (n_ != o.n_ || k_ != o.k_) throw IndexOutOfRange("form shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Form& Form::operator-=(const Form& o) {
  if (n_ != o.n_ || k_ != o.k_) throw IndexOutOfRange("form shape mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  for (Scalar& x : c_) x *= c;
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw IndexOutOfRange("form dimension mismatch");
  int n = a.dim();
  int k = a.degree() + b.degree();
  if (k > 3) throw IndexOutOfRange("wedge beyond degree 3 is not supported");
  Form r(n, k);
  if (a.degree() == 0 || b.degree() == 0) {
    const Form& scalar = a.degree() == 0 ? a : b;
    const Form& other = a.degree() == 0 ? b : a;
    r = other;
    r *= scalar.evaluate({});
    return r;
  }
  if (a.degree() == 1 && b.degree() == 1) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        r.coeff({i, j}) = a.value({i}) * b.value({j}) - a.value({j}) * b.value({i});
    return r;
  }
  // (1,2) or (2,1): (α∧β)(x,y,z) = α(x)β(y,z) − α(y)β(x,z) + α(z)β(x,y)
  const Form& one = a.degree() == 1 ? a : b;
  const Form& two = a.degree() == 1 ? b : a;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l)
        r.coeff({i, j, l}) = one.value({i}) * two.value({j, l}) - one.value({j}) * two.value({i, l}) +
                             one.value({l}) * two.value({i, j});
  return r;
}

Form ce_d(const LieAlgebra& L, const Form& a) {
  int n = L.dim();
  if (a.dim() != n) throw IndexOutOfRange("form dimension mismatch");
  switch (a.degree()) {
    case 0:
      return Form(n, 1);
    case 1: {
      Form r(n, 2);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          r.coeff({i, j}) = -dot(a.as_covector(), L.bracket(i, j));
      return r;
    }
    case 2: {
      Form r(n, 3);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k) {
            Scalar s = 0;
            s -= a.evaluate({L.bracket(i, j), basis_vector(n, k)});
            s += a.evaluate({L.bracket(i, k), basis_vector(n, j)});
            s -= a.evaluate({L.bracket(j, k), basis_vector(n, i)});
            r.coeff({i, j, k}) = s;
          }
      return r;
    }
    default:
      throw IndexOutOfRange("ce_d input degree must be at most 2");
  }
}

Form interior(const Vector& x, const Form& a) {
  int n = a.dim();
  if (a.degree() == 0) throw IndexOutOfRange("interior product needs positive degree");
  Form r(n, a.degree() - 1);
  if (a.degree() == 1) {
    r.coeff({}) = a.evaluate({x});
    return r;
  }
  if (a.degree() == 2) {
    for (int j = 0; j < n; ++j) {
      Scalar s = a.evaluate({x, basis_vector(n, j)});
      if (s != 0) r.coeff({j}) = s;
    }
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r.coeff({i, j}) = a.evaluate({x, basis_vector(n, i), basis_vector(n, j)});
  return r;
}

Form endo_action(const Matrix& A, const Form& a) {
  int n = a.dim();
  Form r(n, a.degree());
  if (a.degree() == 0) return r;
  if (a.degree() == 1) {
    for (int i = 0; i < n; ++i) r.coeff({i}) = -a.evaluate({A.col(i)});
    return r;
  }
  if (a.degree() == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        r.coeff({i, j}) = -a.evaluate({A.col(i), basis_vector(n, j)}) -
                          a.evaluate({basis_vector(n, i), A.col(j)});
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        r.coeff({i, j, k}) = -a.evaluate({A.col(i), basis_vector(n, j), basis_vector(n, k)}) -
                             a.evaluate({basis_vector(n, i), A.col(j), basis_vector(n, k)}) -
                             a.evaluate({basis_vector(n, i), basis_vector(n, j), A.col(k)});
  return r;
}

Form lie_derivative(const LieAlgebra& L, const Vector& x, const Form& a) {
  return endo_action(L.ad(x), a);
}

}  // namespace sasaki
