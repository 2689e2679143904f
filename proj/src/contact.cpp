#include "sasaki/contact.hpp"

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

Matrix outer(const Vector& x, const Vector& a) {
  int n = static_cast<int>(x.size());
  Matrix out(n, static_cast<int>(a.size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < out.cols; ++j) out(i, j) = x[i] * a[j];
  return out;
}

}  // namespace

AlmostContactData make_almost_contact(MetricLieAlgebra M, Matrix phi, Vector xi) {
  if (M.inner(xi, xi) != 1) throw XiNotUnit("g(xi,xi) must be 1");
  Form eta = M.flat_form(xi);
  return AlmostContactData{std::move(M), std::move(phi), std::move(xi), std::move(eta)};
}

AcmsReport check_acms(const AlmostContactData& A) {
  int n = A.M.dim();
  const Matrix& g = A.M.metric();
  Vector eta = A.eta.as_covector();

  auto fail = [](const char* what) { return AcmsReport{false, what}; };

  if (dot(eta, A.xi) != 1) return fail("eta_xi");
  if (!is_zero(A.phi * A.xi)) return fail("phi_xi");
  if (!is_zero(A.phi.transpose() * eta)) return fail("eta_circ_phi");
  if (A.phi * A.phi != outer(A.xi, eta) - Matrix::identity(n)) return fail("phi_squared");
  if (A.M.inner(A.xi, A.xi) != 1) return fail("unit_xi");
  if (A.phi.transpose() * g * A.phi != g - outer(eta, eta)) return fail("metric_compatibility");
  if (!(g * A.phi).is_antisymmetric()) return fail("phi_antisymmetric");
  return AcmsReport{true, ""};
}

Form fundamental_form(const AlmostContactData& A) {
  return Form::two_form(A.M.metric() * A.phi);
}

std::vector<Form> nijenhuis(const AlmostContactData& A) {
  int n = A.M.dim();
  const LieAlgebra& L = A.M.algebra();
  std::vector<Form> comp(n, Form(n, 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector pi = A.phi.col(i), pj = A.phi.col(j);
      Vector v = A.phi * (A.phi * L.bracket(i, j));
      v = add(v, L.bracket(pi, pj));
      v = sub(v, A.phi * L.bracket(pi, basis_vector(n, j)));
      v = sub(v, A.phi * L.bracket(basis_vector(n, i), pj));
      for (int k = 0; k < n; ++k) comp[k].coeff({i, j}) = v[k];
    }
  return comp;
}

bool check_normal(const AlmostContactData& A) {
  int n = A.M.dim();
  std::vector<Form> N = nijenhuis(A);
  Form deta = ce_d(A.M.algebra(), A.eta);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar d = deta.coeff({i, j});
      for (int k = 0; k < n; ++k)
        if (N[k].coeff({i, j}) + d * A.xi[k] != 0) return false;
    }
  return true;
}

bool check_contact(const AlmostContactData& A) {
  // d eta is antisymmetric, so d eta = 2 g(.,phi.) cannot hold unless
  // g(.,phi.) is too; in that case the identity fails without a 2-form
  // representation of the right-hand side existing.
  Matrix gphi = A.M.metric() * A.phi;
  if (!gphi.is_antisymmetric()) return false;
  Form lhs = ce_d(A.M.algebra(), A.eta);
  Form rhs = Form::two_form(gphi);
  rhs *= 2;
  return lhs == rhs;
}

SasakiReport check_sasaki(const AlmostContactData& A) {
  SasakiReport rep;
  AcmsReport acms = check_acms(A);
  rep.is_acms = acms.ok;
  rep.acms_failure = acms.first_failing;
  rep.normal = check_normal(A);
  rep.contact = check_contact(A);

  int n = A.M.dim();
  Connection C = levi_civita(A.M);
  CurvatureData R = curvature(A.M, C);
  Vector eta = A.eta.as_covector();

  // (nabla_x phi) y = g(x,y) xi - eta(y) x, with nabla_x phi = [N(x), phi]
  rep.nabla_phi_identity = true;
  for (int i = 0; i < n; ++i) {
    Matrix want(n, n);
    for (int j = 0; j < n; ++j) {
      Vector col = scale(A.M.metric()(i, j), A.xi);
      col[i] -= eta[j];
      for (int k = 0; k < n; ++k) want(k, j) = col[k];
    }
    if (commutator(C.N[i], A.phi) != want) {
      rep.nabla_phi_identity = false;
      break;
    }
  }

  // K columns are nabla_{e_i} xi
  Matrix K(n, n);
  for (int i = 0; i < n; ++i) {
    Vector v = C.N[i] * A.xi;
    for (int k = 0; k < n; ++k) K(k, i) = v[k];
  }
  rep.consequences[0] = (K == -A.phi);
  rep.consequences[1] = (K.transpose() * A.M.metric() + A.M.metric() * K).is_zero();
  rep.consequences[2] = rep.contact;

  rep.consequences[3] = true;
  for (int i = 0; i < n && rep.consequences[3]; ++i)
    for (int j = 0; j < n; ++j) {
      Vector want = scale(eta[j], basis_vector(n, i));
      want = sub(want, scale(eta[i], basis_vector(n, j)));
      if (R.R[i][j] * A.xi != want) {
        rep.consequences[3] = false;
        break;
      }
    }

  Vector ric_xi(n);
  for (int j = 0; j < n; ++j) {
    Scalar s = 0;
    for (int i = 0; i < n; ++i) s += A.xi[i] * R.ric(i, j);
    ric_xi[j] = s;
  }
  rep.consequences[4] = (ric_xi == scale(Scalar(n - 1), eta));

  bool route1 = rep.is_acms && rep.normal && rep.contact;
  bool route2 = rep.is_acms && rep.nabla_phi_identity;
  rep.routes_agree = (route1 == route2);
  rep.verdict = route1;
  return rep;
}

AlmostContactData d_homothety(const AlmostContactData& A, const Scalar& a) {
  if (a <= 0) throw NonPositiveParameter("deformation parameter must be positive");
  Vector eta = A.eta.as_covector();
  Matrix g_new = a * A.M.metric() + (a * a - a) * outer(eta, eta);
  Vector xi_new = scale(Scalar(1) / a, A.xi);
  return make_almost_contact(MetricLieAlgebra(A.M.algebra(), g_new), A.phi, xi_new);
}

AlmostContactData reverse_metric_sign(const AlmostContactData& A) {
  Vector eta = A.eta.as_covector();
  Matrix g_new = -A.M.metric() + Scalar(2) * outer(eta, eta);
  return make_almost_contact(MetricLieAlgebra(A.M.algebra(), g_new), A.phi, negate(A.xi));
}

}  // namespace sasaki
