#include "sasaki/reduction.hpp"

#include <utility>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

Vector coords_in(const std::vector<Vector>& basis, const Vector& v, const char* what) {
  auto sol = solve(Matrix::from_cols(basis), v);
  if (!sol) throw Error(std::string(what) + " does not lie in the expected subspace");
  return sol->first;
}

Vector lift(const std::vector<Vector>& basis, const Vector& coords) {
  Vector out = zero_vector(basis.empty() ? 0 : static_cast<int>(basis.front().size()));
  for (std::size_t i = 0; i < basis.size(); ++i) out = add(out, scale(coords[i], basis[i]));
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) out(a.rows + i, a.cols + j) = b(i, j);
  return out;
}

}  // namespace

KahlerReport kahler_check(const MetricLieAlgebra& g, const Matrix& J, const Form& omega) {
  int n = g.dim();
  const LieAlgebra& L = g.algebra();
  if (J.rows != n || J.cols != n || omega.dim() != n || omega.degree() != 2)
    return {false, "J^2=-id"};
  if (J * J != -Matrix::identity(n)) return {false, "J^2=-id"};
  if (J.transpose() * g.metric() * J != g.metric()) return {false, "g(J,J)=g"};
  if (omega.as_matrix() != g.metric() * J) return {false, "omega=g(,J)"};
  if (!ce_d(L, omega).is_zero()) return {false, "domega=0"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector nij = L.bracket(J.col(i), J.col(j));
      nij = sub(nij, J * L.bracket(J.col(i), basis_vector(n, j)));
      nij = sub(nij, J * L.bracket(basis_vector(n, i), J.col(j)));
      nij = sub(nij, L.bracket(i, j));
      if (!is_zero(nij)) return {false, "N_J=0"};
    }
  return {};
}

bool quadratic_identity(const MetricLieAlgebra& g, const Matrix& D, const Scalar& h) {
  auto [Ds, Da] = sym_anti_split(g, D);
  return commutator(Ds, Da) == h * Ds - Scalar(2) * (Ds * Ds);
}

void validate_seed(const KahlerSeed& seed) {
  int n = seed.g.dim();
  if (seed.tau != 1 && seed.tau != -1)
    throw SeedInvariantViolated("tau must be 1 or -1");
  if (seed.J.rows != n || seed.J.cols != n || seed.D.rows != n || seed.D.cols != n ||
      seed.omega.dim() != n || seed.omega.degree() != 2)
    throw SeedInvariantViolated("the seed pieces do not share one dimension");
  if (!is_nilpotent(seed.g.algebra()).nilpotent)
    throw SeedInvariantViolated("the base algebra is not nilpotent");
  KahlerReport kr = kahler_check(seed.g, seed.J, seed.omega);
  if (!kr.ok) throw SeedInvariantViolated(kr.failing_clause);
  if (!is_derivation(seed.g.algebra(), seed.D))
    throw SeedInvariantViolated("D is not a derivation");
  if (!commutator(seed.J, seed.D).is_zero())
    throw SeedInvariantViolated("[J,D]=0");
  if (!quadratic_identity(seed.g, seed.D, seed.h))
    throw SeedInvariantViolated("[D^s,D^a]=hD^s-2(D^s)^2");
}

ConstructResult construct_sasaki(const KahlerSeed& seed) {
  validate_seed(seed);
  int n = seed.g.dim();
  int N = n + 3, bi = n, xii = n + 1, e0i = n + 2;
  const LieAlgebra& Lg = seed.g.algebra();
  Form Dw = endo_action(seed.D, seed.omega);

  auto embed = [N, n](const Vector& v) {
    Vector out = zero_vector(N);
    for (int i = 0; i < n; ++i) out[i] = v[i];
    return out;
  };

  LieAlgebra L(N);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector w = embed(Lg.bracket(i, j));
      w[bi] = -seed.tau * Dw.coeff({i, j});
      w[xii] = Scalar(-2) * seed.omega.coeff({i, j});
      L.set_bracket(i, j, w);
    }
  for (int i = 0; i < n; ++i) L.set_bracket(e0i, i, embed(seed.D.col(i)));
  Vector e0b = zero_vector(N);
  e0b[bi] = seed.h;
  e0b[xii] = Scalar(-2) * seed.tau;
  L.set_bracket(e0i, bi, e0b);

  Matrix G = block_diag(seed.g.metric(), Matrix::diagonal({seed.tau, Scalar(1), seed.tau}));
  Matrix phi(N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi(i, j) = seed.J(i, j);
  phi(e0i, bi) = 1;
  phi(bi, e0i) = -1;

  MetricLieAlgebra M(L, G);
  AlmostContactData contact = make_almost_contact(M, phi, basis_vector(N, xii));

  StandardDecomposition dec;
  for (int i = 0; i < n + 2; ++i) dec.nilradical_part.push_back(basis_vector(N, i));
  dec.abelian_part.push_back(basis_vector(N, e0i));

  return {std::move(M), std::move(contact), std::move(dec), basis_vector(N, bi),
          basis_vector(N, xii), basis_vector(N, e0i)};
}

ReductionReport extract_reduction(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                                  const Vector& xi) {
  RankOneSasakiReport r1 = check_rank_one_sasaki(M, dec, xi);
  if (!r1.ok) throw Error("the rank-one Sasaki conditions fail, so there is nothing to reduce");
  if (!check_z_standard(M, dec, xi))
    throw NotZStandard("b is not central in the nilpotent ideal");

  RankOneData rd = rank_one_data(M, dec, xi);
  const std::vector<Vector>& gb = dec.nilradical_part;
  const MetricLieAlgebra& Mg = rd.ideal;
  const LieAlgebra& Lg = Mg.algebra();
  int m = Mg.dim();
  int k = m - 2;

  Form eta = Mg.flat_form(rd.xi);
  Form deta = ce_d(Lg, eta);

  Vector bf = Mg.flat(rd.b), xf = Mg.flat(rd.xi);
  Matrix perp_rows(2, m);
  for (int j = 0; j < m; ++j) {
    perp_rows(0, j) = bf[j];
    perp_rows(1, j) = xf[j];
  }
  std::vector<Vector> gv = kernel(perp_rows);
  if (static_cast<int>(gv.size()) != k)
    throw BlockFormViolation("b and xi do not span a nondegenerate plane");

  std::vector<Vector> tc = gv;
  tc.push_back(rd.b);
  tc.push_back(rd.xi);
  Matrix T = Matrix::from_cols(tc);
  Matrix Tinv = *inverse(T);
  Matrix Dp = Tinv * rd.D * T;
  for (int p = 0; p < k; ++p)
    if (Dp(k, p) != 0 || Dp(k + 1, p) != 0)
      throw BlockFormViolation("D does not preserve the orthogonal complement of b and xi");
  for (int r = 0; r < m; ++r)
    if (Dp(r, k + 1) != 0) throw BlockFormViolation("D(xi) must vanish");
  for (int p = 0; p < k; ++p)
    if (Dp(p, k) != 0) throw BlockFormViolation("D(b) must lie in the span of b and xi");
  Scalar h = Dp(k, k);
  if (Dp(k + 1, k) != Scalar(-2) * rd.tau)
    throw BlockFormViolation("D(b) must equal h b - 2 tau xi");

  Matrix Dhat(k, k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) Dhat(p, q) = Dp(p, q);
  Matrix ghat(k, k);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) ghat(p, q) = Mg.inner(gv[p], gv[q]);

  Scalar half(1, 2);
  Form omega(k, 2);
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q)
      omega.coeff({p, q}) = half * deta.evaluate({gv[p], gv[q]});

  Matrix ghat_inv = *inverse(ghat);
  Matrix J(k, k);
  for (int p = 0; p < k; ++p) {
    Vector c(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) c[q] = deta.evaluate({gv[p], gv[q]});
    Vector col = ghat_inv * c;
    for (int q = 0; q < k; ++q) J(q, p) = -half * col[q];
  }

  LieAlgebra Lhat(k);
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      Vector c = Tinv * Lg.bracket(gv[p], gv[q]);
      Vector w(static_cast<std::size_t>(k));
      for (int r = 0; r < k; ++r) w[r] = c[r];
      Lhat.set_bracket(p, q, w);
    }

  KahlerSeed seed{MetricLieAlgebra(Lhat, ghat), J, omega, Dhat, h, rd.tau};
  validate_seed(seed);

  // quotient of the ideal by <b>, with the induced metric and contact structure
  Matrix brow(1, m);
  for (int j = 0; j < m; ++j) brow(0, j) = bf[j];
  std::vector<Vector> wv = kernel(brow);
  int wk = static_cast<int>(wv.size());
  LieAlgebra LW = quotient(Lg, {rd.b}, wv);
  Matrix gW(wk, wk);
  for (int p = 0; p < wk; ++p)
    for (int q = 0; q < wk; ++q) gW(p, q) = Mg.inner(wv[p], wv[q]);

  std::vector<Vector> wb = wv;
  wb.push_back(rd.b);
  Matrix WBinv = *inverse(Matrix::from_cols(wb));
  Matrix phiW(wk, wk);
  for (int p = 0; p < wk; ++p) {
    Vector u = coords_in(gb, r1.phi * lift(gb, wv[p]), "phi of the ideal");
    Vector c = WBinv * u;
    for (int q = 0; q < wk; ++q) phiW(q, p) = c[q];
  }
  Vector xic = WBinv * rd.xi;
  Vector xiW(static_cast<std::size_t>(wk));
  for (int q = 0; q < wk; ++q) xiW[q] = xic[q];
  AlmostContactData quot = make_almost_contact(MetricLieAlgebra(LW, gW), phiW, xiW);

  ReductionReport rep{{}, lift(gb, rd.b), xi, h, rd.tau, std::move(seed), {}, std::move(quot)};
  for (const Vector& v : gv) rep.g_basis.push_back(lift(gb, v));
  for (const Vector& v : wv) rep.quotient_basis.push_back(lift(gb, v));
  return rep;
}

KahlerSeed symmetrize_D(const KahlerSeed& seed) {
  validate_seed(seed);
  auto [Ds, Da] = sym_anti_split(seed.g, seed.D);
  if (!is_derivation(seed.g.algebra(), Ds))
    throw SymmetricPartNotDerivation("the symmetric part of D is not a derivation");
  if (!commutator(Ds, Da).is_zero())
    throw CommutatorNonzero("the symmetric and antisymmetric parts of D do not commute");

  KahlerSeed out = seed;
  out.D = Ds;
  validate_seed(out);

  // re-derive the move as an isometry of the constructed extensions
  ConstructResult before = construct_sasaki(seed);
  int n = seed.g.dim();
  int N = n + 3, bi = n, xii = n + 1;
  Matrix chi(N, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) chi(i, j) = Ds(i, j);
  chi(bi, bi) = seed.h;
  chi(xii, bi) = Scalar(-2) * seed.tau;
  MetricLieAlgebra moved = isometrize(before.M, before.dec, {chi});
  ConstructResult after = construct_sasaki(out);
  if (!(moved == after.M))
    throw Error("symmetrizing D did not reproduce the expected isometric extension");
  return out;
}

KahlerSeed h_normalize(const KahlerSeed& seed) {
  validate_seed(seed);
  KahlerSeed out = seed;
  if (out.h < 0) {
    out.h = -out.h;
    out.D = -out.D;
  }
  if (out.h > 0) {
    Scalar s = Scalar(2) / out.h;
    out.D = s * out.D;
    out.h = 2;
  }
  validate_seed(out);
  return out;
}

KahlerSeed reverse_metric_sign(const KahlerSeed& seed) {
  validate_seed(seed);
  KahlerSeed out{MetricLieAlgebra(seed.g.algebra(), -seed.g.metric()),
                 seed.J,
                 -seed.omega,
                 seed.D,
                 seed.h,
                 seed.tau};
  validate_seed(out);
  return out;
}

ConstructResult graded_construct(const GradedData& data) {
  int n0 = data.g0.dim();
  int n1 = data.g1_metric.rows;
  int n = n0 + n1;
  if (static_cast<int>(data.rho.size()) != n0)
    throw RepresentationConditionViolated("rho must provide one matrix per basis vector");
  for (const Matrix& r : data.rho)
    if (r.rows != n1 || r.cols != n1)
      throw RepresentationConditionViolated("each rho matrix must act on the abelian factor");

  const LieAlgebra& L0 = data.g0.algebra();
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      Vector c = L0.bracket(i, j);
      Matrix want(n1, n1);
      for (int t = 0; t < n0; ++t)
        if (c[t] != 0) want = want + c[t] * data.rho[t];
      if (commutator(data.rho[i], data.rho[j]) != want)
        throw RepresentationConditionViolated("rho does not respect the bracket");
    }
  for (int i = 0; i < n0; ++i) {
    if (!endo_action(data.rho[i], data.omega1).is_zero())
      throw RepresentationConditionViolated("rho must annihilate the abelian symplectic form");
    if (!commutator(data.rho[i], data.J1).is_zero())
      throw RepresentationConditionViolated("rho must commute with the abelian complex structure");
  }

  LieAlgebra L(n);
  for (int i = 0; i < n0; ++i)
    for (int j = i + 1; j < n0; ++j) {
      Vector c = L0.bracket(i, j);
      Vector w = zero_vector(n);
      for (int t = 0; t < n0; ++t) w[t] = c[t];
      L.set_bracket(i, j, w);
    }
  for (int i = 0; i < n0; ++i)
    for (int p = 0; p < n1; ++p) {
      Vector c = data.rho[i].col(p);
      Vector w = zero_vector(n);
      for (int t = 0; t < n1; ++t) w[n0 + t] = c[t];
      L.set_bracket(i, n0 + p, w);
    }

  Matrix G = block_diag(data.g0.metric(), data.g1_metric);
  Matrix J = block_diag(data.J0, data.J1);
  Matrix W = block_diag(data.omega0.as_matrix(), data.omega1.as_matrix());
  Matrix D(n, n);
  Scalar half_h = data.h / 2;
  for (int t = 0; t < n1; ++t) D(n0 + t, n0 + t) = half_h;

  KahlerSeed seed{MetricLieAlgebra(L, G), J, Form::two_form(W), D, data.h, data.tau};
  return construct_sasaki(seed);
}

KahlerExtensionResult reduce_kahler_extension(const MetricLieAlgebra& K, const Matrix& J,
                                              const StandardDecomposition& dec) {
  int n = K.dim();
  require_standard(K, dec);
  Form omega = Form::two_form(K.metric() * J);
  KahlerReport kr = kahler_check(K, J, omega);
  if (!kr.ok) throw Error("the input is not pseudo-Kahler: " + kr.failing_clause);

  Vector b = negate(J * dec.e0());
  const std::vector<Vector>& kb = dec.nilradical_part;
  if (!in_span(kb, b)) throw Error("-J(e0) does not lie in the nilpotent ideal");
  LieAlgebra Lk = restrict_to(K.algebra(), kb);
  Vector bc = coords_in(kb, b, "-J(e0)");
  if (!in_span(center(Lk), bc))
    throw Error("-J(e0) is not central in the nilpotent ideal");

  // central extension by twice the fundamental form, with a unit direction zeta
  const LieAlgebra& LK = K.algebra();
  LieAlgebra Lt(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector w = zero_vector(n + 1);
      Vector u = LK.bracket(i, j);
      for (int t = 0; t < n; ++t) w[t] = u[t];
      w[n] = Scalar(-2) * omega.coeff({i, j});
      Lt.set_bracket(i, j, w);
    }
  Matrix G = block_diag(K.metric(), Matrix::diagonal({Scalar(1)}));
  MetricLieAlgebra Mt(Lt, G);

  auto pad = [n](const Vector& v) {
    Vector out = zero_vector(n + 1);
    for (int t = 0; t < n; ++t) out[t] = v[t];
    return out;
  };
  StandardDecomposition dect;
  for (const Vector& v : kb) dect.nilradical_part.push_back(pad(v));
  dect.nilradical_part.push_back(basis_vector(n + 1, n));
  for (const Vector& v : dec.abelian_part) dect.abelian_part.push_back(pad(v));

  Vector zeta = basis_vector(n + 1, n);
  ReductionReport rep = extract_reduction(Mt, dect, zeta);
  return {std::move(Mt), std::move(dect), std::move(zeta), std::move(rep)};
}

}  // namespace sasaki
