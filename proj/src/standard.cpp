#include "sasaki/standard.hpp"

#include "sasaki/errors.hpp"

#include <algorithm>
#include <set>

namespace sasaki {

namespace {

Vector coords_in(const std::vector<Vector>& basis, const Vector& v, const char* what) {
  auto sol = solve(Matrix::from_cols(basis), v);
  if (!sol) throw Error(std::string(what) + " does not lie in the expected subspace");
  return sol->first;
}

Vector lift(const std::vector<Vector>& basis, const Vector& coords) {
  Vector out = zero_vector(static_cast<int>(basis[0].size()));
  for (std::size_t i = 0; i < basis.size(); ++i) out = add(out, scale(coords[i], basis[i]));
  return out;
}

std::vector<Vector> concat(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

enum class Clause { ok, complement, ideal, nilpotent, abelian, orthogonal };

Clause standard_violation(const MetricLieAlgebra& M, const StandardDecomposition& dec) {
  const LieAlgebra& L = M.algebra();
  int n = M.dim();
  std::vector<Vector> all = concat(dec.nilradical_part, dec.abelian_part);
  if (static_cast<int>(all.size()) != n || rank(Matrix::from_cols(all)) != n)
    return Clause::complement;
  if (!is_ideal(L, dec.nilradical_part)) return Clause::ideal;
  if (!is_nilpotent(restrict_to(L, dec.nilradical_part)).nilpotent) return Clause::nilpotent;
  if (!is_subalgebra(L, dec.abelian_part) || !is_abelian_subspace(L, dec.abelian_part))
    return Clause::abelian;
  for (const Vector& u : dec.nilradical_part)
    for (const Vector& v : dec.abelian_part)
      if (M.inner(u, v) != 0) return Clause::orthogonal;
  return Clause::ok;
}

}  // namespace

const Vector& StandardDecomposition::e0() const {
  if (abelian_part.size() != 1) throw NotRankOne("decomposition rank is not one");
  return abelian_part[0];
}

bool check_standard(const MetricLieAlgebra& M, const StandardDecomposition& dec) {
  return standard_violation(M, dec) == Clause::ok;
}

void require_standard(const MetricLieAlgebra& M, const StandardDecomposition& dec) {
  switch (standard_violation(M, dec)) {
    case Clause::ok:
      return;
    case Clause::complement:
      throw Error("the two parts do not span complementary subspaces");
    case Clause::ideal:
      throw NotAnIdeal("the first part is not an ideal");
    case Clause::nilpotent:
      throw NotNilpotent("the ideal is not nilpotent");
    case Clause::abelian:
      throw Error("the complement is not an abelian subalgebra");
    case Clause::orthogonal:
      throw NotOrthogonal("the two parts are not orthogonal");
  }
}

bool check_pseudo_iwasawa(const MetricLieAlgebra& M, const StandardDecomposition& dec) {
  for (const Vector& x : dec.abelian_part)
    if (!is_metric_symmetric(M, M.algebra().ad(x))) return false;
  return true;
}

MetricLieAlgebra restrict_metric(const MetricLieAlgebra& M, const std::vector<Vector>& basis) {
  LieAlgebra sub = restrict_to(M.algebra(), basis);
  int m = static_cast<int>(basis.size());
  Matrix G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G(i, j) = M.inner(basis[i], basis[j]);
  return MetricLieAlgebra(sub, G);
}

RankOneData rank_one_data(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                          const Vector& xi) {
  if (dec.rank() != 1) throw NotRankOne("decomposition rank is not one");
  const Vector& e0 = dec.abelian_part[0];
  Scalar tau = M.inner(e0, e0);
  if (tau != 1 && tau != -1) throw NotRankOne("the complement generator must have norm ±1");
  if (M.inner(xi, xi) != 1) throw XiNotUnit("g(xi,xi) must be 1");

  const std::vector<Vector>& gb = dec.nilradical_part;
  int m = static_cast<int>(gb.size());
  MetricLieAlgebra Mg = restrict_metric(M, gb);
  Vector xi_s = coords_in(gb, xi, "xi");

  Matrix D(m, m);
  for (int j = 0; j < m; ++j) {
    Vector col = coords_in(gb, M.algebra().bracket(e0, gb[j]), "[e0, g]");
    for (int k = 0; k < m; ++k) D(k, j) = col[k];
  }
  auto [Ds, Da] = sym_anti_split(Mg, D);
  Vector b_s = Da * xi_s;
  return RankOneData{std::move(Mg), std::move(D), std::move(Ds), std::move(Da),
                     std::move(xi_s), std::move(b_s), std::move(tau)};
}

RankOneSasakiReport check_rank_one_sasaki(const MetricLieAlgebra& M,
                                          const StandardDecomposition& dec, const Vector& xi) {
  require_standard(M, dec);
  RankOneData rd = rank_one_data(M, dec, xi);
  const std::vector<Vector>& gb = dec.nilradical_part;
  int m = static_cast<int>(gb.size());
  const MetricLieAlgebra& Mg = rd.ideal;
  const LieAlgebra& Lg = Mg.algebra();
  const Vector& xi_s = rd.xi;
  const Vector& b_s = rd.b;
  const Matrix& D = rd.D;
  const Matrix& Ds = rd.Ds;
  const Matrix& Da = rd.Da;
  Scalar tau = rd.tau;
  Form eta_s = Mg.flat_form(xi_s);
  Form deta = ce_d(Lg, eta_s);
  Form b_flat = Mg.flat_form(b_s);

  RankOneSasakiReport rep;
  rep.tau = tau;
  rep.b = lift(gb, b_s);
  rep.eta = M.flat_form(xi);

  rep.xi_conditions = is_zero(D * xi_s) && sym_anti_split(Mg, Lg.ad(xi_s)).first.is_zero() &&
                      is_zero(metric_adjoint(Mg, Lg.ad(b_s)) * xi_s);

  rep.d_conditions =
      endo_action(Da, deta).is_zero() && (Da * b_s == scale(-tau, xi_s));

  Scalar quarter(1, 4);
  std::vector<Matrix> ad_stars(m);
  for (int u = 0; u < m; ++u) ad_stars[u] = metric_adjoint(Mg, Lg.ad(u));

  rep.eta_wedge_condition = true;
  rep.b_condition = true;
  for (int p = 0; p < m; ++p) {
    Vector x = basis_vector(m, p);
    Form x_flat = Mg.flat_form(x);

    Matrix alpha(m, m);
    for (int u = 0; u < m; ++u)
      for (int w = u + 1; w < m; ++w) {
        Scalar v = deta.evaluate({ad_stars[u] * x, basis_vector(m, w)}) -
                   deta.evaluate({ad_stars[w] * x, basis_vector(m, u)});
        alpha(u, w) = v;
        alpha(w, u) = -v;
      }
    Form lhs = wedge(eta_s, x_flat);
    Form rhs = quarter * Form::two_form(alpha);
    rhs -= quarter * endo_action(ad_stars[p], deta);
    rhs += quarter * ce_d(Lg, lie_derivative(Lg, x, eta_s));
    rhs += tau * wedge(b_flat, Mg.flat_form(Ds * x));
    if (lhs != rhs) rep.eta_wedge_condition = false;

    Form t = interior(Ds * x, deta);
    t += interior(x, ce_d(Lg, b_flat));
    t += interior(b_s, ce_d(Lg, x_flat));
    t += Mg.flat_form(Lg.bracket(x, b_s));
    if (!t.is_zero()) rep.b_condition = false;
  }

  // assemble phi: on the ideal phi(w) = 1/2 (ad w)* xi + tau g(b,w) e0, and phi(e0) = -b
  int n = M.dim();
  Matrix phi_dec(n, n);
  Scalar half(1, 2);
  for (int j = 0; j < m; ++j) {
    Vector col = scale(half, ad_stars[j] * xi_s);
    for (int k = 0; k < m; ++k) phi_dec(k, j) = col[k];
    phi_dec(m, j) = tau * Mg.inner(b_s, basis_vector(m, j));
  }
  for (int k = 0; k < m; ++k) phi_dec(k, m) = -b_s[k];
  Matrix P = Matrix::from_cols(concat(gb, dec.abelian_part));
  rep.phi = P * phi_dec * *inverse(P);

  AlmostContactData A = make_almost_contact(M, rep.phi, xi);
  rep.metric_condition = check_acms(A).ok;
  rep.sasaki_cross_check = check_sasaki(A).verdict;
  rep.ok = rep.xi_conditions && rep.d_conditions && rep.eta_wedge_condition && rep.b_condition &&
           rep.metric_condition;
  return rep;
}

bool check_z_standard(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                      const Vector& xi) {
  RankOneData rd = rank_one_data(M, dec, xi);
  return in_span(center(rd.ideal.algebra()), rd.b);
}

std::vector<Vector> nilradical(const LieAlgebra& L) {
  int n = L.dim();
  if (is_nilpotent(L).nilpotent) {
    std::vector<Vector> all;
    for (int i = 0; i < n; ++i) all.push_back(basis_vector(n, i));
    return all;
  }

  // associative closure of the adjoint operators; the nilradical is the
  // radical of the trace pairing tr(ad x · a) over that algebra
  std::vector<Matrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(L.ad(i));
  auto flatten = [n](const Matrix& mat) {
    Vector v(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = mat(i, j);
    return v;
  };
  std::vector<Matrix> words;
  std::vector<Vector> span;
  std::size_t next = 0;
  for (const Matrix& gmat : gens)
    if (!gmat.is_zero() && !in_span(span, flatten(gmat))) {
      words.push_back(gmat);
      span.push_back(flatten(gmat));
      span = canonical_basis(span);
    }
  while (next < words.size()) {
    Matrix w = words[next++];
    for (const Matrix& gmat : gens) {
      Matrix p = w * gmat;
      if (p.is_zero() || in_span(span, flatten(p))) continue;
      words.push_back(p);
      span.push_back(flatten(p));
      span = canonical_basis(span);
    }
  }

  Matrix sys(static_cast<int>(words.size()), n);
  for (std::size_t r = 0; r < words.size(); ++r)
    for (int i = 0; i < n; ++i) sys(static_cast<int>(r), i) = (gens[i] * words[r]).trace();
  std::vector<Vector> rad = canonical_basis(kernel(sys));
  if (!is_ideal(L, rad) || !is_nilpotent(restrict_to(L, rad)).nilpotent)
    throw Error("nilradical computation failed");
  return rad;
}

std::vector<Vector> scan_z_standard(const MetricLieAlgebra& M, int height) {
  const LieAlgebra& L = M.algebra();
  int n = L.dim();

  std::vector<Scalar> values{0};
  for (int p = 1; p <= height; ++p)
    for (int q = 1; q <= height; ++q) {
      Scalar v(p, q);
      if (std::find(values.begin(), values.end(), v) == values.end()) {
        values.push_back(v);
        values.push_back(-v);
      }
    }

  std::set<Vector> pool;
  auto canonical_scale = [](Vector v) {
    for (const Scalar& c : v)
      if (c != 0) {
        Scalar lead = c;
        for (Scalar& e : v) e /= lead;
        break;
      }
    return v;
  };
  for (int i = 0; i < n; ++i) pool.insert(basis_vector(n, i));

  std::vector<Vector> nil = nilradical(L);
  std::vector<Vector> zc;
  for (const Vector& c : center(restrict_to(L, nil))) zc.push_back(lift(nil, c));
  int k = static_cast<int>(zc.size());
  double total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<double>(values.size());
  if (k > 0 && total <= 1e5) {
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      Vector cand = zero_vector(n);
      bool nonzero = false;
      for (int i = 0; i < k; ++i)
        if (values[idx[i]] != 0) {
          cand = add(cand, scale(values[idx[i]], zc[i]));
          nonzero = true;
        }
      if (nonzero) pool.insert(canonical_scale(cand));
      int pos = 0;
      while (pos < k && ++idx[pos] == values.size()) idx[pos++] = 0;
      if (pos == k) break;
    }
  } else if (k > 0) {
    // pool guard for large centers: pairwise combinations only
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (const Scalar& a : values)
          for (const Scalar& b : values) {
            if (a == 0 && b == 0) continue;
            pool.insert(canonical_scale(add(scale(a, zc[i]), scale(b, zc[j]))));
          }
    for (int i = 0; i < k; ++i) pool.insert(canonical_scale(zc[i]));
  }

  std::vector<Vector> found;
  for (const Vector& X : pool) {
    if (M.inner(X, X) == 0) continue;
    std::vector<Vector> zX = canonical_basis(centralizer(L, X));
    if (static_cast<int>(zX.size()) != n - 1) continue;
    if (!is_ideal(L, zX)) continue;
    if (!is_nilpotent(restrict_to(L, zX)).nilpotent) continue;
    found.push_back(X);
  }
  std::sort(found.begin(), found.end());
  return found;
}

MetricLieAlgebra isometrize(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                            const std::vector<Matrix>& chi) {
  const LieAlgebra& L = M.algebra();
  int n = M.dim();
  const std::vector<Vector>& gb = dec.nilradical_part;
  const std::vector<Vector>& ab = dec.abelian_part;
  if (chi.size() != ab.size())
    throw Error("chi must provide one matrix per complement basis vector");
  std::vector<Vector> all = concat(gb, ab);
  if (static_cast<int>(all.size()) != n || rank(Matrix::from_cols(all)) != n)
    throw Error("the two parts do not span complementary subspaces");
  if (!is_ideal(L, gb)) throw NotAnIdeal("the first part is not an ideal");
  if (!is_subalgebra(L, ab) || !is_abelian_subspace(L, ab))
    throw Error("the complement is not an abelian subalgebra");

  LieAlgebra Lg = restrict_to(L, gb);
  int m = static_cast<int>(gb.size());
  for (std::size_t t = 0; t < chi.size(); ++t) {
    const Matrix& X = chi[t];
    for (const Vector& v : ab)
      if (!is_zero(X * v)) throw Error("chi must vanish on the complement");
    Matrix Xg(m, m);
    for (int j = 0; j < m; ++j) {
      Vector col = X * gb[j];
      if (!in_span(gb, col)) throw NotADerivation("chi must preserve the ideal");
      Vector c = coords_in(gb, col, "chi(g)");
      for (int i = 0; i < m; ++i) Xg(i, j) = c[i];
    }
    if (!is_derivation(Lg, Xg)) throw NotADerivation("chi is not a derivation of the ideal");
    if (sym_anti_split(M, X).first != sym_anti_split(M, L.ad(ab[t])).first)
      throw SymmetricPartMismatch("chi has the wrong metric-symmetric part");
  }
  for (std::size_t t = 0; t < chi.size(); ++t)
    for (std::size_t s = 0; s < ab.size(); ++s)
      if (!commutator(chi[t], L.ad(ab[s])).is_zero())
        throw CommutatorNonzero("chi does not commute with the adjoint action of the complement");
  for (std::size_t t = 0; t < chi.size(); ++t)
    for (std::size_t s = t + 1; s < chi.size(); ++s)
      if (!commutator(chi[t], chi[s]).is_zero())
        throw CommutatorNonzero("the chi matrices do not commute with each other");

  // new bracket: [u,v] = [u_g, v_g] + chi(u_a) v_g - chi(v_a) u_g
  Matrix P = Matrix::from_cols(all);
  Matrix Pinv = *inverse(P);
  auto split = [&](int i) {
    Vector c = Pinv.col(i);
    Vector u_g = zero_vector(n), u_a(static_cast<std::size_t>(ab.size()));
    for (int t = 0; t < m; ++t) u_g = add(u_g, scale(c[t], gb[t]));
    for (std::size_t t = 0; t < ab.size(); ++t) u_a[t] = c[m + static_cast<int>(t)];
    return std::make_pair(u_g, u_a);
  };
  auto chi_of = [&](const Vector& a_coords) {
    Matrix out(n, n);
    for (std::size_t t = 0; t < chi.size(); ++t)
      if (a_coords[t] != 0) out = out + a_coords[t] * chi[t];
    return out;
  };

  LieAlgebra Lnew(n);
  for (int i = 0; i < n; ++i) {
    auto [ug, ua] = split(i);
    for (int j = i + 1; j < n; ++j) {
      auto [vg, va] = split(j);
      Vector w = L.bracket(ug, vg);
      w = add(w, chi_of(ua) * vg);
      w = sub(w, chi_of(va) * ug);
      Lnew.set_bracket(i, j, w);
    }
  }
  if (!jacobi_check(Lnew).ok)
    throw NotALieAlgebra("the modified bracket fails the Jacobi identity");
  return MetricLieAlgebra(Lnew, M.metric());
}

bool no_pseudo_iwasawa_audit(const AlmostContactData& A, const StandardDecomposition& dec) {
  if (!check_sasaki(A).verdict) throw Error("the structure must pass the Sasaki checks first");
  require_standard(A.M, dec);
  return !check_pseudo_iwasawa(A.M, dec);
}

}  // namespace sasaki
