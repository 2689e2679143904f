#include "doctest.h"
#include "test_support.hpp"

#include "sasaki/standard.hpp"

#include <algorithm>

using namespace sasaki;
using support::ex43;
using support::ex43p;
using support::heisenberg3;
using support::phi_five;

namespace {

std::vector<Vector> basis_block(int n, std::initializer_list<int> idx) {
  std::vector<Vector> out;
  for (int i : idx) out.push_back(basis_vector(n, i));
  return out;
}

StandardDecomposition standard_split() {
  return {basis_block(5, {1, 2, 3, 4}), basis_block(5, {0})};
}

LieAlgebra sl2() {
  LieAlgebra L(3);
  L.set_bracket(0, 1, {0, 2, 0});
  L.set_bracket(0, 2, {0, 0, -2});
  L.set_bracket(1, 2, {1, 0, 0});
  return L;
}

LieAlgebra aff2() {
  LieAlgebra L(2);
  L.set_bracket(0, 1, {0, 1});
  return L;
}

// heisenberg ideal with a complement acting by a nilpotent non-symmetric map
MetricLieAlgebra twisted_heisenberg4() {
  LieAlgebra L(4);
  L.set_bracket(0, 1, {0, 0, 1, 0});
  L.set_bracket(0, 3, {0, -1, 0, 0});  // [e4, e1] = e2
  return MetricLieAlgebra(std::move(L), Matrix::identity(4));
}

// abelian R^3 ideal with two commuting diagonal complement actions
MetricLieAlgebra two_step_solvable5() {
  LieAlgebra L(5);
  L.set_bracket(0, 3, {-1, 0, 0, 0, 0});  // [e4, e1] = e1
  L.set_bracket(1, 4, {0, -1, 0, 0, 0});  // [e5, e2] = e2
  return MetricLieAlgebra(std::move(L), Matrix::identity(5));
}

Matrix rotation5(int i, int j) {
  Matrix m(5, 5);
  m(j, i) = 1;
  m(i, j) = -1;
  return m;
}

}  // namespace

TEST_CASE("standard decomposition checks name the violated clause") {
  auto p = ex43p();
  StandardDecomposition good = standard_split();
  CHECK(check_standard(p.M, good));
  CHECK_NOTHROW(require_standard(p.M, good));
  CHECK(good.rank() == 1);
  CHECK(good.e0() == basis_vector(5, 0));

  // the same split of the non-reduced presentation has a non-nilpotent ideal
  auto s = ex43();
  CHECK_FALSE(check_standard(s.M, standard_split()));
  CHECK_THROWS_AS(require_standard(s.M, standard_split()), NotNilpotent);

  StandardDecomposition short_span{basis_block(5, {1, 2, 3, 4}), basis_block(5, {1})};
  CHECK_THROWS_WITH_AS(require_standard(p.M, short_span),
                       "the two parts do not span complementary subspaces", Error);

  StandardDecomposition not_ideal{basis_block(5, {0, 1, 2, 3}), basis_block(5, {4})};
  CHECK_THROWS_AS(require_standard(p.M, not_ideal), NotAnIdeal);

  MetricLieAlgebra h3(heisenberg3(), Matrix::identity(3));
  StandardDecomposition bad_complement{basis_block(3, {2}), basis_block(3, {0, 1})};
  CHECK_THROWS_WITH_AS(require_standard(h3, bad_complement),
                       "the complement is not an abelian subalgebra", Error);

  Vector e1_plus_e5 = add(basis_vector(5, 0), basis_vector(5, 4));
  StandardDecomposition skewed{basis_block(5, {1, 2, 3, 4}), {e1_plus_e5}};
  CHECK_THROWS_AS(require_standard(p.M, skewed), NotOrthogonal);

  StandardDecomposition rank_two{basis_block(5, {1, 2, 3}), basis_block(5, {0, 4})};
  CHECK_THROWS_AS((void)rank_two.e0(), NotRankOne);
}

TEST_CASE("pseudo-iwasawa means the complement acts symmetrically") {
  MetricLieAlgebra flat(LieAlgebra(4), Matrix::identity(4));
  StandardDecomposition dec{basis_block(4, {0, 1}), basis_block(4, {2, 3})};
  CHECK(check_standard(flat, dec));
  CHECK(dec.rank() == 2);
  CHECK(check_pseudo_iwasawa(flat, dec));

  // ad e1 has a nonzero antisymmetric part here
  CHECK_FALSE(check_pseudo_iwasawa(ex43p().M, standard_split()));
}

TEST_CASE("metric restriction to a subalgebra") {
  auto p = ex43p();
  MetricLieAlgebra R = restrict_metric(p.M, basis_block(5, {1, 2, 3, 4}));
  CHECK(R.metric() == Matrix::diagonal({-1, -1, -1, 1}));
  CHECK(R.algebra().bracket(1, 2) == Vector{2, 0, 0, -2});
  CHECK(R.algebra().bracket(0, 1) == zero_vector(4));

  // the nilradical of the non-reduced presentation is metrically degenerate
  auto s = ex43();
  CHECK_THROWS_AS((void)restrict_metric(s.M, nilradical(s.M.algebra())), DegenerateMetric);
}

TEST_CASE("nilradical of the reference algebras") {
  auto s = ex43();
  std::vector<Vector> nr = nilradical(s.M.algebra());
  CHECK(nr == std::vector<Vector>{{0, 1, 0, 0, -1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});

  auto p = ex43p();
  CHECK(nilradical(p.M.algebra()) == basis_block(5, {1, 2, 3, 4}));

  CHECK(nilradical(heisenberg3()) == basis_block(3, {0, 1, 2}));
  CHECK(nilradical(sl2()).empty());
  CHECK(nilradical(aff2()) == std::vector<Vector>{{0, 1}});

  for (const LieAlgebra& L : {s.M.algebra(), p.M.algebra(), aff2()}) {
    std::vector<Vector> rad = nilradical(L);
    CHECK(is_ideal(L, rad));
    CHECK(is_nilpotent(restrict_to(L, rad)).nilpotent);
  }
}

TEST_CASE("rank-one reduction data of the standard presentation") {
  auto p = ex43p();
  RankOneData rd = rank_one_data(p.M, standard_split(), p.xi);
  CHECK(rd.tau == -1);
  CHECK(rd.ideal.metric() == Matrix::diagonal({-1, -1, -1, 1}));
  CHECK(rd.D == Matrix::from_rows({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-2, 0, 0, 0}}));
  CHECK(rd.Ds == Matrix::from_rows({{2, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 0}}));
  CHECK(rd.Da == Matrix::from_rows({{0, 0, 0, -1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {-1, 0, 0, 0}}));
  CHECK(rd.xi == Vector{0, 0, 0, 1});
  CHECK(rd.b == Vector{-1, 0, 0, 0});
  CHECK(rd.Ds + rd.Da == rd.D);
  CHECK(rd.Da * rd.b == scale(-rd.tau, rd.xi));

  StandardDecomposition rank_two{basis_block(5, {1, 2, 3}), basis_block(5, {0, 4})};
  CHECK_THROWS_AS((void)rank_one_data(p.M, rank_two, p.xi), NotRankOne);

  StandardDecomposition scaled{basis_block(5, {1, 2, 3, 4}), {scale(Scalar(2), basis_vector(5, 0))}};
  CHECK_THROWS_AS((void)rank_one_data(p.M, scaled, p.xi), NotRankOne);

  CHECK_THROWS_AS((void)rank_one_data(p.M, standard_split(), basis_vector(5, 3)), XiNotUnit);

  // unit vector with a component along the complement
  Vector outside{Scalar(3) / 4, 0, 0, 0, Scalar(5) / 4};
  CHECK(p.M.inner(outside, outside) == 1);
  CHECK_THROWS_AS((void)rank_one_data(p.M, standard_split(), outside), Error);
}

TEST_CASE("rank-one verification recovers the contact structure") {
  auto p = ex43p();
  RankOneSasakiReport rep = check_rank_one_sasaki(p.M, standard_split(), p.xi);
  CHECK(rep.xi_conditions);
  CHECK(rep.d_conditions);
  CHECK(rep.eta_wedge_condition);
  CHECK(rep.b_condition);
  CHECK(rep.metric_condition);
  CHECK(rep.sasaki_cross_check);
  CHECK(rep.ok);
  CHECK(rep.tau == -1);
  CHECK(rep.b == Vector{0, -1, 0, 0, 0});
  CHECK(rep.phi == phi_five());
  CHECK(rep.eta == p.M.flat_form(p.xi));

  // a standard split whose complement action is not of the required shape
  MetricLieAlgebra tw = twisted_heisenberg4();
  StandardDecomposition dec{basis_block(4, {0, 1, 2}), basis_block(4, {3})};
  CHECK(check_standard(tw, dec));
  RankOneSasakiReport bad = check_rank_one_sasaki(tw, dec, basis_vector(4, 0));
  CHECK_FALSE(bad.xi_conditions);
  CHECK_FALSE(bad.ok);
}

TEST_CASE("central-witness checks") {
  auto p = ex43p();
  CHECK(check_z_standard(p.M, standard_split(), p.xi));

  MetricLieAlgebra tw = twisted_heisenberg4();
  StandardDecomposition dec{basis_block(4, {0, 1, 2}), basis_block(4, {3})};
  CHECK_FALSE(check_z_standard(tw, dec, basis_vector(4, 0)));
}

TEST_CASE("scan for central witnesses") {
  auto p = ex43p();
  std::vector<Vector> found = scan_z_standard(p.M);
  CHECK_FALSE(found.empty());
  auto contains = [&](const Vector& v) {
    return std::find(found.begin(), found.end(), v) != found.end();
  };
  CHECK(contains(basis_vector(5, 1)));
  // null directions are excluded even though their centralizer qualifies
  CHECK_FALSE(contains(Vector{0, 1, 0, 0, 1}));
  CHECK_FALSE(contains(Vector{0, 1, 0, 0, -1}));
  CHECK_FALSE(contains(basis_vector(5, 4)));
  for (const Vector& X : found) {
    CHECK(p.M.inner(X, X) != 0);
    std::vector<Vector> zX = canonical_basis(centralizer(p.M.algebra(), X));
    CHECK(zX.size() == 4);
    CHECK(is_ideal(p.M.algebra(), zX));
    CHECK(is_nilpotent(restrict_to(p.M.algebra(), zX)).nilpotent);
  }

  MetricLieAlgebra flat(LieAlgebra(3), Matrix::identity(3));
  CHECK(scan_z_standard(flat).empty());

  MetricLieAlgebra h3(heisenberg3(), Matrix::identity(3));
  std::vector<Vector> hw = scan_z_standard(h3);
  CHECK(hw.size() == 2);
  CHECK(std::find(hw.begin(), hw.end(), basis_vector(3, 0)) != hw.end());
  CHECK(std::find(hw.begin(), hw.end(), basis_vector(3, 1)) != hw.end());
}

TEST_CASE("isometrize straightens the complement action") {
  auto s = ex43();
  auto p = ex43p();

  // non-orthogonal, non-nilpotent split of the curved presentation; killing
  // the complement action lands exactly on the standard presentation
  std::vector<Vector> ideal{basis_vector(5, 0), {0, 1, 0, 0, -1}, basis_vector(5, 2),
                            basis_vector(5, 3)};
  StandardDecomposition dec{ideal, basis_block(5, {4})};
  MetricLieAlgebra straightened = isometrize(s.M, dec, {Matrix(5, 5)});
  CHECK(straightened == p.M);

  // replaying the adjoint action itself is the identity operation
  MetricLieAlgebra replay = isometrize(p.M, standard_split(), {p.M.algebra().ad(basis_vector(5, 0))});
  CHECK(replay == p.M);
}

TEST_CASE("isometrize validates its inputs") {
  auto p = ex43p();
  StandardDecomposition good = standard_split();

  CHECK_THROWS_WITH_AS((void)isometrize(p.M, good, {}),
                       "chi must provide one matrix per complement basis vector", Error);

  StandardDecomposition short_span{basis_block(5, {1, 2, 3, 4}), basis_block(5, {1})};
  CHECK_THROWS_WITH_AS((void)isometrize(p.M, short_span, {Matrix(5, 5)}),
                       "the two parts do not span complementary subspaces", Error);

  StandardDecomposition not_ideal{basis_block(5, {0, 1, 2, 3}), basis_block(5, {4})};
  CHECK_THROWS_AS((void)isometrize(p.M, not_ideal, {Matrix(5, 5)}), NotAnIdeal);

  MetricLieAlgebra h3(heisenberg3(), Matrix::identity(3));
  StandardDecomposition bad_complement{basis_block(3, {2}), basis_block(3, {0, 1})};
  CHECK_THROWS_WITH_AS((void)isometrize(h3, bad_complement, {Matrix(3, 3), Matrix(3, 3)}),
                       "the complement is not an abelian subalgebra", Error);

  CHECK_THROWS_WITH_AS((void)isometrize(p.M, good, {Matrix::identity(5)}),
                       "chi must vanish on the complement", Error);

  Matrix leak(5, 5);
  leak(0, 1) = 1;  // sends the ideal vector e2 to the complement
  CHECK_THROWS_WITH_AS((void)isometrize(p.M, good, {leak}), "chi must preserve the ideal",
                       NotADerivation);

  Matrix not_der(5, 5);
  not_der(1, 1) = 1;
  CHECK_THROWS_WITH_AS((void)isometrize(p.M, good, {not_der}),
                       "chi is not a derivation of the ideal", NotADerivation);

  CHECK_THROWS_AS((void)isometrize(p.M, good, {Matrix(5, 5)}), SymmetricPartMismatch);

  MetricLieAlgebra solv = two_step_solvable5();
  StandardDecomposition sdec{basis_block(5, {0, 1, 2}), basis_block(5, {3, 4})};
  Matrix chi1 = solv.algebra().ad(basis_vector(5, 3)) + rotation5(0, 1);
  Matrix chi2 = solv.algebra().ad(basis_vector(5, 4));
  CHECK_THROWS_WITH_AS((void)isometrize(solv, sdec, {chi1, chi2}),
                       "chi does not commute with the adjoint action of the complement",
                       CommutatorNonzero);

  MetricLieAlgebra flat(LieAlgebra(5), Matrix::identity(5));
  CHECK_THROWS_WITH_AS((void)isometrize(flat, sdec, {rotation5(0, 1), rotation5(1, 2)}),
                       "the chi matrices do not commute with each other", CommutatorNonzero);
  CHECK(isometrize(flat, sdec, {rotation5(0, 1), rotation5(0, 1)}).metric() == flat.metric());
}

TEST_CASE("pseudo-iwasawa audit needs a verified structure") {
  auto p = ex43p();
  AlmostContactData A = make_almost_contact(p.M, p.phi, p.xi);
  CHECK(no_pseudo_iwasawa_audit(A, standard_split()));

  MetricLieAlgebra flat(LieAlgebra(5), Matrix::identity(5));
  AlmostContactData inert = make_almost_contact(flat, phi_five(), basis_vector(5, 4));
  StandardDecomposition dec{basis_block(5, {0, 1, 2, 3}), basis_block(5, {4})};
  CHECK_THROWS_AS((void)no_pseudo_iwasawa_audit(inert, dec), Error);
}
