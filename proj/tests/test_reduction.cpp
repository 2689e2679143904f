#include "doctest.h"

#include <algorithm>

#include "sasaki/catalog.hpp"
#include "sasaki/reduction.hpp"
#include "sasaki/salamon.hpp"
#include "test_support.hpp"

using namespace sasaki;
using support::ex43p;

namespace {

Matrix rot2() {
  return Matrix::from_rows({{0, -1}, {1, 0}});
}

Matrix rot4() {
  return Matrix::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
}

// flat plane with the given metric signs; J is the rotation compatible with it
KahlerSeed plane_seed(const Vector& signs, const Matrix& D, Scalar h, Scalar tau) {
  int n = static_cast<int>(signs.size());
  Matrix g = Matrix::diagonal(signs);
  Matrix J = n == 2 ? rot2() : rot4();
  return {MetricLieAlgebra(LieAlgebra(n), g), J, Form::two_form(g * J), D, std::move(h),
          std::move(tau)};
}

// the seed recovered from the standard five-dimensional structure
KahlerSeed negative_plane_seed() {
  return plane_seed({-1, -1}, Matrix::identity(2), 2, -1);
}

StandardDecomposition standard_split() {
  StandardDecomposition dec;
  for (int i = 1; i < 5; ++i) dec.nilradical_part.push_back(basis_vector(5, i));
  dec.abelian_part.push_back(basis_vector(5, 0));
  return dec;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e;
  throw Error("no catalog entry " + id);
}

}  // namespace

TEST_CASE("pseudo-Kahler check reports the first failing clause") {
  MetricLieAlgebra flat2(LieAlgebra(2), Matrix::diagonal({-1, -1}));
  Matrix J = rot2();
  Form omega = Form::two_form(flat2.metric() * J);

  KahlerReport ok = kahler_check(flat2, J, omega);
  CHECK(ok.ok);
  CHECK(ok.failing_clause.empty());

  SUBCASE("J squared") {
    KahlerReport r = kahler_check(flat2, Matrix::identity(2), omega);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_clause == "J^2=-id");
  }
  SUBCASE("mismatched sizes also fall under the J clause") {
    KahlerReport r = kahler_check(flat2, Matrix::identity(3), omega);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_clause == "J^2=-id");
  }
  SUBCASE("J not an isometry") {
    // squares to -id but does not preserve the euclidean metric
    MetricLieAlgebra euclid(LieAlgebra(2), Matrix::identity(2));
    Matrix bad = Matrix::from_rows({{1, -1}, {2, -1}});
    REQUIRE(bad * bad == -Matrix::identity(2));
    KahlerReport r = kahler_check(euclid, bad, Form::two_form(Matrix(2, 2)));
    CHECK_FALSE(r.ok);
    CHECK(r.failing_clause == "g(J,J)=g");
  }
  SUBCASE("omega not the fundamental form") {
    KahlerReport r = kahler_check(flat2, J, Scalar(2) * omega);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_clause == "omega=g(,J)");
  }
  SUBCASE("fundamental form not closed") {
    // heisenberg3 + line: the rotation pairing (e1,e2) and (e3,e4) gives
    // omega = -e^12 - e^34 and d(e^34) = -e^124
    LieAlgebra L(4);
    L.set_bracket(0, 1, {0, 0, 1, 0});
    MetricLieAlgebra M(L, Matrix::identity(4));
    KahlerReport r = kahler_check(M, rot4(), Form::two_form(rot4()));
    CHECK_FALSE(r.ok);
    CHECK(r.failing_clause == "domega=0");
  }
  SUBCASE("complex structure not integrable") {
    // same algebra, rotation pairing (e1,e4) and (e2,e3): omega closed but
    // N(e1,e2) = -e3
    LieAlgebra L(4);
    L.set_bracket(0, 1, {0, 0, 1, 0});
    MetricLieAlgebra M(L, Matrix::identity(4));
    Matrix J2(4, 4);
    J2(3, 0) = 1;
    J2(2, 1) = -1;
    J2(1, 2) = 1;
    J2(0, 3) = -1;
    REQUIRE(J2 * J2 == -Matrix::identity(4));
    Form om = Form::two_form(J2);
    REQUIRE(ce_d(L, om).is_zero());
    KahlerReport r = kahler_check(M, J2, om);
    CHECK_FALSE(r.ok);
    CHECK(r.failing_clause == "N_J=0");
  }
}

TEST_CASE("quadratic derivation identity") {
  MetricLieAlgebra flat2(LieAlgebra(2), Matrix::diagonal({-1, -1}));
  Matrix D = Matrix::identity(2) + rot2();  // symmetric part id, antisymmetric part rot
  CHECK(quadratic_identity(flat2, D, 2));
  CHECK_FALSE(quadratic_identity(flat2, D, 3));
  // purely antisymmetric D satisfies the identity for every h
  CHECK(quadratic_identity(flat2, rot2(), 5));
  CHECK(quadratic_identity(flat2, Matrix(2, 2), 0));
}

TEST_CASE("seed validation names the violated invariant") {
  CHECK_NOTHROW(validate_seed(negative_plane_seed()));

  SUBCASE("tau") {
    KahlerSeed s = negative_plane_seed();
    s.tau = 2;
    CHECK_THROWS_WITH_AS(validate_seed(s), "tau must be 1 or -1", SeedInvariantViolated);
  }
  SUBCASE("dimensions") {
    KahlerSeed s = negative_plane_seed();
    s.D = Matrix(3, 3);
    CHECK_THROWS_WITH_AS(validate_seed(s), "the seed pieces do not share one dimension",
                         SeedInvariantViolated);
  }
  SUBCASE("base not nilpotent") {
    LieAlgebra aff(2);
    aff.set_bracket(0, 1, {0, 1});
    KahlerSeed s = negative_plane_seed();
    s.g = MetricLieAlgebra(aff, Matrix::diagonal({-1, -1}));
    CHECK_THROWS_WITH_AS(validate_seed(s), "the base algebra is not nilpotent",
                         SeedInvariantViolated);
  }
  SUBCASE("pseudo-Kahler clause is passed through") {
    KahlerSeed s = negative_plane_seed();
    s.J = Matrix::identity(2);
    CHECK_THROWS_WITH_AS(validate_seed(s), "J^2=-id", SeedInvariantViolated);
  }
  SUBCASE("D must commute with J") {
    KahlerSeed s = negative_plane_seed();
    s.D = Matrix::diagonal({1, -1});
    CHECK_THROWS_WITH_AS(validate_seed(s), "[J,D]=0", SeedInvariantViolated);
  }
  SUBCASE("quadratic identity") {
    KahlerSeed s = negative_plane_seed();
    s.h = 3;
    CHECK_THROWS_WITH_AS(validate_seed(s), "[D^s,D^a]=hD^s-2(D^s)^2", SeedInvariantViolated);
  }
}

TEST_CASE("three-dimensional extension of a flat plane seed") {
  ConstructResult res = construct_sasaki(negative_plane_seed());

  CHECK(res.M.dim() == 5);
  CHECK(jacobi_check(res.M.algebra()).ok);
  CHECK(res.M.metric() == Matrix::diagonal({-1, -1, -1, 1, -1}));

  // basis order (seed basis, b, xi, e0)
  CHECK(res.b == basis_vector(5, 2));
  CHECK(res.xi == basis_vector(5, 3));
  CHECK(res.e0 == basis_vector(5, 4));

  const LieAlgebra& L = res.M.algebra();
  CHECK(L.bracket(0, 1) == Vector{0, 0, -2, -2, 0});
  CHECK(L.bracket(4, 0) == basis_vector(5, 0));  // [e0, x] = D x
  CHECK(L.bracket(4, 1) == basis_vector(5, 1));
  CHECK(L.bracket(4, 2) == Vector{0, 0, 2, 2, 0});  // [e0, b] = h b - 2 tau xi

  Matrix phi(5, 5);
  phi(0, 1) = -1;
  phi(1, 0) = 1;
  phi(4, 2) = 1;
  phi(2, 4) = -1;
  CHECK(res.contact.phi == phi);
  CHECK(res.contact.xi == res.xi);

  CHECK(res.dec.nilradical_part.size() == 4);
  CHECK(res.dec.abelian_part == std::vector<Vector>{basis_vector(5, 4)});
  CHECK(check_standard(res.M, res.dec));
  CHECK(check_z_standard(res.M, res.dec, res.xi));

  SasakiReport rep = check_sasaki(res.contact);
  CHECK(rep.verdict);
  CHECK(rep.routes_agree);
}

TEST_CASE("construction matches the printed catalog brackets") {
  for (Scalar tau : {Scalar(1), Scalar(-1)}) {
    CAPTURE(tau);
    KahlerSeed s1 = plane_seed({1, 1}, Matrix(2, 2), 0, tau);
    CHECK(parse_salamon(find_entry("dim5.1").salamon, {{"tau", tau}}) ==
          construct_sasaki(s1).M.algebra());

    KahlerSeed s3 = plane_seed({1, 1}, Matrix::identity(2), 2, tau);
    CHECK(parse_salamon(find_entry("dim5.3").salamon, {{"tau", tau}}) ==
          construct_sasaki(s3).M.algebra());
  }
}

TEST_CASE("extraction recovers the seed of the standard five-dimensional structure") {
  support::Structure p = ex43p();
  ReductionReport rep = extract_reduction(p.M, standard_split(), p.xi);

  CHECK(rep.h == 2);
  CHECK(rep.tau == -1);
  CHECK(rep.b == Vector{0, -1, 0, 0, 0});
  CHECK(rep.xi == p.xi);
  CHECK(rep.g_basis == std::vector<Vector>{basis_vector(5, 2), basis_vector(5, 3)});

  CHECK(rep.seed == negative_plane_seed());
  CHECK(rep.seed.D == Matrix::identity(2));
  CHECK(rep.seed.g.metric() == Matrix::diagonal({-1, -1}));
  CHECK(rep.seed.omega.coeff({0, 1}) == 1);
  CHECK(rep.seed.J == rot2());
  CHECK_NOTHROW(validate_seed(rep.seed));

  // quotient by <b>: the heisenberg algebra with [w1,w2] = -2 w3
  CHECK(rep.quotient_basis ==
        std::vector<Vector>{basis_vector(5, 2), basis_vector(5, 3), basis_vector(5, 4)});
  const AlmostContactData& q = rep.sasaki_quotient;
  CHECK(q.M.dim() == 3);
  CHECK(q.M.algebra().bracket(0, 1) == Vector{0, 0, -2});
  CHECK(q.M.metric() == Matrix::diagonal({-1, -1, 1}));
  CHECK(q.phi == Matrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(q.xi == Vector{0, 0, 1});
  CHECK(check_sasaki(q).verdict);
}

TEST_CASE("extract then construct round trip") {
  std::vector<KahlerSeed> seeds;
  seeds.push_back(plane_seed({1, 1}, Matrix(2, 2), 0, 1));
  seeds.push_back(plane_seed({1, 1}, Matrix::identity(2), 2, -1));
  seeds.push_back(plane_seed({1, 1}, Scalar(3, 2) * Matrix::identity(2), 3, 1));
  seeds.push_back(plane_seed({1, 1}, Matrix(2, 2), Scalar(1, 2), 1));
  seeds.push_back(plane_seed({1, 1, 1, 1}, Matrix::diagonal({1, 1, 0, 0}), 2, 1));
  seeds.push_back(negative_plane_seed());
  seeds.push_back(reverse_metric_sign(negative_plane_seed()));

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    CAPTURE(i);
    const KahlerSeed& s = seeds[i];
    ConstructResult res = construct_sasaki(s);
    ReductionReport rep = extract_reduction(res.M, res.dec, res.xi);
    CHECK(rep.seed == s);
    CHECK(rep.h == s.h);
    CHECK(rep.tau == s.tau);
    CHECK(rep.b == res.b);
  }
}

TEST_CASE("extraction refuses structures that are not rank-one Sasaki") {
  // twisted product: [e1,e2] = e3, [e4,e1] = e2 with the euclidean metric
  LieAlgebra L(4);
  L.set_bracket(0, 1, {0, 0, 1, 0});
  L.set_bracket(0, 3, {0, -1, 0, 0});
  MetricLieAlgebra M(L, Matrix::identity(4));
  StandardDecomposition dec;
  for (int i = 0; i < 3; ++i) dec.nilradical_part.push_back(basis_vector(4, i));
  dec.abelian_part.push_back(basis_vector(4, 3));
  CHECK_THROWS_WITH_AS(extract_reduction(M, dec, basis_vector(4, 2)),
                       "the rank-one Sasaki conditions fail, so there is nothing to reduce",
                       Error);
}

TEST_CASE("symmetrizing the derivation") {
  SUBCASE("drops a commuting antisymmetric part") {
    KahlerSeed s = negative_plane_seed();
    s.D = Matrix::identity(2) + rot2();
    KahlerSeed out = symmetrize_D(s);
    CHECK(out.D == Matrix::identity(2));
    CHECK(out.g == s.g);
    CHECK(out.J == s.J);
    CHECK(out.omega == s.omega);
    CHECK(out.h == s.h);
    CHECK(out.tau == s.tau);
    CHECK(symmetrize_D(out) == out);
  }
  SUBCASE("nilpotent family keeps its symmetric part") {
    const CatalogEntry& e = find_entry("table1.9");
    KahlerSeed out = symmetrize_D(entry_seed(e, 1, 1, 1));
    CHECK(out.D == e.D0);
  }
  SUBCASE("the non-symmetrizable families throw") {
    for (const char* id : {"table1.10", "table1.11"}) {
      CAPTURE(id);
      KahlerSeed s = entry_seed(find_entry(id), 1, 1, 0);
      CHECK_THROWS_WITH_AS(symmetrize_D(s),
                           "the symmetric and antisymmetric parts of D do not commute",
                           CommutatorNonzero);
    }
  }
}

TEST_CASE("normalizing h") {
  SUBCASE("rescales positive h to 2") {
    KahlerSeed s = plane_seed({1, 1}, Scalar(2) * Matrix::identity(2), 4, 1);
    KahlerSeed out = h_normalize(s);
    CHECK(out.h == 2);
    CHECK(out.D == Matrix::identity(2));
  }
  SUBCASE("flips negative h first") {
    KahlerSeed s = plane_seed({1, 1}, -Matrix::identity(2), -2, 1);
    KahlerSeed out = h_normalize(s);
    CHECK(out.h == 2);
    CHECK(out.D == Matrix::identity(2));
  }
  SUBCASE("fractional h") {
    KahlerSeed s = plane_seed({1, 1}, Scalar(3, 2) * Matrix::identity(2), 3, -1);
    KahlerSeed out = h_normalize(s);
    CHECK(out.h == 2);
    CHECK(out.D == Matrix::identity(2));
  }
  SUBCASE("h = 0 is a fixed point") {
    KahlerSeed s = plane_seed({1, 1}, Matrix(2, 2), 0, 1);
    CHECK(h_normalize(s) == s);
  }
  SUBCASE("idempotent") {
    KahlerSeed out = h_normalize(plane_seed({1, 1}, Scalar(2) * Matrix::identity(2), 4, 1));
    CHECK(h_normalize(out) == out);
  }
}

TEST_CASE("reversing the metric sign of a seed") {
  KahlerSeed s = negative_plane_seed();
  KahlerSeed r = reverse_metric_sign(s);
  CHECK(r.g.metric() == Matrix::identity(2));
  CHECK(r.omega == -s.omega);
  CHECK(r.J == s.J);
  CHECK(r.D == s.D);
  CHECK(r.h == s.h);
  CHECK(r.tau == s.tau);
  CHECK(reverse_metric_sign(r) == s);
  CHECK(check_sasaki(construct_sasaki(r).contact).verdict);
}

TEST_CASE("graded construction") {
  GradedData data{MetricLieAlgebra(LieAlgebra(2), Matrix::identity(2)),
                  rot2(),
                  Form::two_form(rot2()),
                  Matrix::identity(2),
                  rot2(),
                  Form::two_form(rot2()),
                  {Matrix(2, 2), Matrix(2, 2)},
                  2,
                  1};

  SUBCASE("trivial action agrees with the direct block seed") {
    ConstructResult graded = graded_construct(data);
    KahlerSeed block = plane_seed({1, 1, 1, 1}, Matrix::diagonal({0, 0, 1, 1}), 2, 1);
    ConstructResult direct = construct_sasaki(block);
    CHECK(graded.M == direct.M);
    CHECK(graded.contact.phi == direct.contact.phi);
    CHECK(graded.b == direct.b);
    CHECK(graded.xi == direct.xi);
    CHECK(check_sasaki(graded.contact).verdict);
  }
  SUBCASE("one matrix per basis vector") {
    data.rho = {Matrix(2, 2)};
    CHECK_THROWS_WITH_AS(graded_construct(data), "rho must provide one matrix per basis vector",
                         RepresentationConditionViolated);
  }
  SUBCASE("matrices must act on the abelian factor") {
    data.rho = {Matrix(3, 3), Matrix(2, 2)};
    CHECK_THROWS_WITH_AS(graded_construct(data), "each rho matrix must act on the abelian factor",
                         RepresentationConditionViolated);
  }
  SUBCASE("the action must represent the bracket") {
    Matrix a(2, 2), b(2, 2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    data.rho = {a, b};
    CHECK_THROWS_WITH_AS(graded_construct(data), "rho does not respect the bracket",
                         RepresentationConditionViolated);
  }
  SUBCASE("the action must be symplectic") {
    data.rho = {Matrix::diagonal({1, 0}), Matrix(2, 2)};
    CHECK_THROWS_WITH_AS(graded_construct(data),
                         "rho must annihilate the abelian symplectic form",
                         RepresentationConditionViolated);
  }
  SUBCASE("the action must be complex linear") {
    data.rho = {Matrix::diagonal({1, -1}), Matrix(2, 2)};
    CHECK_THROWS_WITH_AS(graded_construct(data),
                         "rho must commute with the abelian complex structure",
                         RepresentationConditionViolated);
  }
}

TEST_CASE("reduction of a pseudo-Kahler extension") {
  SUBCASE("solvable rank-one input reproduces the plane seed") {
    // dim-4 pseudo-Kahler partner of the five-dimensional structure:
    // [g1,g2] = -2b, [e0,gi] = gi, [e0,b] = 2b, metric -id
    LieAlgebra L(4);
    L.set_bracket(0, 1, {0, 0, -2, 0});
    L.set_bracket(0, 3, {-1, 0, 0, 0});
    L.set_bracket(1, 3, {0, -1, 0, 0});
    L.set_bracket(2, 3, {0, 0, -2, 0});
    MetricLieAlgebra K(L, Scalar(-1) * Matrix::identity(4));
    Matrix J = rot4();
    StandardDecomposition dec;
    for (int i = 0; i < 3; ++i) dec.nilradical_part.push_back(basis_vector(4, i));
    dec.abelian_part.push_back(basis_vector(4, 3));

    KahlerExtensionResult res = reduce_kahler_extension(K, J, dec);
    CHECK(res.zeta == basis_vector(5, 4));
    CHECK(res.extension.metric() == Matrix::diagonal({-1, -1, -1, -1, 1}));
    CHECK(res.extension.algebra().bracket(0, 1) == Vector{0, 0, -2, 0, -2});
    CHECK(res.report.seed == negative_plane_seed());
    CHECK(res.report.h == 2);
    CHECK(res.report.tau == -1);
    CHECK(res.report.b == basis_vector(5, 2));
    CHECK(check_sasaki(res.report.sasaki_quotient).verdict);
  }
  SUBCASE("abelian input gives the h = 0 seed") {
    MetricLieAlgebra K(LieAlgebra(4), Matrix::identity(4));
    StandardDecomposition dec;
    for (int i = 0; i < 3; ++i) dec.nilradical_part.push_back(basis_vector(4, i));
    dec.abelian_part.push_back(basis_vector(4, 3));
    KahlerExtensionResult res = reduce_kahler_extension(K, rot4(), dec);
    CHECK(res.report.seed == plane_seed({1, 1}, Matrix(2, 2), 0, 1));
    CHECK(res.report.h == 0);
    CHECK(res.report.tau == 1);
  }
  SUBCASE("rejects input that is not pseudo-Kahler") {
    MetricLieAlgebra K(LieAlgebra(4), Matrix::identity(4));
    StandardDecomposition dec;
    for (int i = 0; i < 3; ++i) dec.nilradical_part.push_back(basis_vector(4, i));
    dec.abelian_part.push_back(basis_vector(4, 3));
    CHECK_THROWS_WITH_AS(reduce_kahler_extension(K, Scalar(2) * rot4(), dec),
                         "the input is not pseudo-Kahler: J^2=-id", Error);
  }
}
