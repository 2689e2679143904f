#include "doctest.h"
#include "test_support.hpp"

#include "sasaki/json_io.hpp"

using namespace sasaki;

TEST_CASE("scalars emit strict fractions and parse leniently") {
  CHECK(scalar_to_json(Scalar(3) / 4) == Json("3/4"));
  CHECK(scalar_to_json(Scalar(2)) == Json("2/1"));
  CHECK(scalar_to_json(Scalar(-1) / 2) == Json("-1/2"));

  CHECK(scalar_from_json(Json("3/4")) == Scalar(3) / 4);
  CHECK(scalar_from_json(Json("-7")) == -7);
  CHECK(scalar_from_json(Json(5)) == 5);
  CHECK(scalar_from_json(Json(2.0)) == 2);
  CHECK_THROWS_AS((void)scalar_from_json(Json(0.5)), Error);
  CHECK_THROWS_AS((void)scalar_from_json(Json::object()), Error);
  CHECK_THROWS_AS((void)scalar_from_json(Json("1/0")), Error);
}

TEST_CASE("vectors and matrices roundtrip") {
  Vector v{Scalar(1) / 3, -2, 0};
  CHECK(vector_from_json(vector_to_json(v)) == v);
  std::mt19937 gen(5);
  Matrix m = support::rand_matrix(gen, 3, 4);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS((void)matrix_from_json(Json::parse("[[\"1\"],[\"1\",\"2\"]]")), Error);
  CHECK_THROWS_AS((void)vector_from_json(Json("1")), Error);
}

TEST_CASE("bracket tables use one-based indices and antisymmetry") {
  Json j = Json::parse(R"({"dim": 3, "brackets": [[2,1,3,"1"]],
                           "metric": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  AlgebraFile f = algebra_from_json(j);
  CHECK(f.M.algebra().bracket(0, 1) == Vector{0, 0, -1});  // [e2,e1] = e3 folded
  CHECK_FALSE(f.xi.has_value());
  CHECK_FALSE(f.phi.has_value());
  CHECK_FALSE(f.dec.has_value());

  // repeated entries accumulate
  Json j2 = j;
  j2["brackets"] = Json::parse(R"([[1,2,3,"1"],[1,2,3,2]])");
  CHECK(algebra_from_json(j2).M.algebra().bracket(0, 1) == Vector{0, 0, 3});

  j2["brackets"] = Json::parse(R"([[1,1,3,"1"]])");
  CHECK_THROWS_AS((void)algebra_from_json(j2), Error);
  j2["brackets"] = Json::parse(R"([[1,4,3,"1"]])");
  CHECK_THROWS_AS((void)algebra_from_json(j2), IndexOutOfRange);
}

TEST_CASE("algebra files roundtrip with optional structure fields") {
  auto s = support::ex43();
  std::vector<Vector> ideal{basis_vector(5, 1), basis_vector(5, 2), basis_vector(5, 3),
                            basis_vector(5, 4)};
  StandardDecomposition dec{ideal, {basis_vector(5, 0)}};
  Json j = algebra_to_json(s.M, &s.xi, &s.phi, &dec);
  CHECK(j.at("dim") == 5);

  AlgebraFile f = algebra_from_json(j);
  CHECK(f.M == s.M);
  REQUIRE(f.xi.has_value());
  CHECK(*f.xi == s.xi);
  REQUIRE(f.phi.has_value());
  CHECK(*f.phi == s.phi);
  REQUIRE(f.dec.has_value());
  CHECK(f.dec->nilradical_part == ideal);
  CHECK(f.dec->abelian_part == dec.abelian_part);

  // emitting again is stable
  CHECK(algebra_to_json(f.M, &*f.xi, &*f.phi, &*f.dec) == j);
}

TEST_CASE("decomposition subspaces accept index lists") {
  Json j = Json::parse(R"({"dim": 3,
                           "brackets": [[1,2,3,"1"]],
                           "metric": [["1","0","0"],["0","1","0"],["0","0","1"]],
                           "decomposition": {"ideal": [2,3], "abelian": [1]}})");
  AlgebraFile f = algebra_from_json(j);
  REQUIRE(f.dec.has_value());
  CHECK(f.dec->nilradical_part == std::vector<Vector>{basis_vector(3, 1), basis_vector(3, 2)});
  CHECK(f.dec->abelian_part == std::vector<Vector>{basis_vector(3, 0)});
}

TEST_CASE("malformed algebra files are rejected") {
  Json good = Json::parse(R"({"dim": 2, "brackets": [],
                              "metric": [["1","0"],["0","1"]]})");
  CHECK(algebra_from_json(good).M.dim() == 2);

  Json j = good;
  j.erase("dim");
  CHECK_THROWS_AS((void)algebra_from_json(j), Error);

  j = good;
  j["dim"] = 40;
  CHECK_THROWS_AS((void)algebra_from_json(j), Error);

  j = good;
  j.erase("metric");
  CHECK_THROWS_AS((void)algebra_from_json(j), Error);

  j = good;
  j["metric"] = Json::parse(R"([["1","2"],["0","1"]])");
  CHECK_THROWS_AS((void)algebra_from_json(j), NotSymmetric);

  j = good;
  j["metric"] = Json::parse(R"([["1","0"],["0","0"]])");
  CHECK_THROWS_AS((void)algebra_from_json(j), DegenerateMetric);

  j = good;
  j["xi"] = Json::parse(R"(["1"])");
  CHECK_THROWS_AS((void)algebra_from_json(j), Error);

  j = good;
  j["phi"] = Json::parse(R"([["1","0"],["0","1"],["0","0"]])");
  CHECK_THROWS_AS((void)algebra_from_json(j), Error);
}

TEST_CASE("seeds roundtrip bit-exactly") {
  Matrix g2 = Matrix::diagonal({1, 1});
  Matrix omega(2, 2);
  omega(0, 1) = -1;
  omega(1, 0) = 1;
  Matrix J(2, 2);
  J(0, 1) = 1;
  J(1, 0) = -1;
  KahlerSeed seed{MetricLieAlgebra(LieAlgebra(2), g2), J, Form::two_form(omega),
                  Matrix::identity(2), Scalar(2), Scalar(1)};
  Json j = seed_to_json(seed);
  KahlerSeed back = seed_from_json(j);
  CHECK(back == seed);
  CHECK(seed_to_json(back) == j);

  Json bad = j;
  bad["omega"] = Json::parse(R"([["0","1"],["1","0"]])");
  CHECK_THROWS_AS((void)seed_from_json(bad), Error);
  bad = j;
  bad.erase("D");
  CHECK_THROWS_AS((void)seed_from_json(bad), Error);
}

TEST_CASE("verification reports serialize with a schema tag") {
  auto s = support::ex43();
  SasakiReport rep = check_sasaki(make_almost_contact(s.M, s.phi, s.xi));
  Json j = sasaki_report_to_json(rep);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("almost_contact_metric") == true);
  CHECK(j.at("normal") == true);
  CHECK(j.at("contact") == true);
  CHECK(j.at("nabla_phi_identity") == true);
  CHECK(j.at("consequences").size() == 5);
  CHECK(j.at("routes_agree") == true);
  CHECK(j.at("sasaki") == true);
  CHECK_FALSE(j.contains("first_failing"));
}
