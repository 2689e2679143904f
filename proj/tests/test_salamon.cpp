#include "doctest.h"
#include "test_support.hpp"

#include "sasaki/salamon.hpp"

using namespace sasaki;

TEST_CASE("basic tuples parse into structure constants") {
  LieAlgebra h = parse_salamon("(0,0,e^{12})");
  CHECK(h.dim() == 3);
  CHECK(h.bracket(0, 1) == Vector{0, 0, -1});  // de^3 = e^{12} means [e1,e2] = -e3

  LieAlgebra a = parse_salamon("(0,0,0,0)");
  CHECK(a == LieAlgebra(4));

  CHECK(parse_salamon("(0)") == LieAlgebra(1));
  // parentheses are optional
  CHECK(parse_salamon("0,0,e^{12}") == h);
}

TEST_CASE("coefficients, fractions and signs") {
  LieAlgebra L = parse_salamon("(0,0,2e^{12}-1/2e^{13}+e^{23})");
  CHECK(L.c(0, 1, 2) == -2);
  CHECK(L.c(0, 2, 2) == Scalar(1) / 2);
  CHECK(L.c(1, 2, 2) == -1);
  // unicode minus sign
  CHECK(parse_salamon("(0,0,\xe2\x88\x92""e^{12})").c(0, 1, 2) == 1);
  // repeated terms accumulate
  CHECK(parse_salamon("(0,0,e^{12}+e^{12})").c(0, 1, 2) == -2);
  // whitespace is free
  CHECK(parse_salamon("( 0 , 0 , 3 e^{ 1 2 } )").c(0, 1, 2) == -3);
}

TEST_CASE("symbols resolve through bindings in both spellings") {
  SymbolBindings ascii{{"tau", Scalar(-1)}, {"lambda", Scalar(1) / 2}};
  LieAlgebra L = parse_salamon("(0,0,2taue^{12}+lambdae^{13})", ascii);
  CHECK(L.c(0, 1, 2) == 2);
  CHECK(L.c(0, 2, 2) == Scalar(-1) / 2);

  // greek text with ascii keys, and the other way around
  CHECK(parse_salamon("(0,0,\xcf\x84""e^{12})", ascii).c(0, 1, 2) == 1);
  SymbolBindings greek{{"\xcf\x84", Scalar(3)}, {"\xce\xbb", Scalar(5)}};
  CHECK(parse_salamon("(0,0,taue^{12})", greek).c(0, 1, 2) == -3);
  CHECK(parse_salamon("(0,0,\xce\xbb""e^{12})", greek).c(0, 1, 2) == -5);
  CHECK(parse_salamon("(0,0,he^{12})", {{"h", Scalar(2)}}).c(0, 1, 2) == -2);
  // product of several factors
  CHECK(parse_salamon("(0,0,2tautaue^{12})", ascii).c(0, 1, 2) == -2);
}

TEST_CASE("parse failures carry a byte position") {
  CHECK_THROWS_AS((void)parse_salamon("(0,0,e^{12)"), ParseError);
  CHECK_THROWS_AS((void)parse_salamon("(0,0,e^{21})"), ParseError);   // decreasing pair
  CHECK_THROWS_AS((void)parse_salamon("(0,0,1/0e^{12})"), ParseError);  // zero denominator
  CHECK_THROWS_AS((void)parse_salamon("(0,0,e^{12}) extra"), ParseError);
  CHECK_THROWS_AS((void)parse_salamon("(0q,0,e^{12})"), ParseError);
  CHECK_THROWS_AS((void)parse_salamon(""), ParseError);
  CHECK_THROWS_AS((void)parse_salamon("(0,0,e^{14})"), IndexOutOfRange);  // index beyond dim

  try {
    (void)parse_salamon("(0,0,e^{12");
  } catch (const ParseError& e) {
    CHECK(e.position == 10);
    CHECK(std::string(e.what()).find("position 10") != std::string::npos);
  }

  try {
    (void)parse_salamon("(0,0,taue^{12})");
    FAIL("expected UnboundSymbol");
  } catch (const UnboundSymbol& e) {
    CHECK(std::string(e.what()).find("tau") != std::string::npos);
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("printing is canonical and parsing it back is the identity") {
  auto roundtrip = [](const std::string& s, const SymbolBindings& b = {}) {
    LieAlgebra L = parse_salamon(s, b);
    std::string printed = print_salamon(L);
    CHECK(parse_salamon(printed) == L);
    CHECK(print_salamon(parse_salamon(printed)) == printed);  // fixed point
    return printed;
  };
  CHECK(roundtrip("(0,0,e^{12})") == "(0,0,e^{12})");
  CHECK(roundtrip("(0,0,+1e^{12})") == "(0,0,e^{12})");
  CHECK(roundtrip("(0,0,e^{13}+e^{12})") == "(0,0,e^{12}+e^{13})");  // term order normalized
  CHECK(roundtrip("(0,0,2/4e^{12})") == "(0,0,1/2e^{12})");
  CHECK(roundtrip("(0,0,e^{12}-e^{12})") == "(0,0,0)");
  CHECK(roundtrip("(0,0,-e^{12}-3e^{13})") == "(0,0,-e^{12}-3e^{13})");
  CHECK(roundtrip("(0,0,taue^{12})", {{"tau", Scalar(-1)}}) == "(0,0,-e^{12})");

  // the five-dimensional reference structure prints with sorted index pairs
  std::string printed = print_salamon(support::ex43().M.algebra());
  CHECK(printed ==
        "(0,-2e^{12}-2e^{34},-e^{13}+3e^{24}-3e^{45},-e^{14}-3e^{23}+3e^{35},2e^{12}+2e^{34})");
  CHECK(parse_salamon(printed) == support::ex43().M.algebra());
}

TEST_CASE("form tuples convert to brackets and back") {
  SalamonExpr e = parse_salamon_forms("(0,0,2e^{12},e^{13}-e^{23})");
  CHECK(e.dim == 4);
  CHECK(e.d[2].coeff({0, 1}) == 2);
  CHECK(forms_from_lie(lie_from_forms(e)) == e);

  std::mt19937 gen(53);
  LieAlgebra L = support::ex43().M.algebra();
  CHECK(lie_from_forms(forms_from_lie(L)) == L);

  // differential consistency: the tuple entry k is the two-form ce_d of e^k
  for (int k = 0; k < 5; ++k) {
    Form ek = Form::one_form(basis_vector(5, k));
    CHECK(forms_from_lie(L).d[k] == ce_d(L, ek));
  }
}
