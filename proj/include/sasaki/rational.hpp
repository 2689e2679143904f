#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sasaki {

// Exact rational scalar: always reduced, positive denominator, arbitrary precision.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

int sign(const Scalar& q);

// strict "num/den" (den always printed, e.g. "2/1", "-1/2")
std::string scalar_to_fraction(const Scalar& q);
// short form: "num" when den = 1, else "num/den"
std::string scalar_to_string(const Scalar& q);
// accepts "n", "n/d", optional leading sign and surrounding blanks
Scalar scalar_from_string(const std::string& text);

}  // namespace sasaki
