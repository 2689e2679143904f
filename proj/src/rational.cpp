#include "sasaki/rational.hpp"

#include "sasaki/errors.hpp"

#include <cctype>

namespace sasaki {

int sign(const Scalar& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

std::string scalar_to_fraction(const Scalar& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string scalar_to_string(const Scalar& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("empty integer", 0);
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad digit in number '" + text + "'", i);
    value = value * 10 + (text[i] - '0');
  }
  return neg ? Integer(-value) : value;
}

}  // namespace

Scalar scalar_from_string(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos) throw ParseError("empty scalar", 0);
  std::string body = text.substr(a, b - a + 1);
  std::size_t slash = body.find('/');
  if (slash == std::string::npos) return Scalar(parse_integer(body));
  Integer num = parse_integer(body.substr(0, slash));
  Integer den = parse_integer(body.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + body + "'", slash + 1);
  return Scalar(num, den);
}

}  // namespace sasaki
