#include "sasaki/salamon.hpp"

#include "sasaki/errors.hpp"

#include <cctype>

namespace sasaki {

namespace {

// hand-rolled scanner; the only multi-byte tokens are the unicode minus
// sign and the greek symbol names
class Scanner {
 public:
  explicit Scanner(const std::string& text) : s_(text) {}

  std::size_t pos() const { return pos_; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_literal(const std::string& lit) {
    skip_ws();
    if (s_.compare(pos_, lit.size(), lit) == 0) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!eat(c)) throw ParseError("expected '" + std::string(1, c) + "' " + what, pos_);
  }

  // '+' → +1, '-' or U+2212 → -1, absent → 0
  int eat_sign() {
    skip_ws();
    if (eat('+')) return 1;
    if (eat('-')) return -1;
    if (eat_literal("\xe2\x88\x92")) return -1;
    return 0;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer eat_integer() {
    skip_ws();
    if (!peek_digit()) throw ParseError("expected a digit", pos_);
    Integer v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  Scalar eat_rational() {
    Integer num = eat_integer();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      Integer den = eat_integer();
      if (den == 0) throw ParseError("zero denominator", pos_);
      return Scalar(num) / Scalar(den);
    }
    return Scalar(num);
  }

  // returns canonical symbol name or "" if the next token is not a symbol
  std::string eat_symbol() {
    skip_ws();
    if (eat_literal("\xcf\x84") || eat_literal("tau")) return "tau";
    if (eat_literal("\xce\xbb") || eat_literal("lambda")) return "lambda";
    if (pos_ < s_.size() && s_[pos_] == 'h') {
      ++pos_;
      return "h";
    }
    return "";
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

Scalar lookup(const SymbolBindings& bindings, const std::string& name, std::size_t pos) {
  auto it = bindings.find(name);
  if (it == bindings.end()) {
    // accept the greek spellings as binding keys too
    const char* alias = name == "tau" ? "\xcf\x84" : name == "lambda" ? "\xce\xbb" : nullptr;
    if (alias != nullptr) it = bindings.find(alias);
  }
  if (it == bindings.end()) throw UnboundSymbol("unbound symbol '" + name + "' at position " + std::to_string(pos));
  return it->second;
}

struct RawTerm {
  Scalar coeff;
  int i = 0, j = 0;  // 0-based, i < j
};

// term := sign? factor* 'e' '^' '{' digit digit '}'   (factors multiply)
RawTerm parse_term(Scanner& sc, const SymbolBindings& bindings, int leading_sign) {
  RawTerm t;
  t.coeff = leading_sign == 0 ? Scalar(1) : Scalar(leading_sign);
  for (;;) {
    if (sc.peek_digit()) {
      t.coeff *= sc.eat_rational();
      continue;
    }
    std::size_t at = sc.pos();
    std::string sym = sc.eat_symbol();
    if (!sym.empty()) {
      t.coeff *= lookup(bindings, sym, at);
      continue;
    }
    break;
  }
  sc.expect('e', "to start a basis 2-form");
  sc.expect('^', "after 'e'");
  sc.expect('{', "before the index pair");
  std::size_t at = sc.pos();
  Integer a = sc.eat_integer();
  if (a < 1 || a > 99) throw ParseError("bad index", at);
  int ab = static_cast<int>(a);
  int i, j;
  if (ab >= 10) {
    i = ab / 10;
    j = ab % 10;
  } else {
    i = ab;
    std::size_t at2 = sc.pos();
    Integer b = sc.eat_integer();
    if (b < 1 || b > 9) throw ParseError("bad index", at2);
    j = static_cast<int>(b);
  }
  if (i >= j) throw ParseError("indices must be strictly increasing", at);
  sc.expect('}', "after the index pair");
  t.i = i - 1;
  t.j = j - 1;
  return t;
}

}  // namespace

SalamonExpr parse_salamon_forms(const std::string& text, const SymbolBindings& bindings) {
  Scanner sc(text);
  bool parens = sc.eat('(');
  std::vector<std::vector<RawTerm>> entries;
  for (;;) {
    std::vector<RawTerm> terms;
    // zero entry: a bare "0" followed by a separator
    if (sc.peek() == '0') {
      std::size_t at = sc.pos();
      sc.eat('0');
      char c = sc.peek();
      if (c != ',' && c != ')' && c != '\0')
        throw ParseError("unexpected text after '0' entry", at);
    } else {
      int sign = sc.eat_sign();
      terms.push_back(parse_term(sc, bindings, sign));
      for (;;) {
        int s = sc.eat_sign();
        if (s == 0) break;
        terms.push_back(parse_term(sc, bindings, s));
      }
    }
    entries.push_back(std::move(terms));
    if (sc.eat(',')) continue;
    break;
  }
  if (parens) sc.expect(')', "to close the tuple");
  if (!sc.at_end()) throw ParseError("trailing text after tuple", sc.pos());

  int n = static_cast<int>(entries.size());
  if (n < 1 || n > max_dim) throw ParseError("unsupported dimension", 0);
  SalamonExpr expr;
  expr.dim = n;
  expr.d.assign(n, Form(n, 2));
  for (int k = 0; k < n; ++k) {
    for (const RawTerm& t : entries[k]) {
      if (t.i >= n || t.j >= n)
        throw IndexOutOfRange("index " + std::to_string(t.j + 1) + " exceeds dimension " + std::to_string(n));
      expr.d[k].coeff({t.i, t.j}) += t.coeff;
    }
  }
  return expr;
}

LieAlgebra lie_from_forms(const SalamonExpr& e) {
  LieAlgebra L(e.dim);
  for (int i = 0; i < e.dim; ++i)
    for (int j = i + 1; j < e.dim; ++j) {
      Vector v = zero_vector(e.dim);
      for (int k = 0; k < e.dim; ++k) v[k] = -e.d[k].value({i, j});
      L.set_bracket(i, j, v);
    }
  return L;
}

SalamonExpr forms_from_lie(const LieAlgebra& L) {
  int n = L.dim();
  SalamonExpr expr;
  expr.dim = n;
  expr.d.assign(n, Form(n, 2));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) expr.d[k].coeff({i, j}) = -L.c(i, j, k);
  return expr;
}

std::string print_salamon(const SalamonExpr& e) {
  std::string out = "(";
  for (int k = 0; k < e.dim; ++k) {
    if (k > 0) out += ',';
    if (e.d[k].is_zero()) {
      out += '0';
      continue;
    }
    bool first = true;
    for (int i = 0; i < e.dim; ++i)
      for (int j = i + 1; j < e.dim; ++j) {
        Scalar q = e.d[k].coeff({i, j});
        if (q == 0) continue;
        if (sign(q) < 0) {
          out += '-';
        } else if (!first) {
          out += '+';
        }
        Scalar mag = sign(q) < 0 ? Scalar(-q) : q;
        if (mag != 1) out += scalar_to_string(mag);
        out += "e^{" + std::to_string(i + 1) + std::to_string(j + 1) + "}";
        first = false;
      }
  }
  out += ')';
  return out;
}

LieAlgebra parse_salamon(const std::string& text, const SymbolBindings& bindings) {
  return lie_from_forms(parse_salamon_forms(text, bindings));
}

std::string print_salamon(const LieAlgebra& L) { return print_salamon(forms_from_lie(L)); }

}  // namespace sasaki
