#pragma once
#include "sasaki/form.hpp"

#include <map>
#include <string>

namespace sasaki {

// parse-time values for the symbols appearing in bracket strings;
// keys "tau"/"τ", "lambda"/"λ", "h"
using SymbolBindings = std::map<std::string, Scalar>;

// tuple (de^1, …, de^n) of 2-forms
struct SalamonExpr {
  int dim = 0;
  std::vector<Form> d;
  bool operator==(const SalamonExpr&) const = default;
};

SalamonExpr parse_salamon_forms(const std::string& text, const SymbolBindings& bindings = {});
LieAlgebra lie_from_forms(const SalamonExpr& e);
SalamonExpr forms_from_lie(const LieAlgebra& L);
std::string print_salamon(const SalamonExpr& e);

LieAlgebra parse_salamon(const std::string& text, const SymbolBindings& bindings = {});
std::string print_salamon(const LieAlgebra& L);

}  // namespace sasaki
