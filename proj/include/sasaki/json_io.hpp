#pragma once
#include <optional>
#include <string>

#include "json.hpp"
#include "sasaki/contact.hpp"
#include "sasaki/reduction.hpp"

namespace sasaki {

using Json = nlohmann::ordered_json;

// scalars travel as "num/den" strings; parsing also accepts plain integers,
// integer strings, and JSON numbers that happen to be integral
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// {"dim": n, "brackets": [[i,j,k,"num/den"],...], "metric": [[...]],
//  "xi": [...], "phi": [[...]], "decomposition": {...}} with 1-based indices
struct AlgebraFile {
  MetricLieAlgebra M;
  std::optional<Vector> xi;
  std::optional<Matrix> phi;
  std::optional<StandardDecomposition> dec;
};

AlgebraFile algebra_from_json(const Json& j);
Json algebra_to_json(const MetricLieAlgebra& M, const Vector* xi = nullptr,
                     const Matrix* phi = nullptr, const StandardDecomposition* dec = nullptr);

KahlerSeed seed_from_json(const Json& j);
Json seed_to_json(const KahlerSeed& seed);

Json sasaki_report_to_json(const SasakiReport& r);

}  // namespace sasaki
