#pragma once
#include <optional>
#include <string>
#include <vector>

#include "sasaki/json_io.hpp"

namespace sasaki {

// one verified structure; the two explicit five-dimensional examples carry
// ambient data, the family entries carry the seed that generates them
struct CatalogEntry {
  std::string id;
  std::string description;
  std::string salamon;  // may contain the symbols tau and lambda
  std::vector<std::string> rejected_variants;
  bool uses_lambda = false;
  bool is_example = false;
  bool printed_dec_standard = true;
  std::optional<Scalar> einstein_constant;

  // seed template: base algebra is abelian, metric sign·diag(base_signs),
  // derivation D0 + lambda·D1, complex structure metric⁻¹·omega
  int ghat_dim = 0;
  std::vector<Scalar> base_signs;
  Matrix omega_mat;
  Matrix D0, D1;
  Scalar h = 0;
  Scalar fixed_tau = 0;  // nonzero for examples; 0 = ranges over ±1

  // explicit ambient data (examples only)
  std::vector<Scalar> metric_diag;
  Matrix phi;
  int xi_index = -1;
  std::vector<int> ideal_indices, abelian_indices;

  int dim() const { return is_example ? static_cast<int>(metric_diag.size()) : ghat_dim + 3; }
};

enum class CheckValue { pass, fail, not_applicable };

struct CatalogCheck {
  std::string name;
  CheckValue value = CheckValue::not_applicable;
};

struct CatalogReport {
  std::string entry_id;
  std::string variant;  // "sign=1,tau=1" plus ",lambda=…" when applicable
  std::vector<CatalogCheck> checks;
  std::vector<std::string> findings;
  bool all_pass() const;
};

struct CatalogRun {
  std::vector<CatalogReport> reports;
  std::vector<std::string> findings;
  bool ok = false;
};

const std::vector<CatalogEntry>& catalog();
std::vector<Scalar> default_lambda_samples();

// '*' and '?' wildcards, anchored at both ends
bool glob_match(const std::string& pattern, const std::string& text);

// assemble the generating seed of a family entry (or the expected reduction
// seed of an example) at a concrete metric sign, tau and lambda
KahlerSeed entry_seed(const CatalogEntry& e, const Scalar& sign, const Scalar& tau,
                      const Scalar& lambda);

CatalogReport verify_entry_variant(const CatalogEntry& e, const Scalar& sign, const Scalar& tau,
                                   const Scalar& lambda);

CatalogRun verify_all(const std::string& filter = "*",
                      const std::vector<Scalar>& lambda_samples = default_lambda_samples());

Json catalog_run_to_json(const CatalogRun& run);
std::string catalog_run_to_text(const CatalogRun& run, double wall_seconds);

}  // namespace sasaki
