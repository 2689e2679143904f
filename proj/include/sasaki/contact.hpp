#pragma once
#include "sasaki/metric.hpp"

#include <array>
#include <string>

namespace sasaki {

struct AlmostContactData {
  MetricLieAlgebra M;
  Matrix phi;
  Vector xi;
  Form eta;  // g(xi, ·)
};

// eta is derived from xi; throws XiNotUnit unless g(xi,xi) = 1
AlmostContactData make_almost_contact(MetricLieAlgebra M, Matrix phi, Vector xi);

struct AcmsReport {
  bool ok = false;
  std::string first_failing;  // empty when ok
};

// almost contact metric structure invariants
AcmsReport check_acms(const AlmostContactData& A);

// Phi(x,y) = g(x, phi y)
Form fundamental_form(const AlmostContactData& A);

// component 2-forms of N_phi(x,y) = phi^2[x,y] + [phi x, phi y] - phi[phi x, y] - phi[x, phi y]
std::vector<Form> nijenhuis(const AlmostContactData& A);

bool check_normal(const AlmostContactData& A);
bool check_contact(const AlmostContactData& A);

struct SasakiReport {
  bool is_acms = false;
  std::string acms_failure;
  bool normal = false;
  bool contact = false;
  bool nabla_phi_identity = false;  // (nabla_x phi) y = g(x,y) xi - eta(y) x
  // consequences, in order:
  //   nabla_x xi = -phi x;  xi is Killing;  d eta = 2 Phi;
  //   R(x,y) xi = eta(y) x - eta(x) y;  ric(xi,·) = (dim-1) eta
  std::array<bool, 5> consequences{};
  bool routes_agree = false;
  bool verdict = false;
};

SasakiReport check_sasaki(const AlmostContactData& A);

// deformation g -> a g + (a^2 - a) eta (x) eta, xi -> xi / a, phi fixed; needs a > 0
AlmostContactData d_homothety(const AlmostContactData& A, const Scalar& a);

// g -> -g + 2 eta (x) eta, xi -> -xi, phi fixed; Sasaki-preserving involution
AlmostContactData reverse_metric_sign(const AlmostContactData& A);

}  // namespace sasaki
