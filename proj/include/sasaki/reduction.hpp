#pragma once
#include "sasaki/standard.hpp"

namespace sasaki {

// pseudo-Kähler data on a nilpotent metric Lie algebra together with the
// derivation and constants that drive the three-dimensional extension
struct KahlerSeed {
  MetricLieAlgebra g;
  Matrix J;
  Form omega;
  Matrix D;
  Scalar h;
  Scalar tau;

  bool operator==(const KahlerSeed&) const = default;
};

struct KahlerReport {
  bool ok = true;
  std::string failing_clause;  // "J^2=-id", "g(J,J)=g", "omega=g(,J)", "domega=0", "N_J=0"
};

KahlerReport kahler_check(const MetricLieAlgebra& g, const Matrix& J, const Form& omega);

// all seed invariants; throws SeedInvariantViolated naming the failed clause
void validate_seed(const KahlerSeed& seed);

// [D^s, D^a] = h D^s - 2 (D^s)^2
bool quadratic_identity(const MetricLieAlgebra& g, const Matrix& D, const Scalar& h);

struct ConstructResult {
  MetricLieAlgebra M;
  AlmostContactData contact;
  StandardDecomposition dec;
  Vector b, xi, e0;
};

// the (n+3)-dimensional extension with basis (seed basis…, b, xi, e0)
ConstructResult construct_sasaki(const KahlerSeed& seed);

struct ReductionReport {
  std::vector<Vector> g_basis;  // basis of <b,xi>-perp inside the ideal, ambient coordinates
  Vector b, xi;                 // ambient coordinates
  Scalar h;
  Scalar tau;
  KahlerSeed seed;
  std::vector<Vector> quotient_basis;  // basis of <b>-perp inside the ideal, ambient
  AlmostContactData sasaki_quotient;   // structure on the quotient by <b>
};

// inverse of construct_sasaki on z-standard input;
// throws NotZStandard, BlockFormViolation, SeedInvariantViolated
ReductionReport extract_reduction(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                                  const Vector& xi);

// replaces D by its metric-symmetric part; requires D^s a derivation and
// [D^s, D^a] = 0, and re-verifies the move through the isometrize hypotheses
KahlerSeed symmetrize_D(const KahlerSeed& seed);

// flips the sign of (D, h) when h < 0, then rescales so h ∈ {0, 2}
KahlerSeed h_normalize(const KahlerSeed& seed);

// (g, omega) -> (-g, -omega); J, D, h, tau unchanged
KahlerSeed reverse_metric_sign(const KahlerSeed& seed);

// semidirect input for the graded extension: a pseudo-Kähler factor acting on
// an abelian pseudo-Kähler factor through rho (one matrix per g0 basis vector)
struct GradedData {
  MetricLieAlgebra g0;
  Matrix J0;
  Form omega0;
  Matrix g1_metric;
  Matrix J1;
  Form omega1;
  std::vector<Matrix> rho;
  Scalar h;
  Scalar tau;
};

// builds g0 ⋉ g1 with D = (h/2)·(projection onto g1) and delegates to
// construct_sasaki; throws RepresentationConditionViolated
ConstructResult graded_construct(const GradedData& data);

struct KahlerExtensionResult {
  MetricLieAlgebra extension;  // central extension, basis (input basis…, zeta)
  StandardDecomposition dec;
  Vector zeta;
  ReductionReport report;
};

// central extension of a pseudo-Kähler rank-one algebra by twice its
// fundamental form, reduced back through extract_reduction; requires
// b = -J e0 central in the ideal
KahlerExtensionResult reduce_kahler_extension(const MetricLieAlgebra& K, const Matrix& J,
                                              const StandardDecomposition& dec);

}  // namespace sasaki
