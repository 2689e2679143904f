#pragma once
#include "sasaki/contact.hpp"

namespace sasaki {

// orthogonal splitting of a metric Lie algebra into a nilpotent ideal and an
// abelian complement, everything in ambient coordinates
struct StandardDecomposition {
  std::vector<Vector> nilradical_part;  // basis of the ideal g
  std::vector<Vector> abelian_part;     // basis of the complement a

  int rank() const { return static_cast<int>(abelian_part.size()); }
  // the distinguished complement generator in the rank-one case
  const Vector& e0() const;
};

// true iff the split is standard; require_standard names the violated clause
bool check_standard(const MetricLieAlgebra& M, const StandardDecomposition& dec);
void require_standard(const MetricLieAlgebra& M, const StandardDecomposition& dec);

// ad X metric-symmetric for every X in the complement
bool check_pseudo_iwasawa(const MetricLieAlgebra& M, const StandardDecomposition& dec);

// metric restricted to a subspace basis (throws DegenerateMetric if degenerate)
MetricLieAlgebra restrict_metric(const MetricLieAlgebra& M, const std::vector<Vector>& basis);

struct RankOneSasakiReport {
  bool xi_conditions = false;       // D xi = 0, (ad xi)^s = 0, (ad b)* xi = 0
  bool d_conditions = false;        // D^a acting on d eta vanishes, D^a b = -tau xi
  bool eta_wedge_condition = false; // eta ∧ x♭ identity for every basis x of g
  bool b_condition = false;        // (D^s x) ⌟ d eta + x ⌟ d b♭ + b ⌟ d x♭ + [x,b]♭ = 0
  bool metric_condition = false;   // assembled phi satisfies the almost contact metric identities
  bool sasaki_cross_check = false; // assembled structure passes check_sasaki
  bool ok = false;                 // the four condition groups plus the metric identity
  Scalar tau;
  Vector b;    // ambient coordinates
  Matrix phi;  // ambient
  Form eta;    // ambient one-form
};

// shared intermediates of the rank-one checks, in ideal-basis coordinates
struct RankOneData {
  MetricLieAlgebra ideal;  // algebra and metric restricted to the ideal
  Matrix D, Ds, Da;        // ad e0 on the ideal and its metric split
  Vector xi, b;            // coordinates in the ideal basis
  Scalar tau;
};
RankOneData rank_one_data(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                          const Vector& xi);

// decides whether (g~, g, e0, xi) carries the induced Sasaki structure;
// throws XiNotUnit, NotRankOne, and the standard-decomposition errors
RankOneSasakiReport check_rank_one_sasaki(const MetricLieAlgebra& M,
                                          const StandardDecomposition& dec, const Vector& xi);

// b = (ad e0)^a xi lies in the center of the ideal
bool check_z_standard(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                      const Vector& xi);

// non-null X whose centralizer is a nilpotent codimension-one ideal;
// candidates: basis vectors plus height-bounded rational combinations over
// the center of the nilradical, canonically scaled and ordered
std::vector<Vector> scan_z_standard(const MetricLieAlgebra& M, int height = 3);

// largest nilpotent ideal
std::vector<Vector> nilradical(const LieAlgebra& L);

// replaces the action of the complement on the ideal by chi, keeping the inner
// product; chi[i] is an ambient matrix for the i-th abelian basis vector.
// Requires: chi maps g to g and kills a, chi|g is a derivation, the metric
// symmetric part matches ad, and the chi matrices commute with ad a and with
// each other.
MetricLieAlgebra isometrize(const MetricLieAlgebra& M, const StandardDecomposition& dec,
                            const std::vector<Matrix>& chi);

// true iff dec is standard but not pseudo-Iwasawa; pre: A passed check_sasaki
bool no_pseudo_iwasawa_audit(const AlmostContactData& A, const StandardDecomposition& dec);

}  // namespace sasaki
