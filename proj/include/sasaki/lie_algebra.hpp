#pragma once
#include "sasaki/matrix.hpp"

namespace sasaki {

inline constexpr int max_dim = 16;

// Lie algebra by structure constants; indices are 0-based internally,
// 1-based only at the text/JSON boundary.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim);  // abelian

  int dim() const { return n_; }
  // sets [e_i, e_j] = v (and [e_j, e_i] = -v); i = j requires v = 0
  void set_bracket(int i, int j, const Vector& v);
  const Vector& bracket(int i, int j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  Matrix ad(const Vector& x) const;
  Matrix ad(int i) const;
  Scalar c(int i, int j, int k) const;  // c^k_{ij}

  bool operator==(const LieAlgebra&) const = default;

 private:
  int n_ = 0;
  std::vector<Vector> table_;  // n*n bracket vectors
};

struct JacobiReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // first failing triple (i<j<k)
  Vector defect;               // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};
JacobiReport jacobi_check(const LieAlgebra& L);

// subspaces pass through as lists of spanning vectors; canonical_basis reduces
// a spanning set to the unique reduced-row-echelon basis
std::vector<Vector> canonical_basis(const std::vector<Vector>& span);
bool in_span(const std::vector<Vector>& span, const Vector& v);
bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b);
// span of all [a, b], a in A, b in B
std::vector<Vector> bracket_space(const LieAlgebra& L, const std::vector<Vector>& A,
                                  const std::vector<Vector>& B);

// g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …, listed until stabilization; throws NotALieAlgebra
std::vector<std::vector<Vector>> lower_central_series(const LieAlgebra& L);
std::vector<std::vector<Vector>> derived_series(const LieAlgebra& L);

struct NilpotencyReport {
  bool nilpotent = false;
  int step = 0;  // smallest k with g^k = 0 (abelian: 1); 0 when not nilpotent
};
NilpotencyReport is_nilpotent(const LieAlgebra& L);
bool is_solvable(const LieAlgebra& L);

std::vector<Vector> center(const LieAlgebra& L);
std::vector<Vector> centralizer(const LieAlgebra& L, const Vector& x);

bool is_subalgebra(const LieAlgebra& L, const std::vector<Vector>& span);
bool is_ideal(const LieAlgebra& L, const std::vector<Vector>& span);
bool is_abelian_subspace(const LieAlgebra& L, const std::vector<Vector>& span);

bool is_derivation(const LieAlgebra& L, const Matrix& D);
std::vector<Matrix> derivation_algebra(const LieAlgebra& L);

// structure constants in the given basis of a subalgebra; throws if not closed
LieAlgebra restrict_to(const LieAlgebra& L, const std::vector<Vector>& basis);
// brackets of the quotient by an ideal, written on a chosen complement basis
LieAlgebra quotient(const LieAlgebra& L, const std::vector<Vector>& ideal_basis,
                    const std::vector<Vector>& complement_basis);
// new_basis columns = new basis vectors in old coordinates
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& new_basis);

}  // namespace sasaki
