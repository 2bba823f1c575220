#pragma once

// Small dense linear algebra over F_p shared by the library internals.
// Not installed; include only from src/.

#include <vector>

#include "qfc/field.hpp"

namespace qfc::detail {

using Mat = std::vector<std::vector<Scalar>>;

inline Scalar mod_p(Scalar v, Scalar p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// Inverse of a mod p for a != 0 (mod p); extended Euclid.
Scalar inv_mod(Scalar a, Scalar p);

// In-place reduced row echelon form with unit pivots; returns the rank.
// Zero rows sink to the bottom and are kept.
int rref(Mat& rows, Scalar p);

// Basis of the solution space {x in F_p^ncols : rows * x = 0}.
Mat kernel_basis(Mat rows, int ncols, Scalar p);

// Determinant of a square matrix mod p (0 when singular).
Scalar det_mod(Mat a, Scalar p);

// Symmetric congruence diagonalization of a symmetric matrix A over F_p
// (p odd): returns invertible M, with columns the new basis vectors, such
// that M^T A M is diagonal with all nonzero entries first. Pivots take the
// first nonzero diagonal entry; failing that, the first nonzero off-diagonal
// entry (i, j) in row-major order, fixed by the basis move v_i += v_j.
struct SymDiag {
  Mat basis_change;
  std::vector<Scalar> diag;
  int rank;
};
SymDiag sym_diagonalize(Mat a, Scalar p);

}  // namespace qfc::detail
