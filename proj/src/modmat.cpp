#include "modmat.hpp"

#include <stdexcept>
#include <utility>

namespace qfc::detail {

Scalar inv_mod(Scalar a, Scalar p) {
  a = mod_p(a, p);
  if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
  Scalar old_r = p, r = a;
  Scalar old_t = 0, t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  return mod_p(old_t, p);
}

int rref(Mat& rows, Scalar p) {
  if (rows.empty()) return 0;
  const int nrows = static_cast<int>(rows.size());
  const int ncols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int i = rank; i < nrows; ++i) {
      if (mod_p(rows[i][col], p) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar iv = inv_mod(rows[rank][col], p);
    for (int j = 0; j < ncols; ++j) rows[rank][j] = mod_p(rows[rank][j] * iv, p);
    for (int i = 0; i < nrows; ++i) {
      if (i == rank) continue;
      Scalar c = mod_p(rows[i][col], p);
      if (c == 0) continue;
      for (int j = 0; j < ncols; ++j) {
        rows[i][j] = mod_p(rows[i][j] - c * rows[rank][j], p);
      }
    }
    ++rank;
  }
  return rank;
}

Mat kernel_basis(Mat rows, int ncols, Scalar p) {
  int rank = rref(rows, p);
  // Locate pivot columns of the echelon form.
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(ncols, false);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < ncols; ++j) {
      if (mod_p(rows[i][j], p) != 0) {
        pivot_col[i] = j;
        is_pivot[j] = true;
        break;
      }
    }
  }
  Mat basis;
  for (int j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<Scalar> v(ncols, 0);
    v[j] = 1;
    for (int i = 0; i < rank; ++i) {
      v[pivot_col[i]] = mod_p(-rows[i][j], p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar det_mod(Mat a, Scalar p) {
  const int n = static_cast<int>(a.size());
  Scalar det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (mod_p(a[i][col], p) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = mod_p(-det, p);
    }
    det = mod_p(det * a[col][col], p);
    Scalar iv = inv_mod(a[col][col], p);
    for (int i = col + 1; i < n; ++i) {
      Scalar c = mod_p(a[i][col] * iv, p);
      if (c == 0) continue;
      for (int j = col; j < n; ++j) a[i][j] = mod_p(a[i][j] - c * a[col][j], p);
    }
  }
  return det;
}

namespace {

// Simultaneous row+column operations keep the working matrix congruent to the
// input; M records the column side so that M^T A_in M = A_work throughout.
void add_col_row(Mat& a, Mat& m, int dst, int src, Scalar c, Scalar p) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i][dst] = mod_p(a[i][dst] + c * a[i][src], p);
  for (int j = 0; j < n; ++j) a[dst][j] = mod_p(a[dst][j] + c * a[src][j], p);
  for (int i = 0; i < n; ++i) m[i][dst] = mod_p(m[i][dst] + c * m[i][src], p);
}

void swap_col_row(Mat& a, Mat& m, int i, int j) {
  const int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  std::swap(a[i], a[j]);
  for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][j]);
}

}  // namespace

SymDiag sym_diagonalize(Mat a, Scalar p) {
  const int n = static_cast<int>(a.size());
  for (auto& row : a)
    for (auto& v : row) v = mod_p(v, p);
  Mat m(n, std::vector<Scalar>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;

  int k = 0;
  for (; k < n; ++k) {
    if (a[k][k] == 0) {
      // First nonzero diagonal entry below k, if any.
      int diag = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][i] != 0) {
          diag = i;
          break;
        }
      }
      if (diag >= 0) {
        swap_col_row(a, m, k, diag);
      } else {
        // All remaining diagonal entries vanish; look for the first nonzero
        // off-diagonal entry in row-major order. v_i += v_j then makes the
        // (i, i) entry 2*a[i][j] != 0 (p is odd).
        int bi = -1, bj = -1;
        for (int i = k; i < n && bi < 0; ++i) {
          for (int j = i + 1; j < n; ++j) {
            if (a[i][j] != 0) {
              bi = i;
              bj = j;
              break;
            }
          }
        }
        if (bi < 0) break;  // remaining block is identically zero
        add_col_row(a, m, bi, bj, 1, p);
        if (bi != k) swap_col_row(a, m, k, bi);
      }
    }
    Scalar iv = inv_mod(a[k][k], p);
    for (int i = k + 1; i < n; ++i) {
      Scalar c = mod_p(-a[i][k] * iv, p);
      if (c != 0) add_col_row(a, m, i, k, c, p);
    }
  }

  SymDiag out;
  out.basis_change = std::move(m);
  out.diag.resize(n);
  for (int i = 0; i < n; ++i) out.diag[i] = a[i][i];
  out.rank = k;
  return out;
}

}  // namespace qfc::detail
