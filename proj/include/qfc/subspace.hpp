#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfc/field.hpp"

namespace qfc {

// An F_p-subspace of F_p^m held as its canonical reduced-row-echelon basis:
// unit pivots, strictly increasing pivot columns, zeros above and below each
// pivot. Any two spanning sets of the same subspace produce equal objects.
class Subspace {
 public:
  Subspace(Scalar p, int m);  // the zero subspace

  static Subspace span(Scalar p, int m, const std::vector<FieldElement>& vectors);
  static Subspace full(Scalar p, int m);
  // Parses rows of comma-separated digits joined by ';' ("1,0,2;0,1,1");
  // the empty string is the zero subspace. Input rows are canonicalized.
  static Subspace parse(Scalar p, int m, const std::string& text);

  Scalar p() const { return p_; }
  int ambient_dim() const { return m_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Scalar>>& basis() const { return rows_; }
  FieldElement basis_element(int i) const;

  bool contains(const FieldElement& v) const;
  // All p^dim members, derived from the basis; starts at the zero vector.
  std::vector<FieldElement> members() const;
  std::string to_string() const;

  static Subspace intersect(const Subspace& a, const Subspace& b);

  bool operator==(const Subspace&) const = default;

 private:
  friend class SubspaceStream;
  Scalar p_;
  int m_;
  std::vector<std::vector<Scalar>> rows_;
};

// Number of r-dimensional subspaces of F_p^m (Gaussian binomial coefficient),
// computed exactly; throws std::overflow_error if it does not fit in 64 bits.
std::uint64_t gaussian_binomial(int m, int r, Scalar p);

// Streams every r-dimensional subspace of F_p^m exactly once, directly in
// canonical echelon form: pivot-column sets in lexicographic order, then the
// free entries of each echelon pattern in lexicographic (odometer) order.
// O(1) state per item; suited to strided partitioning across workers, and
// the order never depends on the partitioning.
class SubspaceStream {
 public:
  SubspaceStream(Scalar p, int m, int r);

  // Writes the next subspace into out and returns true, or returns false
  // once the stream is exhausted.
  bool next(Subspace& out);

 private:
  void recompute_free_positions();
  bool advance();

  Scalar p_;
  int m_;
  int r_;
  bool done_ = false;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_pos_;  // row-major echelon slots
  std::vector<Scalar> free_vals_;
};

}  // namespace qfc
