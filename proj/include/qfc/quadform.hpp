#pragma once

#include <cstdint>
#include <vector>

#include "qfc/field.hpp"
#include "qfc/subspace.hpp"

namespace qfc {

// Case labels for the closed-form hierarchy evaluator. Which case governs is
// a function of the parity of m, whether the level a is zero, and how the
// form's discriminant sign relates to master_sign(p, m).
enum class TheoremTag { kT1, kT2, kT3, kT4, kT5, kT6 };
const char* to_string(TheoremTag tag);

// The reference sign against which a form is classified:
// (-1)^{m(p-1)/4} for even m and (-1)^{(m-1)(p-1)/4} for odd m (both
// exponents are integers).
int master_sign(Scalar p, int m);

// Selects the governing closed-form case for a nondegenerate form with
// discriminant sign epsilon at level a.
TheoremTag select_theorem(Scalar p, int m, int epsilon, Scalar a);

struct FormClassification {
  bool m_even;
  int rank;
  int epsilon;      // quadratic character of the discriminant, +-1
  int master_sign;  // see master_sign()
  bool nondegenerate;
  TheoremTag theorem;
};

struct Diagonalization {
  // Invertible change of basis M (columns are the new basis vectors) with
  // M^T A M diagonal; nonzero diagonal entries come first.
  std::vector<std::vector<Scalar>> basis_change;
  std::vector<Scalar> diagonal;
  int rank;
};

struct RestrictedForm {
  int rank;  // rank of the form restricted to the subspace
  int sign;  // character of the restricted discriminant; +1 when rank is 0
};

// A quadratic form f(x) = x^T A x on F_{p^m} viewed as F_p^m, given by its
// symmetric Gram matrix A: A[i][i] = f(e_i) and A[i][j] equals the polar
// form F(e_i, e_j) = (f(e_i + e_j) - f(e_i) - f(e_j)) / 2.
class QuadraticForm {
 public:
  static QuadraticForm from_gram(const FieldSpec& spec,
                                 std::vector<std::vector<Scalar>> entries);
  static QuadraticForm identity(const FieldSpec& spec);
  static QuadraticForm from_diagonal(const FieldSpec& spec, std::vector<Scalar> diag);
  // Gram entry (i, j) = Tr(gamma * x^i * x^j) in the polynomial basis;
  // nondegenerate whenever gamma != 0 because the trace pairing is.
  static QuadraticForm from_trace_scale(const FieldSpec& spec, const FieldElement& gamma);

  const FieldSpec& field() const { return spec_; }
  const std::vector<std::vector<Scalar>>& gram() const { return gram_; }

  Scalar evaluate(const FieldElement& x) const;
  // The symmetric bilinear form x^T A y; bilinear(x, x) == evaluate(x).
  Scalar bilinear(const FieldElement& x, const FieldElement& y) const;

  Diagonalization diagonalize() const;
  int rank() const;
  // Character of the discriminant (product of the nonzero diagonalized
  // entries); +1 for the zero form by the empty-product convention.
  int discriminant_sign() const;
  // Determinant of the bilinear Gram matrix of the given elements.
  Scalar gram_discriminant(const std::vector<FieldElement>& elements) const;

  // Rank and discriminant sign of the form restricted to h (h.dim() may be
  // zero: rank 0, sign +1).
  RestrictedForm restrict_to(const Subspace& h) const;
  std::vector<std::vector<Scalar>> restricted_gram(const Subspace& h) const;

  // h^perp = {x : bilinear(x, b) = 0 for every b in h}; requires a
  // nondegenerate form, so dim h + dim h^perp = m.
  Subspace dual_space(const Subspace& h) const;

  // Requires a nondegenerate form; throws std::domain_error otherwise.
  FormClassification classify(Scalar a) const;

 private:
  QuadraticForm(FieldSpec spec, std::vector<std::vector<Scalar>> gram);

  FieldSpec spec_;
  std::vector<std::vector<Scalar>> gram_;
};

}  // namespace qfc
