#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfc {

using Scalar = std::int64_t;

bool is_prime(Scalar n);

// Quadratic character of F_p via Euler's criterion: 0 at 0, +1 on nonzero
// squares, -1 on non-squares.
int quadratic_character(Scalar c, Scalar p);

// Smallest c in [2, p) with quadratic_character(c, p) == -1.
Scalar smallest_nonresidue(Scalar p);

// Coefficients of a field element in the polynomial basis 1, x, ..., x^{m-1},
// each entry reduced mod p.
struct FieldElement {
  std::vector<Scalar> coeffs;
  bool operator==(const FieldElement&) const = default;
  bool is_zero() const;
};

// F_{p^m} for an odd prime p, realized as F_p[x] modulo a monic irreducible
// polynomial of degree m. Immutable: every operation is pure, so one instance
// can be shared freely across threads.
class FieldSpec {
 public:
  // Uses default_modulus(p, m).
  FieldSpec(Scalar p, int m);
  // modulus holds ascending-degree coefficients, length m+1, monic.
  // Irreducibility is verified; invalid input throws std::invalid_argument.
  FieldSpec(Scalar p, int m, std::vector<Scalar> modulus);

  // The monic irreducible degree-m polynomial over F_p whose ascending-degree
  // coefficient vector has the smallest integer encoding sum(c_i * p^i).
  // Deterministic across runs and platforms.
  static std::vector<Scalar> default_modulus(Scalar p, int m);

  Scalar p() const { return p_; }
  int m() const { return m_; }
  const std::vector<Scalar>& modulus() const { return modulus_; }
  std::int64_t order() const { return order_; }  // p^m

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_scalar(Scalar c) const;

  // Elements are indexed by the integer encoding sum(coeffs[i] * p^i);
  // element(k) for k = 0 .. order()-1 walks the whole field exactly once,
  // which is the coordinate order used everywhere downstream.
  FieldElement element(std::int64_t index) const;
  std::int64_t index_of(const FieldElement& x) const;
  std::vector<FieldElement> all_elements() const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement scale(Scalar c, const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // std::domain_error on zero
  FieldElement pow(FieldElement base, std::uint64_t e) const;

  // Tr(x) = x + x^p + ... + x^{p^{m-1}}, always a prime-field scalar.
  Scalar trace(const FieldElement& x) const;

  // Quadratic character of F_{p^m}: 0 at 0, else +-1 by x^{(p^m-1)/2}.
  int quadratic_character(const FieldElement& x) const;

 private:
  void init();

  Scalar p_;
  int m_;
  std::vector<Scalar> modulus_;
  std::int64_t order_;
  std::vector<std::vector<Scalar>> xpow_;  // x^{m+k} mod modulus, k = 0..m-2
  std::vector<Scalar> trace_of_basis_;     // trace is F_p-linear
};

// Smallest nonzero element (by integer encoding) that is a non-square in
// F_{p^m}.
FieldElement smallest_nonsquare(const FieldSpec& spec);

}  // namespace qfc
