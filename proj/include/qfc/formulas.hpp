#pragma once

#include <vector>

#include "qfc/field.hpp"
#include "qfc/quadform.hpp"

namespace qfc {

// p^e with overflow checking (throws std::overflow_error).
Scalar pow_int(Scalar base, int exponent);

// v(x) = p-1 if x = 0 mod p, else -1. Satisfies sum_{x in F_p} v(x) = 0.
Scalar v_func(Scalar x, Scalar p);

// Number of solutions of f(x) = a inside a d-dimensional subspace H, given
// the rank and discriminant sign of the restriction of f to H:
//   R even: p^{d-1} + v(a) * eta((-1)^{R/2}) * sign * p^{d-(R+2)/2}
//   R odd:  p^{d-1} + eta((-1)^{(R-1)/2}) * eta(a) * sign * p^{d-(R+1)/2}
// where eta is the quadratic character of F_p with eta(0) = 0. A rank-0
// restriction has discriminant 1 by convention, collapsing the even case to
// p^d when a = 0 and 0 otherwise; that branch also covers d = 0.
Scalar level_set_intersection_count(int d, int rank, int sign, Scalar a, Scalar p);

// n = |{x != 0 : f(x) = a}| for a nondegenerate rank-m form of sign epsilon:
// the full-space intersection count, minus the zero vector when a = 0.
Scalar predicted_length(Scalar p, int m, int epsilon, Scalar a);

struct HierarchyPrediction {
  TheoremTag theorem;
  Scalar length;                // n, equals weights.back()
  std::vector<Scalar> weights;  // d_1 .. d_m
};

// Full weight hierarchy of the code built from a nondegenerate form of sign
// epsilon on F_{p^m} and level a, by the piecewise closed forms. Pure integer
// arithmetic; requires m >= 3 (below that the code can drop to dimension < m
// and the minimum-support identity behind the formulas no longer applies).
// Branches that overlap at r = m/2 are evaluated both ways and must agree;
// the result is checked against predicted_length, strict monotonicity, and
// the Singleton bound before being returned.
HierarchyPrediction closed_form_hierarchy(Scalar p, int m, int epsilon, Scalar a);

}  // namespace qfc
