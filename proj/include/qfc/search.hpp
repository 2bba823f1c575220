#pragma once

#include <cstdint>

#include "qfc/quadform.hpp"
#include "qfc/subspace.hpp"

namespace qfc {

struct IsotropicSearchResult {
  bool found;
  int reached;       // dimension the greedy chain attained
  Subspace witness;  // the chain's subspace, dim = reached
};

// Greedy chain toward an r-dimensional subspace on which both f and its
// bilinear form vanish identically: starting from {0}, repeatedly adjoin the
// smallest-encoding nonzero x with f(x) = 0 lying in the dual of the current
// subspace but not in the subspace itself. Guaranteed to reach r whenever
// 2r < m (and for 2r = m exactly when a self-dual subspace exists); outside
// that regime a stall is reported as found = false, never as a wrong answer.
// Every returned witness is re-verified pairwise before being returned.
IsotropicSearchResult find_totally_isotropic(const QuadraticForm& f, int r);

enum class SelfDualCertification {
  kWitness,        // explicit H with dual(H) = H, re-verified
  kExhaustive,     // every dim-m/2 subspace checked, none self-dual
  kSignCondition,  // decided by the discriminant-sign criterion alone
};

struct SelfDualResult {
  bool exists;
  SelfDualCertification certification;
  bool has_witness;
  Subspace witness;        // meaningful only when has_witness
  std::uint64_t examined;  // subspaces scanned when certification = kExhaustive
};

// Decides whether F_{p^m} (m even) contains a subspace equal to its own dual
// under f. Existence is equivalent to discriminant_sign(f) matching the
// master sign; a positive answer is backed by a greedy-built witness unless
// check_only is set, and a negative one by exhaustion over all half-dimension
// subspaces when m <= 4 or force_exhaustive is set.
SelfDualResult self_dual_subspace(const QuadraticForm& f, bool check_only = false,
                                  bool force_exhaustive = false);

}  // namespace qfc
