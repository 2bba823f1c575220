#include "qfc/search.hpp"

#include <stdexcept>
#include <vector>

namespace qfc {

IsotropicSearchResult find_totally_isotropic(const QuadraticForm& f, int r) {
  const FieldSpec& spec = f.field();
  const Scalar p = spec.p();
  const int m = spec.m();
  if (r < 0 || r > m) {
    throw std::invalid_argument("find_totally_isotropic: r out of range");
  }
  if (f.rank() != m) {
    throw std::invalid_argument("find_totally_isotropic: form must be nondegenerate");
  }

  std::vector<FieldElement> chain;
  Subspace h(p, m);
  while (h.dim() < r) {
    Subspace dual = f.dual_space(h);
    bool found = false;
    std::int64_t best_enc = 0;
    FieldElement best;
    for (const FieldElement& x : dual.members()) {
      if (x.is_zero() || f.evaluate(x) != 0 || h.contains(x)) continue;
      std::int64_t enc = spec.index_of(x);
      if (!found || enc < best_enc) {
        found = true;
        best_enc = enc;
        best = x;
      }
    }
    if (!found) return {false, h.dim(), h};
    chain.push_back(best);
    h = Subspace::span(p, m, chain);
  }

  for (int i = 0; i < h.dim(); ++i) {
    for (int j = i; j < h.dim(); ++j) {
      if (f.bilinear(h.basis_element(i), h.basis_element(j)) != 0) {
        throw std::logic_error("find_totally_isotropic: witness failed re-verification");
      }
    }
  }
  return {true, r, h};
}

SelfDualResult self_dual_subspace(const QuadraticForm& f, bool check_only,
                                  bool force_exhaustive) {
  const FieldSpec& spec = f.field();
  const Scalar p = spec.p();
  const int m = spec.m();
  if (m % 2 != 0) {
    throw std::invalid_argument("self_dual_subspace: ambient dimension must be even");
  }
  if (f.rank() != m) {
    throw std::invalid_argument("self_dual_subspace: form must be nondegenerate");
  }
  const int s = m / 2;
  const bool exists = f.discriminant_sign() == master_sign(p, m);

  if (exists) {
    if (check_only) {
      return {true, SelfDualCertification::kSignCondition, false, Subspace(p, m), 0};
    }
    IsotropicSearchResult iso = find_totally_isotropic(f, s);
    if (!iso.found) {
      throw std::logic_error(
          "self_dual_subspace: greedy construction stalled although the sign "
          "condition guarantees a witness");
    }
    // Half-dimension totally isotropic forces H = dual(H); verify anyway.
    if (!(f.dual_space(iso.witness) == iso.witness)) {
      throw std::logic_error("self_dual_subspace: witness failed the dual fixpoint check");
    }
    return {true, SelfDualCertification::kWitness, true, iso.witness, 0};
  }

  if (m <= 4 || force_exhaustive) {
    std::uint64_t examined = 0;
    SubspaceStream stream(p, m, s);
    Subspace h(p, m);
    while (stream.next(h)) {
      ++examined;
      if (f.dual_space(h) == h) {
        throw std::logic_error(
            "self_dual_subspace: exhaustion found a witness the sign condition rules out");
      }
    }
    return {false, SelfDualCertification::kExhaustive, false, Subspace(p, m), examined};
  }
  return {false, SelfDualCertification::kSignCondition, false, Subspace(p, m), 0};
}

}  // namespace qfc
