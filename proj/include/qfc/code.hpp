#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qfc/field.hpp"
#include "qfc/quadform.hpp"
#include "qfc/subspace.hpp"

namespace qfc {

// The defining set came out empty, so there is no code to build.
class UnusableCodeError : public std::runtime_error {
 public:
  explicit UnusableCodeError(const std::string& what) : std::runtime_error(what) {}
};

// An operation needed the message map to have full rank m, but the actual
// code dimension fell short. The minimum-support identity over subspace
// intersections only holds at full dimension, so this is reported rather
// than silently producing a wrong hierarchy.
class DegenerateCodeError : public std::runtime_error {
 public:
  DegenerateCodeError(int dimension, int required);
  int dimension() const { return dimension_; }
  int required() const { return required_; }

 private:
  int dimension_;
  int required_;
};

struct Codeword {
  std::vector<Scalar> coords;
  int weight() const;
  bool operator==(const Codeword&) const = default;
};

struct WeightHierarchy {
  std::vector<Scalar> values;  // d_1 .. d_k
  // Checks strict monotonicity, the Singleton bound d_r <= n - k + r, and
  // d_k = n; throws std::logic_error on any violation.
  void validate(Scalar n, int k) const;
  bool operator==(const WeightHierarchy&) const = default;
};

// Linear code whose coordinates are Tr(x * d_i) over the defining set
// D = {d != 0 : f(d) = a}, in ascending element-encoding order.
class DefiningSetCode {
 public:
  // Builds D by scanning the field in encoding order and caches, for every
  // message x, the support bitset of its codeword. Requires a nondegenerate
  // form; throws UnusableCodeError when D is empty.
  DefiningSetCode(const QuadraticForm& form, Scalar a);

  const FieldSpec& field() const { return form_.field(); }
  const QuadraticForm& form() const { return form_; }
  Scalar level() const { return level_; }
  const std::vector<FieldElement>& defining_set() const { return defining_set_; }
  Scalar length() const { return static_cast<Scalar>(defining_set_.size()); }

  // Rank of the message -> codeword map; m in the healthy regime but
  // genuinely smaller in some tiny cases, so it is computed, never assumed.
  int dimension() const { return dimension_; }

  Codeword encode(const FieldElement& x) const;

  std::map<Scalar, std::int64_t> weight_distribution() const;

  // d_r as the minimum, over r-dimensional message subspaces V, of the
  // number of coordinates where some vector of V is nonzero. The support of
  // V is the union of the basis supports, since coordinate i escapes the
  // support exactly when the i-th functional vanishes on all of V.
  Scalar ghw_by_definition(int r, int jobs = 1) const;

  // d_r = n - max{|D cap H| : dim H = m - r}, the subspace-intersection
  // route. Independent of ghw_by_definition: it scans ambient subspaces and
  // counts defining-set members by indicator lookup.
  Scalar ghw_by_intersection(int r, int jobs = 1) const;

  WeightHierarchy hierarchy_by_definition(int jobs = 1) const;
  WeightHierarchy hierarchy_by_intersection(int jobs = 1) const;

 private:
  void require_full_dimension() const;
  const std::uint64_t* support_row(std::int64_t message_index) const;

  QuadraticForm form_;
  Scalar level_;
  std::vector<FieldElement> defining_set_;
  int dimension_;
  std::vector<bool> in_defining_set_;   // indexed by element encoding
  std::vector<std::uint64_t> supports_; // q rows of words_per_row_ words
  int words_per_row_;
};

}  // namespace qfc
