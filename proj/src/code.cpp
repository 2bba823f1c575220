#include "qfc/code.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "modmat.hpp"

namespace qfc {

DegenerateCodeError::DegenerateCodeError(int dimension, int required)
    : std::runtime_error("code dimension " + std::to_string(dimension) +
                         " is below the required " + std::to_string(required) +
                         "; the subspace-intersection identity for d_r assumes "
                         "a full-dimension code"),
      dimension_(dimension),
      required_(required) {}

int Codeword::weight() const {
  int w = 0;
  for (Scalar c : coords) w += (c != 0);
  return w;
}

void WeightHierarchy::validate(Scalar n, int k) const {
  if (static_cast<int>(values.size()) != k) {
    throw std::logic_error("WeightHierarchy: expected " + std::to_string(k) + " values");
  }
  for (int r = 1; r <= k; ++r) {
    Scalar d_r = values[r - 1];
    if (r > 1 && d_r <= values[r - 2]) {
      throw std::logic_error("WeightHierarchy: values are not strictly increasing");
    }
    if (d_r > n - k + r) {
      throw std::logic_error("WeightHierarchy: Singleton bound violated");
    }
  }
  if (values.back() != n) {
    throw std::logic_error("WeightHierarchy: d_k must equal the length");
  }
}

DefiningSetCode::DefiningSetCode(const QuadraticForm& form, Scalar a)
    : form_(form), level_(detail::mod_p(a, form.field().p())) {
  const FieldSpec& spec = form_.field();
  if (form_.rank() != spec.m()) {
    throw std::invalid_argument("DefiningSetCode: form must be nondegenerate");
  }
  const std::int64_t q = spec.order();

  in_defining_set_.assign(q, false);
  for (std::int64_t k = 1; k < q; ++k) {
    FieldElement x = spec.element(k);
    if (form_.evaluate(x) == level_) {
      in_defining_set_[k] = true;
      defining_set_.push_back(std::move(x));
    }
  }
  if (defining_set_.empty()) {
    throw UnusableCodeError("defining set is empty: no nonzero x has f(x) = " +
                            std::to_string(level_));
  }

  const int n = static_cast<int>(defining_set_.size());
  words_per_row_ = (n + 63) / 64;
  supports_.assign(static_cast<std::size_t>(q) * words_per_row_, 0);

  // The message map is linear, so the codeword of x is the coefficient
  // combination of the basis rows; fill supports from explicit traces anyway
  // (q * n small at desk scale) to keep this path independent of linearity.
  for (std::int64_t k = 0; k < q; ++k) {
    FieldElement x = spec.element(k);
    std::uint64_t* row = supports_.data() + k * words_per_row_;
    for (int i = 0; i < n; ++i) {
      if (spec.trace(spec.mul(x, defining_set_[i])) != 0) {
        row[i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
  }

  // Rank of the m x n evaluation matrix whose rows encode the basis 1, x,
  // x^2, ...: the code dimension.
  detail::Mat rows;
  rows.reserve(spec.m());
  std::int64_t index = 1;
  for (int j = 0; j < spec.m(); ++j) {
    Codeword cw = encode(spec.element(index));
    rows.push_back(std::move(cw.coords));
    index *= spec.p();
  }
  dimension_ = detail::rref(rows, spec.p());
}

const std::uint64_t* DefiningSetCode::support_row(std::int64_t message_index) const {
  return supports_.data() + message_index * words_per_row_;
}

Codeword DefiningSetCode::encode(const FieldElement& x) const {
  const FieldSpec& spec = form_.field();
  Codeword out;
  out.coords.reserve(defining_set_.size());
  for (const FieldElement& d : defining_set_) {
    out.coords.push_back(spec.trace(spec.mul(x, d)));
  }
  return out;
}

std::map<Scalar, std::int64_t> DefiningSetCode::weight_distribution() const {
  const std::int64_t q = form_.field().order();
  std::map<Scalar, std::int64_t> dist;
  for (std::int64_t k = 0; k < q; ++k) {
    const std::uint64_t* row = support_row(k);
    int w = 0;
    for (int j = 0; j < words_per_row_; ++j) w += std::popcount(row[j]);
    ++dist[w];
  }
  return dist;
}

void DefiningSetCode::require_full_dimension() const {
  const int m = form_.field().m();
  if (dimension_ != m) throw DegenerateCodeError(dimension_, m);
}

namespace {

// Splits subspaces of dimension r across jobs workers; each worker folds its
// share with fold(state, subspace) and the per-worker states are merged with
// an order-independent combine, so the result is identical for any jobs.
template <typename State, typename Fold, typename Combine>
State scan_subspaces(Scalar p, int m, int r, int jobs, State init, Fold fold,
                     Combine combine) {
  std::vector<Subspace> all;
  SubspaceStream stream(p, m, r);
  Subspace h(p, m);
  while (stream.next(h)) all.push_back(h);

  if (jobs < 2 || all.size() < 2) {
    State state = init;
    for (const Subspace& s : all) fold(state, s);
    return state;
  }

  const int workers = static_cast<int>(std::min<std::size_t>(jobs, all.size()));
  std::vector<State> states(workers, init);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < all.size(); i += workers) fold(states[t], all[i]);
    });
  }
  for (auto& th : pool) th.join();
  State state = states[0];
  for (int t = 1; t < workers; ++t) state = combine(state, states[t]);
  return state;
}

}  // namespace

Scalar DefiningSetCode::ghw_by_definition(int r, int jobs) const {
  require_full_dimension();
  const FieldSpec& spec = form_.field();
  const int m = spec.m();
  if (r < 1 || r > m) throw std::invalid_argument("ghw_by_definition: r out of range");

  auto fold = [&](Scalar& best, const Subspace& v) {
    std::vector<const std::uint64_t*> rows;
    rows.reserve(v.dim());
    for (int i = 0; i < v.dim(); ++i) {
      rows.push_back(support_row(spec.index_of(v.basis_element(i))));
    }
    int support = 0;
    for (int w = 0; w < words_per_row_; ++w) {
      std::uint64_t merged = 0;
      for (const std::uint64_t* row : rows) merged |= row[w];
      support += std::popcount(merged);
    }
    best = std::min<Scalar>(best, support);
  };
  auto combine = [](Scalar a, Scalar b) { return std::min(a, b); };
  return scan_subspaces<Scalar>(spec.p(), m, r, jobs, length(), fold, combine);
}

Scalar DefiningSetCode::ghw_by_intersection(int r, int jobs) const {
  require_full_dimension();
  const FieldSpec& spec = form_.field();
  const int m = spec.m();
  if (r < 1 || r > m) throw std::invalid_argument("ghw_by_intersection: r out of range");

  auto fold = [&](Scalar& best, const Subspace& h) {
    Scalar count = 0;
    for (const FieldElement& x : h.members()) {
      if (in_defining_set_[spec.index_of(x)]) ++count;
    }
    best = std::max(best, count);
  };
  auto combine = [](Scalar a, Scalar b) { return std::max(a, b); };
  Scalar best = scan_subspaces<Scalar>(spec.p(), m, m - r, jobs, 0, fold, combine);
  return length() - best;
}

WeightHierarchy DefiningSetCode::hierarchy_by_definition(int jobs) const {
  WeightHierarchy h;
  const int m = form_.field().m();
  for (int r = 1; r <= m; ++r) h.values.push_back(ghw_by_definition(r, jobs));
  h.validate(length(), m);
  return h;
}

WeightHierarchy DefiningSetCode::hierarchy_by_intersection(int jobs) const {
  WeightHierarchy h;
  const int m = form_.field().m();
  for (int r = 1; r <= m; ++r) h.values.push_back(ghw_by_intersection(r, jobs));
  h.validate(length(), m);
  return h;
}

}  // namespace qfc
