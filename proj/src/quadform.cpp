#include "qfc/quadform.hpp"

#include <stdexcept>
#include <utility>

#include "modmat.hpp"

namespace qfc {

using detail::Mat;
using detail::mod_p;

const char* to_string(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::kT1: return "T1";
    case TheoremTag::kT2: return "T2";
    case TheoremTag::kT3: return "T3";
    case TheoremTag::kT4: return "T4";
    case TheoremTag::kT5: return "T5";
    case TheoremTag::kT6: return "T6";
  }
  throw std::logic_error("to_string: bad TheoremTag");
}

int master_sign(Scalar p, int m) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("master_sign: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("master_sign: m must be positive");
  std::int64_t half = (p - 1) / 2;
  std::int64_t exponent = (m % 2 == 0) ? (m / 2) * half : ((m - 1) / 2) * half;
  return (exponent % 2 == 0) ? 1 : -1;
}

TheoremTag select_theorem(Scalar p, int m, int epsilon, Scalar a) {
  if (epsilon != 1 && epsilon != -1) {
    throw std::invalid_argument("select_theorem: epsilon must be +-1");
  }
  a = mod_p(a, p);
  const int sigma = master_sign(p, m);
  if (m % 2 == 0) {
    if (a != 0) return TheoremTag::kT1;
    return epsilon == sigma ? TheoremTag::kT4 : TheoremTag::kT5;
  }
  if (a == 0) return TheoremTag::kT6;
  return quadratic_character(a, p) == sigma * epsilon ? TheoremTag::kT2 : TheoremTag::kT3;
}

QuadraticForm::QuadraticForm(FieldSpec spec, std::vector<std::vector<Scalar>> gram)
    : spec_(std::move(spec)), gram_(std::move(gram)) {}

QuadraticForm QuadraticForm::from_gram(const FieldSpec& spec,
                                       std::vector<std::vector<Scalar>> entries) {
  const int m = spec.m();
  if (static_cast<int>(entries.size()) != m) {
    throw std::invalid_argument("QuadraticForm: Gram matrix must be m x m");
  }
  for (auto& row : entries) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("QuadraticForm: Gram matrix must be m x m");
    }
    for (auto& v : row) v = mod_p(v, spec.p());
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (entries[i][j] != entries[j][i]) {
        throw std::invalid_argument("QuadraticForm: Gram matrix must be symmetric");
      }
    }
  }
  return QuadraticForm(spec, std::move(entries));
}

QuadraticForm QuadraticForm::identity(const FieldSpec& spec) {
  return from_diagonal(spec, std::vector<Scalar>(spec.m(), 1));
}

QuadraticForm QuadraticForm::from_diagonal(const FieldSpec& spec, std::vector<Scalar> diag) {
  const int m = spec.m();
  if (static_cast<int>(diag.size()) != m) {
    throw std::invalid_argument("QuadraticForm: diagonal must have m entries");
  }
  Mat gram(m, std::vector<Scalar>(m, 0));
  for (int i = 0; i < m; ++i) gram[i][i] = mod_p(diag[i], spec.p());
  return QuadraticForm(spec, std::move(gram));
}

QuadraticForm QuadraticForm::from_trace_scale(const FieldSpec& spec, const FieldElement& gamma) {
  if (gamma.is_zero()) {
    throw std::invalid_argument("QuadraticForm: trace scale gamma must be nonzero");
  }
  const int m = spec.m();
  // basis_products[i] = gamma * x^i; entry (i, j) = Tr(gamma * x^i * x^j).
  std::vector<FieldElement> powers;
  powers.reserve(m);
  FieldElement cur = spec.one();
  FieldElement x = m > 1 ? spec.element(spec.p()) : spec.one();
  for (int i = 0; i < m; ++i) {
    powers.push_back(cur);
    if (i + 1 < m) cur = spec.mul(cur, x);
  }
  Mat gram(m, std::vector<Scalar>(m, 0));
  for (int i = 0; i < m; ++i) {
    FieldElement gi = spec.mul(gamma, powers[i]);
    for (int j = i; j < m; ++j) {
      Scalar t = spec.trace(spec.mul(gi, powers[j]));
      gram[i][j] = gram[j][i] = t;
    }
  }
  return QuadraticForm(spec, std::move(gram));
}

Scalar QuadraticForm::evaluate(const FieldElement& x) const { return bilinear(x, x); }

Scalar QuadraticForm::bilinear(const FieldElement& x, const FieldElement& y) const {
  const int m = spec_.m();
  if (static_cast<int>(x.coeffs.size()) != m || static_cast<int>(y.coeffs.size()) != m) {
    throw std::invalid_argument("QuadraticForm: vector length differs from m");
  }
  const Scalar p = spec_.p();
  Scalar acc = 0;
  for (int i = 0; i < m; ++i) {
    if (x.coeffs[i] == 0) continue;
    Scalar row = 0;
    for (int j = 0; j < m; ++j) row = mod_p(row + gram_[i][j] * y.coeffs[j], p);
    acc = mod_p(acc + x.coeffs[i] * row, p);
  }
  return acc;
}

Diagonalization QuadraticForm::diagonalize() const {
  detail::SymDiag d = detail::sym_diagonalize(gram_, spec_.p());
  return Diagonalization{std::move(d.basis_change), std::move(d.diag), d.rank};
}

int QuadraticForm::rank() const {
  Mat work = gram_;
  return detail::rref(work, spec_.p());
}

int QuadraticForm::discriminant_sign() const {
  Diagonalization d = diagonalize();
  Scalar prod = 1;
  for (int i = 0; i < d.rank; ++i) prod = mod_p(prod * d.diagonal[i], spec_.p());
  return d.rank == 0 ? 1 : quadratic_character(prod, spec_.p());
}

Scalar QuadraticForm::gram_discriminant(const std::vector<FieldElement>& elements) const {
  const int k = static_cast<int>(elements.size());
  Mat g(k, std::vector<Scalar>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) g[i][j] = bilinear(elements[i], elements[j]);
  }
  return detail::det_mod(std::move(g), spec_.p());
}

std::vector<std::vector<Scalar>> QuadraticForm::restricted_gram(const Subspace& h) const {
  if (h.p() != spec_.p() || h.ambient_dim() != spec_.m()) {
    throw std::invalid_argument("QuadraticForm: subspace lives in a different space");
  }
  const int d = h.dim();
  Mat g(d, std::vector<Scalar>(d, 0));
  for (int i = 0; i < d; ++i) {
    FieldElement bi = h.basis_element(i);
    for (int j = i; j < d; ++j) {
      g[i][j] = g[j][i] = bilinear(bi, h.basis_element(j));
    }
  }
  return g;
}

RestrictedForm QuadraticForm::restrict_to(const Subspace& h) const {
  Mat g = restricted_gram(h);
  detail::SymDiag d = detail::sym_diagonalize(std::move(g), spec_.p());
  Scalar prod = 1;
  for (int i = 0; i < d.rank; ++i) prod = mod_p(prod * d.diag[i], spec_.p());
  int sign = d.rank == 0 ? 1 : quadratic_character(prod, spec_.p());
  return RestrictedForm{d.rank, sign};
}

Subspace QuadraticForm::dual_space(const Subspace& h) const {
  if (h.p() != spec_.p() || h.ambient_dim() != spec_.m()) {
    throw std::invalid_argument("QuadraticForm: subspace lives in a different space");
  }
  const int m = spec_.m();
  if (rank() != m) {
    throw std::domain_error("QuadraticForm::dual_space: form must be nondegenerate");
  }
  // x lies in the dual exactly when (b^T A) x = 0 for every basis row b.
  Mat system;
  const Scalar p = spec_.p();
  for (int i = 0; i < h.dim(); ++i) {
    const auto& b = h.basis()[i];
    std::vector<Scalar> row(m, 0);
    for (int j = 0; j < m; ++j) {
      Scalar acc = 0;
      for (int k = 0; k < m; ++k) acc = mod_p(acc + b[k] * gram_[k][j], p);
      row[j] = acc;
    }
    system.push_back(std::move(row));
  }
  Mat kernel = detail::kernel_basis(std::move(system), m, p);
  std::vector<FieldElement> vectors;
  vectors.reserve(kernel.size());
  for (auto& v : kernel) vectors.push_back(FieldElement{std::move(v)});
  return Subspace::span(p, m, vectors);
}

FormClassification QuadraticForm::classify(Scalar a) const {
  const int m = spec_.m();
  const int r = rank();
  if (r != m) {
    throw std::domain_error("QuadraticForm::classify: form must be nondegenerate");
  }
  FormClassification out;
  out.m_even = (m % 2 == 0);
  out.rank = r;
  out.epsilon = discriminant_sign();
  out.master_sign = qfc::master_sign(spec_.p(), m);
  out.nondegenerate = true;
  out.theorem = select_theorem(spec_.p(), m, out.epsilon, a);
  return out;
}

}  // namespace qfc
