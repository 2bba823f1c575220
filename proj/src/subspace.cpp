#include "qfc/subspace.hpp"

#include <sstream>
#include <stdexcept>

#include "modmat.hpp"

namespace qfc {

using detail::Mat;
using detail::mod_p;

namespace {

void check_ambient(Scalar p, int m) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("Subspace: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("Subspace: ambient dimension must be positive");
}

}  // namespace

Subspace::Subspace(Scalar p, int m) : p_(p), m_(m) { check_ambient(p, m); }

Subspace Subspace::span(Scalar p, int m, const std::vector<FieldElement>& vectors) {
  check_ambient(p, m);
  Mat rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (static_cast<int>(v.coeffs.size()) != m) {
      throw std::invalid_argument("Subspace::span: vector length differs from ambient dimension");
    }
    rows.push_back(v.coeffs);
  }
  int rank = detail::rref(rows, p);
  rows.resize(rank);
  Subspace s(p, m);
  s.rows_ = std::move(rows);
  return s;
}

Subspace Subspace::full(Scalar p, int m) {
  check_ambient(p, m);
  Subspace s(p, m);
  s.rows_.assign(m, std::vector<Scalar>(m, 0));
  for (int i = 0; i < m; ++i) s.rows_[i][i] = 1;
  return s;
}

Subspace Subspace::parse(Scalar p, int m, const std::string& text) {
  std::vector<FieldElement> vectors;
  if (!text.empty()) {
    std::stringstream rows(text);
    std::string row;
    while (std::getline(rows, row, ';')) {
      FieldElement v;
      std::stringstream entries(row);
      std::string entry;
      while (std::getline(entries, entry, ',')) {
        std::size_t pos = 0;
        Scalar value = std::stoll(entry, &pos);
        if (pos != entry.size()) throw std::invalid_argument("Subspace::parse: bad entry");
        v.coeffs.push_back(mod_p(value, p));
      }
      vectors.push_back(std::move(v));
    }
  }
  return span(p, m, vectors);
}

FieldElement Subspace::basis_element(int i) const {
  if (i < 0 || i >= dim()) throw std::invalid_argument("Subspace: basis index out of range");
  return FieldElement{rows_[i]};
}

bool Subspace::contains(const FieldElement& v) const {
  if (static_cast<int>(v.coeffs.size()) != m_) {
    throw std::invalid_argument("Subspace::contains: vector length differs from ambient dimension");
  }
  std::vector<Scalar> rem = v.coeffs;
  for (const auto& row : rows_) {
    int pivot = -1;
    for (int j = 0; j < m_; ++j) {
      if (row[j] != 0) {
        pivot = j;
        break;
      }
    }
    Scalar c = mod_p(rem[pivot], p_);
    if (c == 0) continue;
    for (int j = 0; j < m_; ++j) rem[j] = mod_p(rem[j] - c * row[j], p_);
  }
  for (Scalar c : rem) {
    if (mod_p(c, p_) != 0) return false;
  }
  return true;
}

std::vector<FieldElement> Subspace::members() const {
  std::vector<FieldElement> out;
  out.push_back(FieldElement{std::vector<Scalar>(m_, 0)});
  for (const auto& row : rows_) {
    const std::size_t base = out.size();
    for (Scalar c = 1; c < p_; ++c) {
      for (std::size_t i = 0; i < base; ++i) {
        FieldElement v = out[i];
        for (int j = 0; j < m_; ++j) v.coeffs[j] = mod_p(v.coeffs[j] + c * row[j], p_);
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::string Subspace::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < m_; ++j) {
      if (j) out += ',';
      out += std::to_string(rows_[i][j]);
    }
  }
  return out;
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.p_ != b.p_ || a.m_ != b.m_) {
    throw std::invalid_argument("Subspace::intersect: mismatched ambient spaces");
  }
  const int m = a.m_;
  // Zassenhaus: reduce [A|A; B|0]; rows whose left half vanished have right
  // halves spanning the intersection.
  Mat work;
  for (const auto& row : a.rows_) {
    std::vector<Scalar> w(2 * m, 0);
    for (int j = 0; j < m; ++j) w[j] = w[m + j] = row[j];
    work.push_back(std::move(w));
  }
  for (const auto& row : b.rows_) {
    std::vector<Scalar> w(2 * m, 0);
    for (int j = 0; j < m; ++j) w[j] = row[j];
    work.push_back(std::move(w));
  }
  detail::rref(work, a.p_);
  std::vector<FieldElement> meet;
  for (const auto& w : work) {
    bool left_zero = true;
    for (int j = 0; j < m && left_zero; ++j) left_zero = (w[j] == 0);
    if (!left_zero) continue;
    FieldElement v{std::vector<Scalar>(w.begin() + m, w.end())};
    if (!v.is_zero()) meet.push_back(std::move(v));
  }
  return span(a.p_, m, meet);
}

std::uint64_t gaussian_binomial(int m, int r, Scalar p) {
  if (m < 0 || r < 0 || r > m) {
    throw std::invalid_argument("gaussian_binomial: need 0 <= r <= m");
  }
  // Multiply by (p^{m-r+i} - 1) then divide by (p^i - 1), i = 1..r. Each
  // partial product is itself a Gaussian binomial, so every division is
  // exact and intermediates stay within result * p^m.
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
  unsigned __int128 res = 1;
  unsigned __int128 top = 1;  // p^{m-r+i}
  for (int i = 0; i < m - r; ++i) {
    if (top > limit / static_cast<unsigned __int128>(p)) {
      throw std::overflow_error("gaussian_binomial: overflow");
    }
    top *= static_cast<unsigned __int128>(p);
  }
  unsigned __int128 bottom = 1;  // p^i
  for (int i = 1; i <= r; ++i) {
    if (top > limit / static_cast<unsigned __int128>(p)) {
      throw std::overflow_error("gaussian_binomial: overflow");
    }
    top *= static_cast<unsigned __int128>(p);
    bottom *= static_cast<unsigned __int128>(p);
    unsigned __int128 factor = top - 1;
    if (res > limit / factor) throw std::overflow_error("gaussian_binomial: overflow");
    res *= factor;
    unsigned __int128 div = bottom - 1;
    if (res % div != 0) throw std::logic_error("gaussian_binomial: inexact division");
    res /= div;
  }
  if (res > static_cast<unsigned __int128>(UINT64_MAX)) {
    throw std::overflow_error("gaussian_binomial: result exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(res);
}

SubspaceStream::SubspaceStream(Scalar p, int m, int r) : p_(p), m_(m), r_(r) {
  check_ambient(p, m);
  if (r < 0 || r > m) throw std::invalid_argument("SubspaceStream: need 0 <= r <= m");
  pivots_.resize(r);
  for (int i = 0; i < r; ++i) pivots_[i] = i;
  recompute_free_positions();
}

void SubspaceStream::recompute_free_positions() {
  free_pos_.clear();
  std::vector<bool> is_pivot(m_, false);
  for (int c : pivots_) is_pivot[c] = true;
  for (int i = 0; i < r_; ++i) {
    for (int j = pivots_[i] + 1; j < m_; ++j) {
      if (!is_pivot[j]) free_pos_.emplace_back(i, j);
    }
  }
  free_vals_.assign(free_pos_.size(), 0);
}

bool SubspaceStream::advance() {
  // Odometer over the free entries, last position fastest.
  for (int i = static_cast<int>(free_vals_.size()) - 1; i >= 0; --i) {
    if (++free_vals_[i] < p_) return true;
    free_vals_[i] = 0;
  }
  // Next pivot-column combination in lexicographic order.
  for (int i = r_ - 1; i >= 0; --i) {
    if (pivots_[i] < m_ - (r_ - i)) {
      ++pivots_[i];
      for (int j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      recompute_free_positions();
      return true;
    }
  }
  return false;
}

bool SubspaceStream::next(Subspace& out) {
  if (done_) return false;
  out.p_ = p_;
  out.m_ = m_;
  out.rows_.assign(r_, std::vector<Scalar>(m_, 0));
  for (int i = 0; i < r_; ++i) out.rows_[i][pivots_[i]] = 1;
  for (std::size_t k = 0; k < free_pos_.size(); ++k) {
    out.rows_[free_pos_[k].first][free_pos_[k].second] = free_vals_[k];
  }
  if (!advance()) done_ = true;
  return true;
}

}  // namespace qfc
