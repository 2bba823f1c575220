#include "qfc/field.hpp"

#include <stdexcept>
#include <utility>

#include "modmat.hpp"

namespace qfc {

namespace {

using detail::inv_mod;
using detail::mod_p;

constexpr std::int64_t kMaxOrder = std::int64_t{1} << 24;

// Dense ascending-degree polynomials over F_p, trailing zeros trimmed.
using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, Scalar p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = mod_p(out[i + j] + a[i] * b[j], p);
    }
  }
  trim(out);
  return out;
}

// Remainder of a modulo mod; mod need not be monic.
Poly poly_mod(Poly a, const Poly& mod, Scalar p) {
  trim(a);
  const int dm = degree(mod);
  Scalar lead_inv = inv_mod(mod.back(), p);
  while (degree(a) >= dm) {
    Scalar c = mod_p(a.back() * lead_inv, p);
    int shift = degree(a) - dm;
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = mod_p(a[i + shift] - c * mod[i], p);
    }
    trim(a);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, Scalar p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], p);
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, Scalar p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar iv = inv_mod(a.back(), p);
    for (auto& c : a) c = mod_p(c * iv, p);
  }
  return a;
}

Poly poly_powmod(Poly base, Scalar e, const Poly& mod, Scalar p) {
  Poly result{1};
  base = poly_mod(std::move(base), mod, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), mod, p);
    base = poly_mod(poly_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

bool has_root(const Poly& f, Scalar p) {
  for (Scalar r = 0; r < p; ++r) {
    Scalar acc = 0, x = 1;
    for (Scalar c : f) {
      acc = mod_p(acc + c * x, p);
      x = mod_p(x * r, p);
    }
    if (acc == 0) return true;
  }
  return false;
}

// Monic f of degree m >= 1. Degrees 2 and 3 are reducible exactly when they
// have a root; otherwise f is irreducible iff gcd(f, x^{p^i} - x) is trivial
// for every i <= m/2, since any proper factorization contains an irreducible
// factor of degree at most m/2 and such a factor divides x^{p^i} - x.
bool is_irreducible(const Poly& f, Scalar p) {
  const int m = degree(f);
  if (m == 1) return true;
  if (m <= 3) return !has_root(f, p);
  Poly g{0, 1};  // x
  const Poly x{0, 1};
  for (int i = 1; i <= m / 2; ++i) {
    g = poly_powmod(std::move(g), p, f, p);
    Poly d = poly_gcd(f, poly_sub(g, x, p), p);
    if (degree(d) > 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(Scalar n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Scalar d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int quadratic_character(Scalar c, Scalar p) {
  c = mod_p(c, p);
  if (c == 0) return 0;
  Scalar e = (p - 1) / 2;
  Scalar acc = 1, base = c;
  while (e > 0) {
    if (e & 1) acc = mod_p(acc * base, p);
    base = mod_p(base * base, p);
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

Scalar smallest_nonresidue(Scalar p) {
  for (Scalar c = 2; c < p; ++c) {
    if (quadratic_character(c, p) == -1) return c;
  }
  throw std::invalid_argument("smallest_nonresidue: no non-residue below p");
}

bool FieldElement::is_zero() const {
  for (Scalar c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(Scalar p, int m) : p_(p), m_(m), modulus_(default_modulus(p, m)) {
  init();
}

FieldSpec::FieldSpec(Scalar p, int m, std::vector<Scalar> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  init();
}

std::vector<Scalar> FieldSpec::default_modulus(Scalar p, int m) {
  if (!is_prime(p) || p == 2) {
    throw std::invalid_argument("default_modulus: p must be an odd prime");
  }
  if (m < 1) throw std::invalid_argument("default_modulus: m must be positive");
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) {
    count *= p;
    if (count > kMaxOrder) {
      throw std::invalid_argument("default_modulus: p^m exceeds the supported range");
    }
  }
  // Candidates in increasing integer encoding of the low coefficients; the
  // first irreducible one wins, which pins the modulus deterministically.
  for (std::int64_t enc = 0; enc < count; ++enc) {
    Poly f(m + 1, 0);
    std::int64_t v = enc;
    for (int i = 0; i < m; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("default_modulus: no irreducible polynomial found");
}

void FieldSpec::init() {
  if (!is_prime(p_) || p_ == 2) {
    throw std::invalid_argument("FieldSpec: p must be an odd prime");
  }
  if (m_ < 1) throw std::invalid_argument("FieldSpec: m must be positive");
  if (static_cast<int>(modulus_.size()) != m_ + 1) {
    throw std::invalid_argument("FieldSpec: modulus must have m+1 coefficients");
  }
  for (auto& c : modulus_) c = mod_p(c, p_);
  if (modulus_[m_] != 1) {
    throw std::invalid_argument("FieldSpec: modulus must be monic of degree m");
  }
  if (!is_irreducible(modulus_, p_)) {
    throw std::invalid_argument("FieldSpec: modulus is reducible over F_p");
  }

  order_ = 1;
  for (int i = 0; i < m_; ++i) {
    order_ *= p_;
    if (order_ > kMaxOrder) {
      throw std::invalid_argument("FieldSpec: p^m exceeds the supported range");
    }
  }

  // x^{m+k} mod modulus for k = 0 .. m-2, so products reduce by table lookup.
  xpow_.assign(std::max(0, m_ - 1), std::vector<Scalar>(m_, 0));
  if (m_ >= 2) {
    for (int i = 0; i < m_; ++i) xpow_[0][i] = mod_p(-modulus_[i], p_);
    for (int k = 1; k < m_ - 1; ++k) {
      const auto& prev = xpow_[k - 1];
      auto& cur = xpow_[k];
      Scalar top = prev[m_ - 1];
      for (int i = m_ - 1; i >= 1; --i) cur[i] = prev[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (int i = 0; i < m_; ++i) cur[i] = mod_p(cur[i] + top * xpow_[0][i], p_);
      }
    }
  }

  // Trace is F_p-linear, so traces of the basis powers determine it.
  trace_of_basis_.assign(m_, 0);
  for (int i = 0; i < m_; ++i) {
    FieldElement e = zero();
    e.coeffs[i] = 1;
    FieldElement acc = e;
    FieldElement y = e;
    for (int j = 1; j < m_; ++j) {
      y = pow(y, static_cast<std::uint64_t>(p_));
      acc = add(acc, y);
    }
    for (int j = 1; j < m_; ++j) {
      if (acc.coeffs[j] != 0) {
        throw std::logic_error("FieldSpec: trace of basis element left the prime field");
      }
    }
    trace_of_basis_[i] = acc.coeffs[0];
  }
}

FieldElement FieldSpec::zero() const { return FieldElement{std::vector<Scalar>(m_, 0)}; }

FieldElement FieldSpec::one() const { return from_scalar(1); }

FieldElement FieldSpec::from_scalar(Scalar c) const {
  FieldElement e = zero();
  e.coeffs[0] = mod_p(c, p_);
  return e;
}

FieldElement FieldSpec::element(std::int64_t index) const {
  if (index < 0 || index >= order_) {
    throw std::invalid_argument("FieldSpec::element: index out of range");
  }
  FieldElement e = zero();
  for (int i = 0; i < m_; ++i) {
    e.coeffs[i] = index % p_;
    index /= p_;
  }
  return e;
}

std::int64_t FieldSpec::index_of(const FieldElement& x) const {
  std::int64_t enc = 0, base = 1;
  for (int i = 0; i < m_; ++i) {
    enc += mod_p(x.coeffs[i], p_) * base;
    base *= p_;
  }
  return enc;
}

std::vector<FieldElement> FieldSpec::all_elements() const {
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t k = 0; k < order_; ++k) out.push_back(element(k));
  return out;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (int i = 0; i < m_; ++i) out.coeffs[i] = mod_p(a.coeffs[i] + b.coeffs[i], p_);
  return out;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (int i = 0; i < m_; ++i) out.coeffs[i] = mod_p(a.coeffs[i] - b.coeffs[i], p_);
  return out;
}

FieldElement FieldSpec::neg(const FieldElement& a) const {
  FieldElement out = zero();
  for (int i = 0; i < m_; ++i) out.coeffs[i] = mod_p(-a.coeffs[i], p_);
  return out;
}

FieldElement FieldSpec::scale(Scalar c, const FieldElement& a) const {
  FieldElement out = zero();
  c = mod_p(c, p_);
  for (int i = 0; i < m_; ++i) out.coeffs[i] = mod_p(c * a.coeffs[i], p_);
  return out;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  std::vector<Scalar> conv(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < m_; ++j) {
      conv[i + j] = mod_p(conv[i + j] + a.coeffs[i] * b.coeffs[j], p_);
    }
  }
  FieldElement out = zero();
  for (int i = 0; i < m_; ++i) out.coeffs[i] = conv[i];
  for (int k = 0; k < m_ - 1; ++k) {
    Scalar t = conv[m_ + k];
    if (t == 0) continue;
    for (int i = 0; i < m_; ++i) {
      out.coeffs[i] = mod_p(out.coeffs[i] + t * xpow_[k][i], p_);
    }
  }
  return out;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  if (a.is_zero()) throw std::domain_error("FieldSpec::inv: zero has no inverse");
  // Extended Euclid in F_p[x] against the modulus.
  Poly r0 = modulus_;
  Poly r1 = a.coeffs;
  trim(r1);
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    // Division step: r0 = q*r1 + r2, tracked on the t side.
    Poly q(std::max<std::size_t>(r0.size(), 1), 0);
    Poly rem = r0;
    Scalar lead_inv = inv_mod(r1.back(), p_);
    while (degree(rem) >= degree(r1)) {
      Scalar c = mod_p(rem.back() * lead_inv, p_);
      int shift = degree(rem) - degree(r1);
      q[shift] = mod_p(q[shift] + c, p_);
      for (std::size_t i = 0; i < r1.size(); ++i) {
        rem[i + shift] = mod_p(rem[i + shift] - c * r1[i], p_);
      }
      trim(rem);
    }
    trim(q);
    Poly t2 = poly_sub(t0, poly_mul(q, t1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 is now gcd(a, modulus), a nonzero constant since the modulus is
  // irreducible and a != 0.
  Scalar scale_by = inv_mod(r0[0], p_);
  FieldElement out = zero();
  for (std::size_t i = 0; i < t0.size(); ++i) out.coeffs[i] = mod_p(t0[i] * scale_by, p_);
  return out;
}

FieldElement FieldSpec::pow(FieldElement base, std::uint64_t e) const {
  FieldElement acc = one();
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Scalar FieldSpec::trace(const FieldElement& x) const {
  Scalar acc = 0;
  for (int i = 0; i < m_; ++i) acc = mod_p(acc + x.coeffs[i] * trace_of_basis_[i], p_);
  return acc;
}

int FieldSpec::quadratic_character(const FieldElement& x) const {
  if (x.is_zero()) return 0;
  FieldElement y = pow(x, static_cast<std::uint64_t>((order_ - 1) / 2));
  if (y == one()) return 1;
  if (y == from_scalar(-1)) return -1;
  throw std::logic_error("FieldSpec::quadratic_character: x^((q-1)/2) is not +-1");
}

FieldElement smallest_nonsquare(const FieldSpec& spec) {
  for (std::int64_t k = 1; k < spec.order(); ++k) {
    FieldElement x = spec.element(k);
    if (spec.quadratic_character(x) == -1) return x;
  }
  throw std::logic_error("smallest_nonsquare: field has no non-square");
}

}  // namespace qfc
