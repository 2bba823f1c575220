#include "qfc/formulas.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "modmat.hpp"

namespace qfc {

using detail::mod_p;

Scalar pow_int(Scalar base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow_int: negative exponent");
  Scalar out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<Scalar>::max() / base) {
      throw std::overflow_error("pow_int: overflow");
    }
    out *= base;
  }
  return out;
}

Scalar v_func(Scalar x, Scalar p) {
  return mod_p(x, p) == 0 ? p - 1 : -1;
}

namespace {

// eta((-1)^k) over F_p: 1 for even k, else the character of -1.
int character_of_minus_one_power(int k, Scalar p) {
  if (k % 2 == 0) return 1;
  return quadratic_character(p - 1, p);
}

}  // namespace

Scalar level_set_intersection_count(int d, int rank, int sign, Scalar a, Scalar p) {
  if (!is_prime(p) || p == 2) {
    throw std::invalid_argument("level_set_intersection_count: p must be an odd prime");
  }
  if (d < 0 || rank < 0 || rank > d) {
    throw std::invalid_argument("level_set_intersection_count: need 0 <= rank <= dim");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("level_set_intersection_count: sign must be +-1");
  }
  a = mod_p(a, p);
  if (rank == 0) return a == 0 ? pow_int(p, d) : 0;
  Scalar base = pow_int(p, d - 1);
  if (rank % 2 == 0) {
    int chi = character_of_minus_one_power(rank / 2, p);
    return base + v_func(a, p) * chi * sign * pow_int(p, d - (rank + 2) / 2);
  }
  if (a == 0) return base;
  int chi = character_of_minus_one_power((rank - 1) / 2, p);
  return base + chi * quadratic_character(a, p) * sign * pow_int(p, d - (rank + 1) / 2);
}

Scalar predicted_length(Scalar p, int m, int epsilon, Scalar a) {
  Scalar full = level_set_intersection_count(m, m, epsilon, a, p);
  return mod_p(a, p) == 0 ? full - 1 : full;
}

namespace {

Scalar checked_branch_pair(Scalar first, Scalar second) {
  if (first != second) {
    throw std::logic_error("closed_form_hierarchy: overlapping branches disagree");
  }
  return first;
}

}  // namespace

HierarchyPrediction closed_form_hierarchy(Scalar p, int m, int epsilon, Scalar a) {
  if (m < 3) {
    throw std::domain_error(
        "closed_form_hierarchy: m must be at least 3; for m <= 2 the code can "
        "degenerate below dimension m and the piecewise formulas do not apply");
  }
  if (epsilon != 1 && epsilon != -1) {
    throw std::invalid_argument("closed_form_hierarchy: epsilon must be +-1");
  }
  a = mod_p(a, p);

  HierarchyPrediction out;
  out.theorem = select_theorem(p, m, epsilon, a);
  out.weights.resize(m);

  const int sigma = master_sign(p, m);
  const Scalar signed_eps = static_cast<Scalar>(sigma) * epsilon;
  const Scalar lead = pow_int(p, m - 1);

  switch (out.theorem) {
    case TheoremTag::kT1: {
      // m even, a != 0.
      const Scalar half = pow_int(p, (m - 2) / 2);
      auto low = [&](int r) { return lead - pow_int(p, m - r - 1) - (signed_eps + 1) * half; };
      auto mid = [&](int r) { return lead - 2 * pow_int(p, m - r - 1) - signed_eps * half; };
      for (int r = 1; r <= m; ++r) {
        if (2 * r < m) out.weights[r - 1] = low(r);
        else if (2 * r == m) out.weights[r - 1] = checked_branch_pair(low(r), mid(r));
        else if (r < m) out.weights[r - 1] = mid(r);
        else out.weights[r - 1] = lead - signed_eps * half;
      }
      break;
    }
    case TheoremTag::kT2: {
      // m odd, eta(a) matching the sign pattern; m odd keeps 2r != m.
      const Scalar half = pow_int(p, (m - 1) / 2);
      for (int r = 1; r <= m; ++r) {
        if (2 * r < m) out.weights[r - 1] = lead - pow_int(p, m - r - 1);
        else if (r < m) out.weights[r - 1] = lead + half - 2 * pow_int(p, m - r - 1);
        else out.weights[r - 1] = lead + half;
      }
      break;
    }
    case TheoremTag::kT3: {
      const Scalar half = pow_int(p, (m - 1) / 2);
      const Scalar quarter = pow_int(p, (m - 3) / 2);
      for (int r = 1; r <= m; ++r) {
        if (2 * r < m) out.weights[r - 1] = lead - pow_int(p, m - r - 1) - half - quarter;
        else if (r < m) out.weights[r - 1] = lead - half - 2 * pow_int(p, m - r - 1);
        else out.weights[r - 1] = lead - half;
      }
      break;
    }
    case TheoremTag::kT4: {
      // m even, a = 0, epsilon equal to the master sign.
      const Scalar bump = (p - 1) * pow_int(p, (m - 2) / 2);
      auto low = [&](int r) { return lead - pow_int(p, m - r - 1); };
      auto high = [&](int r) { return lead + bump - pow_int(p, m - r); };
      for (int r = 1; r <= m; ++r) {
        if (2 * r < m) out.weights[r - 1] = low(r);
        else if (2 * r == m) out.weights[r - 1] = checked_branch_pair(low(r), high(r));
        else out.weights[r - 1] = high(r);
      }
      break;
    }
    case TheoremTag::kT5: {
      // m even, a = 0, epsilon opposite to the master sign.
      const Scalar bump = (p - 1) * pow_int(p, (m - 2) / 2);
      const Scalar dip = (p - 1) * (pow_int(p, (m - 2) / 2) + pow_int(p, (m - 4) / 2));
      for (int r = 1; r <= m; ++r) {
        if (r == 1) out.weights[0] = (p - 1) * (pow_int(p, m - 2) - pow_int(p, (m - 2) / 2));
        else if (2 * r <= m) out.weights[r - 1] = lead - pow_int(p, m - r - 1) - dip;
        else out.weights[r - 1] = lead - pow_int(p, m - r) - bump;
      }
      break;
    }
    case TheoremTag::kT6: {
      // m odd, a = 0.
      const Scalar dip = (p - 1) * pow_int(p, (m - 3) / 2);
      for (int r = 1; r <= m; ++r) {
        if (2 * r < m) out.weights[r - 1] = lead - pow_int(p, m - r - 1) - dip;
        else out.weights[r - 1] = lead - pow_int(p, m - r);
      }
      break;
    }
  }

  out.length = predicted_length(p, m, epsilon, a);
  if (out.weights.back() != out.length) {
    throw std::logic_error("closed_form_hierarchy: d_m differs from the predicted length");
  }
  for (int r = 1; r <= m; ++r) {
    Scalar d_r = out.weights[r - 1];
    if (r > 1 && d_r <= out.weights[r - 2]) {
      throw std::logic_error("closed_form_hierarchy: hierarchy is not strictly increasing");
    }
    if (d_r > out.length - m + r) {
      throw std::logic_error("closed_form_hierarchy: Singleton bound violated");
    }
  }
  return out;
}

}  // namespace qfc
