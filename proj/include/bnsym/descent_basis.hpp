#pragma once

// Descent monomials (a, b, e, c), ordered monomials and their total order,
// the signed index permutation, and the exponent decomposition
// x^p y^q = x^{2 nu} y^{2 mu} c_sigma.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "bnsym/error.hpp"
#include "bnsym/poly.hpp"
#include "bnsym/signed_perm.hpp"

namespace bnsym {

namespace detail {

inline void require_positive(const SignedPermutation& s, const char* what) {
  if (!s.is_positive())
    throw DomainError(std::string(what) + " requires a permutation with positive window, got " +
                      s.to_string());
}

} // namespace detail

/// Sign twist: identity on even integers, negation on odd ones.
constexpr int sign_twist(int v) noexcept { return v % 2 == 0 ? v : -v; }

namespace detail {

inline std::vector<int> twisted(std::span<const int> q) {
  std::vector<int> out(q.size());
  std::transform(q.begin(), q.end(), out.begin(), sign_twist);
  return out;
}

} // namespace detail

/// Garsia-Stanton descent monomial a_pi = prod x_{pi(i)}^{d_i(pi)}.
inline Monomial descent_monomial_a(const SignedPermutation& pi) {
  detail::require_positive(pi, "descent_monomial_a");
  const auto st = statistics(pi);
  Monomial m(pi.rank());
  for (std::size_t i = 0; i < pi.rank(); ++i)
    m.p()[static_cast<std::size_t>(pi.window()[i] - 1)] = st.d[i];
  return m;
}

/// Signed descent monomial b_sigma = prod x_{|sigma(i)|}^{f_i(sigma)}.
inline Monomial signed_descent_monomial_b(const SignedPermutation& s) {
  const auto st = statistics(s);
  Monomial m(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i)
    m.p()[static_cast<std::size_t>(std::abs(s.window()[i]) - 1)] = st.f[i];
  return m;
}

/// Diagonal descent monomial e_pi = prod x_i^{d_i(pi^-1)} y_{pi(i)}^{d_i(pi)}.
inline Monomial diagonal_descent_monomial_e(const SignedPermutation& pi) {
  detail::require_positive(pi, "diagonal_descent_monomial_e");
  const auto st = statistics(pi);
  const auto st_inv = statistics(inverse(pi));
  Monomial m(pi.rank());
  for (std::size_t i = 0; i < pi.rank(); ++i) {
    m.p()[i] = st_inv.d[i];
    m.q()[static_cast<std::size_t>(pi.window()[i] - 1)] = st.d[i];
  }
  return m;
}

/// c_sigma = prod x_i^{f_i(sigma^-1)} y_{|sigma(i)|}^{f_i(sigma)}.
inline Monomial diagonal_signed_descent_monomial_c(const SignedPermutation& s) {
  const auto f = flag_sequence(s);
  const auto f_inv = flag_sequence(inverse(s));
  Monomial m(s.rank());
  for (std::size_t i = 0; i < s.rank(); ++i) {
    m.p()[i] = f_inv[i];
    m.q()[static_cast<std::size_t>(std::abs(s.window()[i]) - 1)] = f[i];
  }
  return m;
}

/// Membership in O_n: even column sums and (p_i, twist(q_i)) weakly
/// decreasing in lexicographic order.
inline bool is_ordered(const Monomial& m) {
  if (!m.has_even_columns())
    return false;
  for (std::size_t i = 0; i + 1 < m.rank(); ++i) {
    const std::pair<int, int> here{m.p()[i], sign_twist(m.q()[i])};
    const std::pair<int, int> next{m.p()[i + 1], sign_twist(m.q()[i + 1])};
    if (here < next)
      return false;
  }
  return true;
}

/// The unique ordered monomial in the Sigma_n-orbit of m (so rho agrees).
inline Monomial ordered_representative(const Monomial& m) {
  if (!m.has_even_columns())
    throw DomainError("no ordered representative: odd column sum in " + m.to_string());
  const std::size_t n = m.rank();
  std::vector<std::pair<int, int>> cols(n);
  for (std::size_t k = 0; k < n; ++k)
    cols[k] = {m.p()[k], sign_twist(m.q()[k])};
  std::stable_sort(cols.begin(), cols.end(), std::greater<>());
  Monomial out(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.p()[k] = cols[k].first;
    out.q()[k] = sign_twist(cols[k].second); // twist is an involution
  }
  return out;
}

namespace detail {

inline void require_ordered(const Monomial& m, const char* what) {
  if (!is_ordered(m))
    throw DomainError(std::string(what) + " requires an ordered monomial, got " + m.to_string());
}

} // namespace detail

/// The signed index permutation of an ordered monomial: sorts q decreasingly
/// along |sigma(1)|, ..., |sigma(n)|, signs follow the parity of q, and equal
/// q-values appear with increasing window entries.
inline SignedPermutation signed_index_permutation(const Monomial& m) {
  detail::require_ordered(m, "signed_index_permutation");
  const auto q = m.q();
  std::vector<int> w(m.rank());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const int index = static_cast<int>(j) + 1;
    w[j] = q[j] % 2 == 0 ? index : -index;
  }
  std::sort(w.begin(), w.end(), [&](int a, int b) {
    const int qa = q[static_cast<std::size_t>(std::abs(a) - 1)];
    const int qb = q[static_cast<std::size_t>(std::abs(b) - 1)];
    if (qa != qb)
      return qa > qb;
    return a < b;
  });
  return SignedPermutation(std::move(w));
}

/// Decreasing rearrangement of p followed by that of q.
inline std::vector<int> ordering_key(const Monomial& m) {
  std::vector<int> p(m.p().begin(), m.p().end());
  std::vector<int> q(m.q().begin(), m.q().end());
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(q.begin(), q.end(), std::greater<>());
  p.insert(p.end(), q.begin(), q.end());
  return p;
}

/// Total order on O_n: sorted exponents first, then (p, twist(q)).
inline std::strong_ordering compare(const Monomial& m, const Monomial& w) {
  if (m.rank() != w.rank())
    throw RankMismatch(m.rank(), w.rank());
  detail::require_ordered(m, "compare");
  detail::require_ordered(w, "compare");
  if (auto c = ordering_key(m) <=> ordering_key(w); c != 0)
    return c;
  if (auto c = std::lexicographical_compare_three_way(m.p().begin(), m.p().end(), w.p().begin(),
                                                      w.p().end());
      c != 0)
    return c;
  return detail::twisted(m.q()) <=> detail::twisted(w.q());
}

/// Witness of x^p y^q = x^{2 nu} y^{2 mu} c_sigma.
struct Decomposition {
  SignedPermutation sigma;
  std::vector<int> nu;
  std::vector<int> delta;
  std::vector<int> mu;
  std::vector<int> gamma;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Splits an ordered monomial along its signed index permutation.
/// The returned pieces satisfy every structural property of the
/// decomposition; a violation throws InternalError.
inline Decomposition decompose(const Monomial& m) {
  detail::require_ordered(m, "decompose");
  const std::size_t n = m.rank();
  SignedPermutation sigma = signed_index_permutation(m);
  const SignedPermutation sigma_inv = inverse(sigma);
  const auto f = flag_sequence(sigma);
  const auto f_inv = flag_sequence(sigma_inv);

  Decomposition out{sigma, std::vector<int>(n), std::vector<int>(n), std::vector<int>(n),
                    std::vector<int>(n)};
  auto fail = [&](const std::string& what) {
    throw InternalError("decompose(" + m.to_string() + "): " + what);
  };
  for (std::size_t i = 0; i < n; ++i) {
    out.delta[i] = f_inv[i];
    out.gamma[static_cast<std::size_t>(std::abs(sigma.window()[i]) - 1)] = f[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int dp = m.p()[i] - out.delta[i];
    const int dq = m.q()[i] - out.gamma[i];
    if (dp < 0 || dp % 2 != 0)
      fail("p - delta not non-negative even at " + std::to_string(i + 1));
    if (dq < 0 || dq % 2 != 0)
      fail("q - gamma not non-negative even at " + std::to_string(i + 1));
    out.nu[i] = dp / 2;
    out.mu[i] = dq / 2;
  }
  auto along_sigma = [&](const std::vector<int>& v, std::size_t i) {
    return v[static_cast<std::size_t>(std::abs(sigma.window()[i]) - 1)];
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (out.nu[i] < out.nu[i + 1] || out.delta[i] < out.delta[i + 1])
      fail("nu or delta not decreasing");
    if (along_sigma(out.mu, i) < along_sigma(out.mu, i + 1) ||
        along_sigma(out.gamma, i) < along_sigma(out.gamma, i + 1))
      fail("mu or gamma not decreasing along sigma");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ties = out.delta[i] == out.delta[j] || out.gamma[i] == out.gamma[j];
      if (ties && sign_twist(m.q()[i]) < sign_twist(m.q()[j]))
        fail("tie condition violated at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return out;
}

} // namespace bnsym

namespace bnsym {

/// All monomials of O_n with bidegree (a, b), in decreasing lexicographic
/// order of exponent vectors. Their averages rho(m) form a Q-basis of the
/// bidegree-(a, b) component of the diagonal invariants.
inline std::vector<Monomial> ordered_monomials(std::size_t n, Bidegree bd) {
  std::vector<Monomial> out;
  if (n == 0 || bd.a < 0 || bd.b < 0)
    return out;
  Monomial current(n);
  auto rec = [&](auto& self, std::size_t i, int rest_a, int rest_b, std::pair<int, int> bound) -> void {
    if (i == n) {
      if (rest_a == 0 && rest_b == 0)
        out.push_back(current);
      return;
    }
    for (int p = std::min(rest_a, bound.first); p >= 0; --p) {
      // The remaining n - i columns have p-entries at most p each.
      if (static_cast<long>(p) * static_cast<long>(n - i) < rest_a)
        break;
      for (int q = rest_b - ((rest_b - p) % 2 != 0 ? 1 : 0); q >= 0; q -= 2) {
        const std::pair<int, int> key{p, sign_twist(q)};
        if (key > bound)
          continue;
        current.p()[i] = p;
        current.q()[i] = q;
        self(self, i + 1, rest_a - p, rest_b - q, key);
      }
    }
    current.p()[i] = 0;
    current.q()[i] = 0;
  };
  rec(rec, 0, bd.a, bd.b, {bd.a, std::max(bd.b, 1) + 1});
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

} // namespace bnsym
