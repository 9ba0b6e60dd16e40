#pragma once

// Bigraded Hilbert series of the diagonal invariants, brute-force dimension
// counts, degreewise rank checks of the basis, and the maj/inv
// equidistribution on Sigma_n.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bnsym/descent_basis.hpp"
#include "bnsym/error.hpp"
#include "bnsym/poly.hpp"
#include "bnsym/signed_perm.hpp"

namespace bnsym {

/// Largest a + b accepted by the brute-force dimension and rank routines.
inline constexpr int kDegreeGuard = 40;

/// Truncated bivariate power series with integer coefficients: entries
/// s^a t^b with a + b <= truncation are kept, the rest dropped.
class BiSeries {
public:
  explicit BiSeries(int truncation)
      : truncation_(truncation), coeffs_(static_cast<std::size_t>(truncation + 1),
                                         std::vector<std::int64_t>(static_cast<std::size_t>(truncation + 1), 0)) {
    if (truncation < 0)
      throw DomainError("negative truncation degree");
  }

  int truncation() const noexcept { return truncation_; }

  std::int64_t operator()(int a, int b) const {
    if (a < 0 || b < 0 || a + b > truncation_)
      return 0;
    return coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  void add(int a, int b, std::int64_t v) {
    if (a < 0 || b < 0 || a + b > truncation_)
      return;
    coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += v;
  }

  /// Nonzero coefficients keyed by (a, b).
  std::map<std::pair<int, int>, std::int64_t> terms() const {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (int a = 0; a <= truncation_; ++a)
      for (int b = 0; a + b <= truncation_; ++b)
        if (auto v = (*this)(a, b); v != 0)
          out.emplace(std::pair{a, b}, v);
    return out;
  }

  /// Sum of all coefficients (value at s = t = 1 of the truncation).
  std::int64_t total() const {
    std::int64_t sum = 0;
    for (const auto& [k, v] : terms())
      sum += v;
    return sum;
  }

  /// In-place division by (1 - s^step).
  void divide_by_one_minus_s(int step) {
    for (int a = step; a <= truncation_; ++a)
      for (int b = 0; a + b <= truncation_; ++b)
        coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
            coeffs_[static_cast<std::size_t>(a - step)][static_cast<std::size_t>(b)];
  }

  /// In-place division by (1 - t^step).
  void divide_by_one_minus_t(int step) {
    for (int a = 0; a <= truncation_; ++a)
      for (int b = step; a + b <= truncation_; ++b)
        coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +=
            coeffs_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - step)];
  }

  friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
  int truncation_;
  std::vector<std::vector<std::int64_t>> coeffs_;
};

/// sum over sigma in B_n of s^{fmaj(sigma^-1)} t^{fmaj(sigma)}, untruncated
/// (fmaj never exceeds n^2).
inline BiSeries fmaj_numerator(std::size_t n, std::size_t guard = kEnumerationGuard) {
  check_enumeration_guard(n, guard);
  const int top = static_cast<int>(2 * n * n);
  BiSeries out(top);
  for_each_signed_permutation(n, [&](const SignedPermutation& s) {
    out.add(fmaj(inverse(s)), fmaj(s), 1);
  }, guard);
  return out;
}

/// fmaj_numerator(n) / prod_{i=1..n} (1 - s^{2i})(1 - t^{2i}), truncated at
/// total degree `truncation`.
inline BiSeries hilbert_series(std::size_t n, int truncation, std::size_t guard = kEnumerationGuard) {
  const BiSeries numerator = fmaj_numerator(n, guard);
  BiSeries out(truncation);
  for (const auto& [key, v] : numerator.terms())
    out.add(key.first, key.second, v);
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    out.divide_by_one_minus_s(2 * i);
    out.divide_by_one_minus_t(2 * i);
  }
  return out;
}

inline std::int64_t series_coefficient(std::size_t n, int a, int b) {
  if (a < 0 || b < 0)
    throw DomainError("negative degree in series_coefficient");
  return hilbert_series(n, a + b)(a, b);
}

namespace detail {

inline void check_cell(std::size_t n, int a, int b, std::size_t guard) {
  check_enumeration_guard(n, guard);
  if (a < 0 || b < 0)
    throw DomainError("negative bidegree");
  if (a + b > kDegreeGuard)
    throw GuardError("total degree " + std::to_string(a + b) + " exceeds guard " +
                     std::to_string(kDegreeGuard));
}

} // namespace detail

/// dim_Q of the bidegree-(a, b) part of Q[x, y]^{B_n}: the number of ordered
/// monomials of that bidegree, since their orbit averages are nonzero and
/// have pairwise disjoint supports.
inline std::int64_t invariant_dimension(std::size_t n, int a, int b,
                                        std::size_t guard = kEnumerationGuard) {
  detail::check_cell(n, a, b, guard);
  return static_cast<std::int64_t>(ordered_monomials(n, {a, b}).size());
}

/// Rank of a family of rational vectors given as sparse rows over a common
/// column index; fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
inline std::size_t exact_rank(const std::vector<std::map<std::size_t, Rational>>& rows,
                              std::size_t columns) {
  std::vector<std::vector<Integer>> mat;
  mat.reserve(rows.size());
  for (const auto& row : rows) {
    Integer lcm = 1;
    for (const auto& [col, v] : row)
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
    std::vector<Integer> dense(columns, 0);
    for (const auto& [col, v] : row) {
      if (col >= columns)
        throw DomainError("column index out of range in exact_rank");
      dense[col] = boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v));
    }
    mat.push_back(std::move(dense));
  }
  std::size_t rank = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < columns && rank < mat.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < mat.size() && mat[pivot][col] == 0)
      ++pivot;
    if (pivot == mat.size())
      continue;
    std::swap(mat[pivot], mat[rank]);
    const Integer& p = mat[rank][col];
    for (std::size_t r = rank + 1; r < mat.size(); ++r) {
      for (std::size_t c = col + 1; c < columns; ++c)
        mat[r][c] = (p * mat[r][c] - mat[r][col] * mat[rank][c]) / prev_pivot;
      mat[r][col] = 0;
    }
    prev_pivot = p;
    ++rank;
  }
  return rank;
}

/// Rank of a family of polynomials as vectors over their joint support.
inline std::size_t polynomial_rank(const std::vector<Polynomial>& family) {
  std::map<Monomial, std::size_t> index;
  for (const auto& f : family)
    for (const auto& [m, c] : f)
      index.try_emplace(m, index.size());
  std::vector<std::map<std::size_t, Rational>> rows;
  rows.reserve(family.size());
  for (const auto& f : family) {
    std::map<std::size_t, Rational> row;
    for (const auto& [m, c] : f)
      row.emplace(index.at(m), c);
    rows.push_back(std::move(row));
  }
  return exact_rank(rows, index.size());
}

/// Non-increasing length-n sequences with the given sum (partitions with at
/// most n parts, padded with zeros).
inline std::vector<std::vector<int>> partitions(int total, std::size_t n) {
  std::vector<std::vector<int>> out;
  if (total < 0)
    return out;
  std::vector<int> current(n, 0);
  auto rec = [&](auto& self, std::size_t i, int rest, int bound) -> void {
    if (i == n) {
      if (rest == 0)
        out.push_back(current);
      return;
    }
    for (int v = std::min(rest, bound); v >= 0; --v) {
      if (static_cast<long>(v) * static_cast<long>(n - i) < rest)
        break;
      current[i] = v;
      self(self, i + 1, rest - v, v);
    }
    current[i] = 0;
  };
  rec(rec, 0, total, total);
  return out;
}

/// Outcome of the degreewise freeness check in one bidegree.
struct RankReport {
  std::size_t n = 0;
  int a = 0;
  int b = 0;
  std::int64_t rank = 0;
  std::int64_t dim = 0;
  std::int64_t series = 0;
  std::int64_t generators = 0;

  /// Spanning with exactly dim generators, matching the series.
  bool pass() const noexcept { return rank == dim && dim == series && generators == dim; }
};

/// The family { m_{2nu}(x) m_{2mu}(y) rho(c_sigma) } living in bidegree
/// (a, b): sigma with fmaj(sigma^-1) <= a, fmaj(sigma) <= b of matching
/// parity, nu and mu partitions of the remaining half-degrees.
inline std::vector<Polynomial> basis_generators(std::size_t n, int a, int b,
                                                std::size_t guard = kEnumerationGuard) {
  detail::check_cell(n, a, b, guard);
  std::vector<Polynomial> family;
  for_each_signed_permutation(n, [&](const SignedPermutation& s) {
    const int fx = fmaj(inverse(s));
    const int fy = fmaj(s);
    if (fx > a || fy > b || (a - fx) % 2 != 0 || (b - fy) % 2 != 0)
      return;
    const Polynomial base = rho(diagonal_signed_descent_monomial_c(s));
    for (const auto& nu : partitions((a - fx) / 2, n))
      for (const auto& mu : partitions((b - fy) / 2, n))
        family.push_back(monomial_sym_squares(nu, Family::x, n) *
                         monomial_sym_squares(mu, Family::y, n) * base);
  }, guard);
  return family;
}

inline RankReport verify_basis_rank(std::size_t n, int a, int b,
                                    std::size_t guard = kEnumerationGuard) {
  const auto family = basis_generators(n, a, b, guard);
  RankReport r;
  r.n = n;
  r.a = a;
  r.b = b;
  r.generators = static_cast<std::int64_t>(family.size());
  r.rank = static_cast<std::int64_t>(polynomial_rank(family));
  r.dim = invariant_dimension(n, a, b, guard);
  r.series = series_coefficient(n, a, b);
  return r;
}

/// True iff maj and inversion number are equidistributed over Sigma_n.
inline bool maj_inv_equidistribution(std::size_t n) {
  if (n == 0)
    throw DomainError("rank must be at least 1");
  if (n > 7)
    throw GuardError("maj/inv equidistribution check is limited to n <= 7, got " + std::to_string(n));
  std::map<int, std::int64_t> by_maj;
  std::map<int, std::int64_t> by_inv;
  for_each_permutation(n, [&](const SignedPermutation& p) {
    ++by_maj[maj(p)];
    ++by_inv[inversions(p)];
  });
  return by_maj == by_inv;
}

} // namespace bnsym
