#pragma once

// Exact sparse polynomials in x_1..x_n, y_1..y_n over the rationals, the
// diagonal action of B_n on them, and the averaging operator.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bnsym/error.hpp"
#include "bnsym/signed_perm.hpp"

namespace bnsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "num/den" with den >= 1.
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Accepts "num/den" or a bare integer.
inline Rational parse_fraction(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    if (s.empty())
      throw ParseError("malformed fraction '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size() ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("malformed fraction '" + text + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw ParseError("zero denominator in '" + text + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// Which alphabet a symmetric function is built in.
enum class Family { x, y };

/// x^p y^q, stored as one dense exponent vector (p_1..p_n, q_1..q_n).
class Monomial {
public:
  /// The unit monomial of rank n.
  explicit Monomial(std::size_t n) : exps_(2 * n, 0) {}

  Monomial(std::span<const int> p, std::span<const int> q) {
    if (p.size() != q.size())
      throw RankMismatch(p.size(), q.size());
    if (p.empty())
      throw DomainError("monomial rank must be at least 1");
    exps_.reserve(2 * p.size());
    exps_.insert(exps_.end(), p.begin(), p.end());
    exps_.insert(exps_.end(), q.begin(), q.end());
    for (int e : exps_)
      if (e < 0)
        throw DomainError("negative exponent " + std::to_string(e));
  }

  Monomial(std::initializer_list<int> p, std::initializer_list<int> q)
      : Monomial(std::span<const int>(p.begin(), p.size()), std::span<const int>(q.begin(), q.size())) {}

  std::size_t rank() const noexcept { return exps_.size() / 2; }
  std::span<const int> p() const noexcept { return {exps_.data(), rank()}; }
  std::span<const int> q() const noexcept { return {exps_.data() + rank(), rank()}; }
  std::span<int> p() noexcept { return {exps_.data(), rank()}; }
  std::span<int> q() noexcept { return {exps_.data() + rank(), rank()}; }
  std::span<const int> exponents() const noexcept { return exps_; }

  int x_degree() const noexcept {
    int s = 0;
    for (int e : p())
      s += e;
    return s;
  }
  int y_degree() const noexcept {
    int s = 0;
    for (int e : q())
      s += e;
    return s;
  }
  int degree() const noexcept { return x_degree() + y_degree(); }
  bool is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  /// True iff p_k + q_k is even for every k.
  bool has_even_columns() const noexcept {
    for (std::size_t k = 0; k < rank(); ++k)
      if ((exps_[k] + exps_[k + rank()]) % 2 != 0)
        return false;
    return true;
  }

  Monomial& operator*=(const Monomial& o) {
    if (o.rank() != rank())
      throw RankMismatch(rank(), o.rank());
    for (std::size_t i = 0; i < exps_.size(); ++i)
      exps_[i] += o.exps_[i];
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  /// "x1^3 x2 y4^2", or "1" for the unit.
  std::string to_string() const {
    std::string s;
    auto emit = [&](char var, std::span<const int> e) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!s.empty())
          s += ' ';
        s += var;
        s += std::to_string(i + 1);
        if (e[i] != 1)
          s += "^" + std::to_string(e[i]);
      }
    };
    emit('x', p());
    emit('y', q());
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
  std::vector<int> exps_;
};

/// Total x- and y-degree (|p|, |q|).
struct Bidegree {
  int a = 0;
  int b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

inline Bidegree bidegree(const Monomial& m) { return {m.x_degree(), m.y_degree()}; }

/// Finite sum of rational multiples of monomials, zero coefficients never
/// stored. Terms are kept in decreasing lexicographic order of exponent
/// vectors so iteration and serialization are canonical.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(std::size_t n) : n_(n) {
    if (n == 0)
      throw DomainError("polynomial rank must be at least 1");
  }

  explicit Polynomial(const Monomial& m, Rational c = 1) : n_(m.rank()) { add_term(m, std::move(c)); }

  static Polynomial constant(std::size_t n, Rational c) { return Polynomial(Monomial(n), std::move(c)); }

  std::size_t rank() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (m.rank() != n_)
      throw RankMismatch(n_, m.rank());
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_rank(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_rank(o);
    for (const auto& [m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, coeff] : terms_)
      coeff *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_rank(b);
    Polynomial out(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(ma * mb, ca * cb);
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// "1/2 x1^2 y1^2 - x2 y2 + 3", "0" for the zero polynomial.
  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      const bool unit = mag == 1;
      std::string coeff = boost::multiprecision::denominator(mag) == 1
                              ? boost::multiprecision::numerator(mag).str()
                              : to_fraction_string(mag);
      if (m.is_one())
        s += coeff;
      else
        s += (unit ? "" : coeff + " ") + m.to_string();
    }
    return s;
  }

private:
  void check_rank(const Polynomial& o) const {
    if (o.n_ != n_)
      throw RankMismatch(n_, o.n_);
  }

  std::size_t n_;
  Terms terms_;
};

/// Image of x^p y^q under sigma: x_i -> sgn(sigma(i)) x_|sigma(i)|, same for y.
inline std::pair<Monomial, int> act(const SignedPermutation& s, const Monomial& m) {
  if (s.rank() != m.rank())
    throw RankMismatch(s.rank(), m.rank());
  const std::size_t n = m.rank();
  Monomial out(n);
  int parity = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int target = s.window()[i];
    const auto j = static_cast<std::size_t>(std::abs(target) - 1);
    out.p()[j] = m.p()[i];
    out.q()[j] = m.q()[i];
    if (target < 0)
      parity += m.p()[i] + m.q()[i];
  }
  return {std::move(out), parity % 2 == 0 ? 1 : -1};
}

inline Polynomial act(const SignedPermutation& s, const Polynomial& f) {
  if (s.rank() != f.rank())
    throw RankMismatch(s.rank(), f.rank());
  Polynomial out(f.rank());
  for (const auto& [m, c] : f) {
    auto [image, sign] = act(s, m);
    out.add_term(image, sign > 0 ? c : Rational(-c));
  }
  return out;
}

/// sigma acting on a single alphabet, the other left fixed.
inline Polynomial act_on(Family family, const SignedPermutation& s, const Polynomial& f) {
  if (s.rank() != f.rank())
    throw RankMismatch(s.rank(), f.rank());
  const std::size_t n = f.rank();
  Polynomial out(n);
  for (const auto& [m, c] : f) {
    Monomial image = m;
    auto src = family == Family::x ? m.p() : m.q();
    auto dst = family == Family::x ? image.p() : image.q();
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int target = s.window()[i];
      dst[static_cast<std::size_t>(std::abs(target) - 1)] = src[i];
      if (target < 0)
        parity += src[i];
    }
    out.add_term(image, parity % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

/// First generator of B_n (see generators()) that moves f, if any.
inline std::optional<SignedPermutation> find_violated_generator(const Polynomial& f) {
  for (const auto& g : generators(f.rank()))
    if (!(act(g, f) == f))
      return g;
  return std::nullopt;
}

/// Diagonal B_n-invariance, checked on generators only.
inline bool is_invariant(const Polynomial& f) { return !find_violated_generator(f).has_value(); }

/// Invariance under B_n acting on x alone and on y alone, i.e. membership
/// in Q[x]^{B_n} (x) Q[y]^{B_n}.
inline bool is_separately_invariant(const Polynomial& f) {
  for (const auto& g : generators(f.rank()))
    if (!(act_on(Family::x, g, f) == f) || !(act_on(Family::y, g, f) == f))
      return false;
  return true;
}

/// Average of x^p y^q over B_n.
///
/// Zero when some column sum p_k + q_k is odd. Otherwise every sign change
/// acts trivially and the average reduces to the Sigma_n orbit: each
/// distinct rearrangement of the columns (p_k, q_k) gets weight 1/|orbit|.
inline Polynomial rho(const Monomial& m) {
  const std::size_t n = m.rank();
  Polynomial out(n);
  if (!m.has_even_columns())
    return out;
  std::vector<std::pair<int, int>> cols(n);
  for (std::size_t k = 0; k < n; ++k)
    cols[k] = {m.p()[k], m.q()[k]};
  std::sort(cols.begin(), cols.end());
  std::vector<Monomial> orbit;
  do {
    Monomial image(n);
    for (std::size_t k = 0; k < n; ++k) {
      image.p()[k] = cols[k].first;
      image.q()[k] = cols[k].second;
    }
    orbit.push_back(std::move(image));
  } while (std::next_permutation(cols.begin(), cols.end()));
  const Rational weight(Integer(1), Integer(orbit.size()));
  for (const auto& image : orbit)
    out.add_term(image, weight);
  return out;
}

inline Polynomial rho(const Polynomial& f) {
  Polynomial out(f.rank());
  for (const auto& [m, c] : f)
    out += rho(m) * c;
  return out;
}

/// e_k(x_1^2, ..., x_n^2) or the same in y.
inline Polynomial elementary_sym_squares(int k, Family family, std::size_t n) {
  if (k < 1 || k > static_cast<int>(n))
    throw DomainError("elementary symmetric index " + std::to_string(k) + " outside 1.." +
                      std::to_string(n));
  std::vector<int> chooser(n, 0);
  std::fill(chooser.begin(), chooser.begin() + k, 1);
  Polynomial out(n);
  // prev_permutation walks all 0/1 vectors with k ones.
  do {
    std::vector<int> doubled(n);
    for (std::size_t i = 0; i < n; ++i)
      doubled[i] = 2 * chooser[i];
    const std::vector<int> zeros(n, 0);
    out.add_term(family == Family::x ? Monomial(doubled, zeros) : Monomial(zeros, doubled), 1);
  } while (std::prev_permutation(chooser.begin(), chooser.end()));
  return out;
}

/// m_{2 lambda}: sum of x^{2 alpha(lambda)} over distinct rearrangements.
inline Polynomial monomial_sym_squares(std::span<const int> lambda, Family family, std::size_t n) {
  if (lambda.size() != n)
    throw RankMismatch(n, lambda.size());
  std::vector<int> parts(lambda.begin(), lambda.end());
  for (int v : parts)
    if (v < 0)
      throw DomainError("negative part " + std::to_string(v));
  std::sort(parts.begin(), parts.end());
  Polynomial out(n);
  const std::vector<int> zeros(n, 0);
  do {
    std::vector<int> doubled(n);
    for (std::size_t i = 0; i < n; ++i)
      doubled[i] = 2 * parts[i];
    out.add_term(family == Family::x ? Monomial(doubled, zeros) : Monomial(zeros, doubled), 1);
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

inline std::map<Bidegree, Polynomial> bidegree_components(const Polynomial& f) {
  std::map<Bidegree, Polynomial> parts;
  for (const auto& [m, c] : f) {
    auto it = parts.try_emplace(bidegree(m), f.rank()).first;
    it->second.add_term(m, c);
  }
  return parts;
}

inline bool is_bihomogeneous(const Polynomial& f, Bidegree bd) {
  return std::all_of(f.begin(), f.end(), [&](const auto& t) { return bidegree(t.first) == bd; });
}

} // namespace bnsym
