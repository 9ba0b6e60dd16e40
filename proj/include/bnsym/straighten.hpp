#pragma once

// Expansion of diagonally signed-symmetric polynomials in the free basis
// {rho(c_sigma)} over R^{B_n} = Q[x]^{B_n} (x) Q[y]^{B_n}.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bnsym/descent_basis.hpp"
#include "bnsym/error.hpp"
#include "bnsym/poly.hpp"
#include "bnsym/signed_perm.hpp"

namespace bnsym {

/// f = sum over sigma of entries[sigma] * rho(c_sigma), each entry a
/// polynomial in R^{B_n}. Zero entries are never stored.
class BasisExpansion {
public:
  using Entries = std::map<SignedPermutation, Polynomial>;

  explicit BasisExpansion(std::size_t n) : n_(n) {}

  std::size_t rank() const noexcept { return n_; }
  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  const Polynomial* find(const SignedPermutation& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void add(const SignedPermutation& s, const Polynomial& coeff) {
    if (s.rank() != n_)
      throw RankMismatch(n_, s.rank());
    if (coeff.rank() != n_)
      throw RankMismatch(n_, coeff.rank());
    if (coeff.is_zero())
      return;
    auto [it, inserted] = entries_.try_emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero())
        entries_.erase(it);
    }
  }

  BasisExpansion& operator+=(const BasisExpansion& o) {
    if (o.n_ != n_)
      throw RankMismatch(n_, o.n_);
    for (const auto& [s, c] : o.entries_)
      add(s, c);
    return *this;
  }

  friend bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

private:
  std::size_t n_;
  Entries entries_;
};

/// Ordered monomial of f that is maximal for compare(), with its coefficient.
struct LeadingTerm {
  Monomial monomial;
  Rational coefficient;
};

namespace detail {

inline std::optional<LeadingTerm> leading_ordered_term(const Polynomial& f) {
  std::optional<LeadingTerm> best;
  for (const auto& [m, c] : f) {
    if (!is_ordered(m))
      continue;
    if (!best || compare(m, best->monomial) > 0)
      best = LeadingTerm{m, c};
  }
  return best;
}

inline void require_invariant(const Polynomial& f) {
  if (auto g = find_violated_generator(f))
    throw NotInvariant("polynomial is not invariant: moved by generator " + g->to_string());
}

} // namespace detail

inline LeadingTerm leading_term(const Polynomial& f, Bidegree bd) {
  if (f.is_zero())
    throw DomainError("leading_term of the zero polynomial");
  if (!is_bihomogeneous(f, bd))
    throw DomainError("leading_term: polynomial is not bihomogeneous of bidegree (" +
                      std::to_string(bd.a) + "," + std::to_string(bd.b) + ")");
  detail::require_invariant(f);
  auto lt = detail::leading_ordered_term(f);
  if (!lt)
    throw InternalError("nonzero invariant without an ordered monomial");
  return *lt;
}

/// One reduction: removes the leading ordered monomial m of f by
/// subtracting scale * m_{2nu}(x) m_{2mu}(y) rho(c_sigma).
struct ReductionStep {
  Monomial leading;
  Rational leading_coefficient;
  Decomposition decomposition;
  /// Coefficient of m in m_{2nu}(x) m_{2mu}(y) rho(c_sigma); always > 0.
  Rational k;
  /// leading_coefficient / k.
  Rational scale;
  /// scale * m_{2nu}(x) m_{2mu}(y), the contribution to the sigma entry.
  Polynomial coefficient;
  Polynomial remainder;
};

/// Coefficient m_{2nu}(x) m_{2mu}(y) in R^{B_n} of a decomposition.
inline Polynomial symmetric_multiplier(const Decomposition& d) {
  const std::size_t n = d.sigma.rank();
  return monomial_sym_squares(d.nu, Family::x, n) * monomial_sym_squares(d.mu, Family::y, n);
}

namespace detail {

inline ReductionStep reduce_unchecked(const Polynomial& f, const LeadingTerm& lt) {
  Decomposition d = decompose(lt.monomial);
  Polynomial multiplier = symmetric_multiplier(d);
  const Polynomial product = multiplier * rho(diagonal_signed_descent_monomial_c(d.sigma));
  Rational k = product.coefficient(lt.monomial);
  if (k <= 0)
    throw InternalError("non-positive leading coefficient " + to_fraction_string(k) +
                        " while reducing " + lt.monomial.to_string());
  Rational scale = lt.coefficient / k;
  Polynomial remainder = f - product * scale;
  multiplier *= scale;
  return ReductionStep{lt.monomial, lt.coefficient, std::move(d), std::move(k), std::move(scale),
                       std::move(multiplier), std::move(remainder)};
}

} // namespace detail

inline ReductionStep reduce_step(const Polynomial& f, Bidegree bd) {
  return detail::reduce_unchecked(f, leading_term(f, bd));
}

/// Observer hook for straighten; called once per reduction.
using StepObserver = std::function<void(const ReductionStep&)>;

/// Writes an invariant f as sum entries[sigma] * rho(c_sigma).
///
/// Each bihomogeneous component is reduced separately; within a component
/// the leading ordered monomial strictly decreases, so the loop runs at most
/// as many times as there are ordered monomials of that bidegree.
inline BasisExpansion straighten(const Polynomial& f, const StepObserver& observe = {},
                                 std::size_t guard = kEnumerationGuard) {
  check_enumeration_guard(f.rank(), guard);
  detail::require_invariant(f);
  BasisExpansion out(f.rank());
  for (auto& [bd, part] : bidegree_components(f)) {
    const std::size_t limit = ordered_monomials(f.rank(), bd).size();
    std::size_t iterations = 0;
    std::optional<Monomial> previous;
    Polynomial rest = std::move(part);
    while (!rest.is_zero()) {
      if (++iterations > limit)
        throw InternalError("straighten did not terminate within " + std::to_string(limit) +
                            " steps at bidegree (" + std::to_string(bd.a) + "," +
                            std::to_string(bd.b) + ")");
      auto lt = detail::leading_ordered_term(rest);
      if (!lt)
        throw InternalError("remainder has no ordered monomial; invariance lost");
      if (previous && compare(lt->monomial, *previous) >= 0)
        throw InternalError("leading monomial did not decrease: " + lt->monomial.to_string());
      previous = lt->monomial;
      ReductionStep step = detail::reduce_unchecked(rest, *lt);
      if (observe)
        observe(step);
      out.add(step.decomposition.sigma, step.coefficient);
      rest = std::move(step.remainder);
    }
  }
  return out;
}

/// sum entries[sigma] * rho(c_sigma).
inline Polynomial evaluate(const BasisExpansion& e) {
  Polynomial out(e.rank());
  for (const auto& [s, coeff] : e.entries())
    out += coeff * rho(diagonal_signed_descent_monomial_c(s));
  return out;
}

} // namespace bnsym
