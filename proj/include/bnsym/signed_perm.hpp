#pragma once

// Signed permutations (the hyperoctahedral group B_n) and their descent
// statistics.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bnsym/error.hpp"

namespace bnsym {

/// Default rank guard for full enumeration of B_n (|B_8| = 10321920).
inline constexpr std::size_t kEnumerationGuard = 8;

/// Element of B_n in window notation [s(1), ..., s(n)].
///
/// The bijection on {-n..-1, 1..n} is derived from the window through
/// s(-k) = -s(k); only the window is stored. Permutations of Sigma_n are
/// represented as elements whose window is all positive.
class SignedPermutation {
public:
  /// Validates the window; throws ParseError naming the offending entry.
  explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    if (window_.empty())
      throw ParseError("signed permutation needs at least one entry");
    const int n = static_cast<int>(window_.size());
    std::vector<bool> seen(window_.size() + 1, false);
    for (std::size_t i = 0; i < window_.size(); ++i) {
      const int v = window_[i];
      const std::string where = "entry " + std::to_string(i + 1) + " (" + std::to_string(v) + ")";
      if (v == 0)
        throw ParseError("zero entry at " + where);
      const int a = std::abs(v);
      if (a > n)
        throw ParseError("absolute value exceeds rank " + std::to_string(n) + " at " + where);
      if (seen[a])
        throw ParseError("repeated absolute value at " + where);
      seen[a] = true;
    }
  }

  SignedPermutation(std::initializer_list<int> window)
      : SignedPermutation(std::vector<int>(window)) {}

  static SignedPermutation identity(std::size_t n) {
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i)
      w[i] = static_cast<int>(i) + 1;
    return SignedPermutation(std::move(w));
  }

  std::size_t rank() const noexcept { return window_.size(); }
  std::span<const int> window() const noexcept { return window_; }

  /// s(i) for i in {-n..-1, 1..n}.
  int operator()(int i) const {
    return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
                 : -window_[static_cast<std::size_t>(-i - 1)];
  }

  bool is_positive() const noexcept {
    return std::all_of(window_.begin(), window_.end(), [](int v) { return v > 0; });
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < window_.size(); ++i)
      if (window_[i] != static_cast<int>(i) + 1)
        return false;
    return true;
  }

  /// "[a1,a2,...,an]"
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < window_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(window_[i]);
    }
    return s + "]";
  }

  // Lexicographic on windows, integer order on entries.
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    return a.window_ <=> b.window_;
  }

private:
  std::vector<int> window_;
};

/// Parses "[a1,a2,...,an]"; whitespace is tolerated anywhere.
inline SignedPermutation parse_window(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("window must be a bracketed list, got '" + std::string(text) + "'");
  std::string_view body(s);
  body = body.substr(1, body.size() - 2);
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string token(body.substr(pos, comma - pos));
    if (token.empty())
      throw ParseError("empty entry in window '" + std::string(text) + "'");
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + token + "'");
    }
    if (used != token.size())
      throw ParseError("not an integer: '" + token + "'");
    entries.push_back(value);
    pos = comma + 1;
  }
  return SignedPermutation(std::move(entries));
}

/// (a o b)(i) = a(b(i)).
inline SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank())
    throw RankMismatch(a.rank(), b.rank());
  std::vector<int> w(a.rank());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = a(b.window()[i]);
  return SignedPermutation(std::move(w));
}

inline SignedPermutation inverse(const SignedPermutation& a) {
  std::vector<int> w(a.rank());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = a.window()[i];
    const int pos = static_cast<int>(i) + 1;
    w[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? pos : -pos;
  }
  return SignedPermutation(std::move(w));
}

/// 2^n * n!
inline std::uint64_t group_order(std::size_t n) {
  std::uint64_t order = 1;
  for (std::size_t i = 1; i <= n; ++i)
    order *= 2 * i;
  return order;
}

inline void check_enumeration_guard(std::size_t n, std::size_t guard = kEnumerationGuard) {
  if (n == 0)
    throw DomainError("rank must be at least 1");
  if (n > guard)
    throw GuardError("refusing to enumerate B_" + std::to_string(n) + " (" +
                     std::to_string(group_order(n)) + " elements): rank guard is " +
                     std::to_string(guard));
}

namespace detail {

template <typename Visitor>
void enumerate_windows(std::vector<int>& window, std::vector<bool>& used, std::size_t pos,
                       int n, Visitor& visit, bool positive_only) {
  if (pos == window.size()) {
    visit(SignedPermutation(window));
    return;
  }
  for (int v = positive_only ? 1 : -n; v <= n; ++v) {
    if (v == 0 || used[static_cast<std::size_t>(std::abs(v))])
      continue;
    used[static_cast<std::size_t>(std::abs(v))] = true;
    window[pos] = v;
    enumerate_windows(window, used, pos + 1, n, visit, positive_only);
    used[static_cast<std::size_t>(std::abs(v))] = false;
  }
}

} // namespace detail

/// Calls visit(sigma) for every sigma in B_n, lexicographically by window.
template <typename Visitor>
void for_each_signed_permutation(std::size_t n, Visitor&& visit,
                                 std::size_t guard = kEnumerationGuard) {
  check_enumeration_guard(n, guard);
  std::vector<int> window(n);
  std::vector<bool> used(n + 1, false);
  detail::enumerate_windows(window, used, 0, static_cast<int>(n), visit, false);
}

/// Same as for_each_signed_permutation restricted to Sigma_n.
template <typename Visitor>
void for_each_permutation(std::size_t n, Visitor&& visit, std::size_t guard = kEnumerationGuard) {
  check_enumeration_guard(n, guard);
  std::vector<int> window(n);
  std::vector<bool> used(n + 1, false);
  detail::enumerate_windows(window, used, 0, static_cast<int>(n), visit, true);
}

/// All of B_n, materialized.
inline std::vector<SignedPermutation> enumerate(std::size_t n, std::size_t guard = kEnumerationGuard) {
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(group_order(n), 1u << 20)));
  for_each_signed_permutation(n, [&](const SignedPermutation& s) { out.push_back(s); }, guard);
  return out;
}

/// Descent statistics of a signed permutation. Index i of d, eps and f
/// holds the value for position i+1.
struct StatisticsProfile {
  std::vector<int> descent_set; // positions in 1..n-1
  std::vector<int> d;
  std::vector<int> eps;
  std::vector<int> f;
  int maj = 0;
  int neg = 0;
  int fmaj = 0;
};

inline StatisticsProfile statistics(const SignedPermutation& s) {
  const std::size_t n = s.rank();
  const auto w = s.window();
  StatisticsProfile st;
  st.d.assign(n, 0);
  st.eps.assign(n, 0);
  st.f.assign(n, 0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) {
      st.descent_set.push_back(static_cast<int>(i) + 1);
      st.maj += static_cast<int>(i) + 1;
    }
  // d_i counts descents at positions >= i.
  int running = 0;
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 < n && w[i] > w[i + 1])
      ++running;
    st.d[i] = running;
    st.eps[i] = w[i] < 0 ? 1 : 0;
    st.f[i] = 2 * st.d[i] + st.eps[i];
    st.neg += st.eps[i];
    st.fmaj += st.f[i];
  }
  return st;
}

/// f_i(s) for i = 1..n, as a vector indexed from 0.
inline std::vector<int> flag_sequence(const SignedPermutation& s) { return statistics(s).f; }

inline int fmaj(const SignedPermutation& s) { return statistics(s).fmaj; }
inline int maj(const SignedPermutation& s) { return statistics(s).maj; }

/// Classical inversions: pairs i<j with s(i) > s(j).
inline int inversions(const SignedPermutation& s) {
  const auto w = s.window();
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j])
        ++count;
  return count;
}

/// Adjacent transpositions s_1..s_{n-1} followed by the sign change of
/// the first coordinate. Together they generate B_n.
inline std::vector<SignedPermutation> generators(std::size_t n) {
  std::vector<SignedPermutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<int> w(n);
    for (std::size_t k = 0; k < n; ++k)
      w[k] = static_cast<int>(k) + 1;
    std::swap(w[i], w[i + 1]);
    gens.emplace_back(std::move(w));
  }
  std::vector<int> flip(n);
  for (std::size_t k = 0; k < n; ++k)
    flip[k] = static_cast<int>(k) + 1;
  flip[0] = -1;
  gens.emplace_back(std::move(flip));
  return gens;
}

} // namespace bnsym
