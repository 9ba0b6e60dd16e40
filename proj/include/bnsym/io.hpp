#pragma once

// JSON encodings of the library's value types.
//
//   signed permutation  {"n": int, "window": [int, ...]}
//   polynomial          {"n": int, "terms": [{"p": [...], "q": [...], "coeff": "num/den"}]}
//   decomposition       {"sigma": window, "nu": [...], "delta": [...], "mu": [...], "gamma": [...]}
//   basis expansion     {"n": int, "entries": [{"sigma": window, "coeff": polynomial}]}
//   rank report         {"n", "a", "b", "rank", "dim", "series", "generators", "pass"}

#include <string>
#include <vector>

#include <json.hpp>

#include "bnsym/descent_basis.hpp"
#include "bnsym/error.hpp"
#include "bnsym/hilbert.hpp"
#include "bnsym/poly.hpp"
#include "bnsym/signed_perm.hpp"
#include "bnsym/straighten.hpp"

namespace bnsym::io {

using nlohmann::json;

namespace detail {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

inline std::size_t rank_field(const json& j) {
  const auto n = field<long long>(j, "n");
  if (n < 1)
    throw ParseError("rank 'n' must be positive");
  return static_cast<std::size_t>(n);
}

} // namespace detail

inline json to_json(const SignedPermutation& s) {
  return {{"n", s.rank()}, {"window", std::vector<int>(s.window().begin(), s.window().end())}};
}

/// Accepts the object form or a bare window array.
inline SignedPermutation permutation_from_json(const json& j) {
  if (j.is_array()) {
    try {
      return SignedPermutation(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad window: ") + e.what());
    }
  }
  const auto n = detail::rank_field(j);
  SignedPermutation s(detail::field<std::vector<int>>(j, "window"));
  if (s.rank() != n)
    throw ParseError("window length " + std::to_string(s.rank()) + " does not match n = " +
                     std::to_string(n));
  return s;
}

inline json to_json(const Polynomial& f) {
  json terms = json::array();
  for (const auto& [m, c] : f)
    terms.push_back({{"p", std::vector<int>(m.p().begin(), m.p().end())},
                     {"q", std::vector<int>(m.q().begin(), m.q().end())},
                     {"coeff", to_fraction_string(c)}});
  return {{"n", f.rank()}, {"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
  const auto n = detail::rank_field(j);
  Polynomial f(n);
  const auto terms = detail::field<json>(j, "terms");
  if (!terms.is_array())
    throw ParseError("'terms' must be an array");
  for (const auto& t : terms) {
    const auto p = detail::field<std::vector<int>>(t, "p");
    const auto q = detail::field<std::vector<int>>(t, "q");
    if (p.size() != n || q.size() != n)
      throw ParseError("exponent vector length does not match n = " + std::to_string(n));
    const auto& c = t.contains("coeff") ? t.at("coeff") : json();
    Rational coeff;
    if (c.is_string())
      coeff = parse_fraction(c.get<std::string>());
    else if (c.is_number_integer())
      coeff = Rational(c.get<long long>());
    else
      throw ParseError("'coeff' must be a \"num/den\" string");
    try {
      f.add_term(Monomial(p, q), coeff);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return f;
}

inline json to_json(const Decomposition& d) {
  return {{"sigma", std::vector<int>(d.sigma.window().begin(), d.sigma.window().end())},
          {"nu", d.nu},
          {"delta", d.delta},
          {"mu", d.mu},
          {"gamma", d.gamma}};
}

inline Decomposition decomposition_from_json(const json& j) {
  return Decomposition{permutation_from_json(detail::field<json>(j, "sigma")),
                       detail::field<std::vector<int>>(j, "nu"),
                       detail::field<std::vector<int>>(j, "delta"),
                       detail::field<std::vector<int>>(j, "mu"),
                       detail::field<std::vector<int>>(j, "gamma")};
}

inline json to_json(const BasisExpansion& e) {
  json entries = json::array();
  for (const auto& [s, c] : e.entries())
    entries.push_back({{"sigma", std::vector<int>(s.window().begin(), s.window().end())},
                       {"coeff", to_json(c)}});
  return {{"n", e.rank()}, {"entries", entries}};
}

inline BasisExpansion expansion_from_json(const json& j) {
  const auto n = detail::rank_field(j);
  BasisExpansion e(n);
  const auto entries = detail::field<json>(j, "entries");
  if (!entries.is_array())
    throw ParseError("'entries' must be an array");
  for (const auto& entry : entries) {
    const auto s = permutation_from_json(detail::field<json>(entry, "sigma"));
    const auto c = polynomial_from_json(detail::field<json>(entry, "coeff"));
    if (s.rank() != n || c.rank() != n)
      throw ParseError("entry rank does not match n = " + std::to_string(n));
    e.add(s, c);
  }
  return e;
}

inline json to_json(const RankReport& r) {
  return {{"n", r.n},         {"a", r.a},       {"b", r.b},
          {"rank", r.rank},   {"dim", r.dim},   {"series", r.series},
          {"generators", r.generators},         {"pass", r.pass()}};
}

inline json to_json(const StatisticsProfile& st) {
  return {{"descent_set", st.descent_set}, {"d", st.d},       {"eps", st.eps}, {"f", st.f},
          {"maj", st.maj},                 {"neg", st.neg},   {"fmaj", st.fmaj}};
}

inline json to_json(const BiSeries& s) {
  json terms = json::array();
  for (const auto& [k, v] : s.terms())
    terms.push_back({{"a", k.first}, {"b", k.second}, {"coeff", v}});
  return {{"truncation", s.truncation()}, {"terms", terms}};
}

} // namespace bnsym::io
