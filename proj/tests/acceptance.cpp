// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "bnsym/bnsym.hpp"
#include "oracles.hpp"

using namespace bnsym;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail << what;
    }
  }
};

Monomial mono(std::vector<int> p, std::vector<int> q) { return Monomial(p, q); }

Monomial x_only(std::vector<int> p) { return Monomial(p, std::vector<int>(p.size(), 0)); }

// Every monomial of rank n with all exponents in [0, max_exp].
void for_each_bounded_monomial(std::size_t n, int max_exp, const std::function<void(const Monomial&)>& visit) {
  Monomial m(n);
  auto rec = [&](auto& self, std::size_t slot) -> void {
    if (slot == 2 * n) {
      visit(m);
      return;
    }
    auto& e = slot < n ? m.p()[slot] : m.q()[slot - n];
    for (int v = 0; v <= max_exp; ++v) {
      e = v;
      self(self, slot + 1);
    }
    e = 0;
  };
  rec(rec, 0);
}

bool weakly_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1])
      return false;
  return true;
}

void worked_examples(Outcome& out) {
  out.require(descent_monomial_a(SignedPermutation{6, 2, 1, 4, 3, 5}) == x_only({1, 2, 0, 1, 0, 3}), "a_pi");
  out.require(diagonal_descent_monomial_e(SignedPermutation{4, 6, 1, 2, 5, 3}) ==
                  mono({2, 2, 2, 1, 1, 0}, {1, 1, 0, 2, 1, 2}),
              "e_pi");
  out.require(signed_descent_monomial_b(SignedPermutation{-6, 2, -1, -4, 3, 5}) == x_only({3, 4, 0, 1, 0, 5}),
              "b_sigma");
  out.require(diagonal_signed_descent_monomial_c(SignedPermutation{2, -1, -4, 3}) ==
                  mono({3, 2, 2, 1}, {3, 4, 0, 1}),
              "c_sigma");
  out.require(diagonal_signed_descent_monomial_c(SignedPermutation{2, -1, -4, 3}).to_string() ==
                  "x1^3 x2^2 x3^2 x4 y1^3 y2^4 y4",
              "c_sigma text");
  out.require(signed_index_permutation(mono({7, 6, 6, 5, 5, 3}, {3, 8, 6, 3, 5, 5})) ==
                  SignedPermutation({2, 3, -6, -5, -4, -1}),
              "signed index permutation");
  const auto m = mono({7, 6, 6, 5}, {3, 8, 6, 5});
  const auto w = mono({7, 6, 6, 5}, {5, 8, 6, 3});
  out.require(is_ordered(m) && is_ordered(w), "ordered pair");
  out.require(ordering_key(m) == std::vector<int>{7, 6, 6, 5, 8, 6, 5, 3}, "ordering key");
  out.require(compare(m, w) > 0, "m above w");
  out.detail << "a, b, c, e, signed index permutation, order";
}

void odd_column_vanishing(Outcome& out) {
  std::size_t checked = 0;
  for_each_bounded_monomial(2, 4, [&](const Monomial& m) {
    const auto r = rho(m);
    const bool odd = !m.has_even_columns();
    out.require(r.is_zero() == odd, "rho(" + m.to_string() + ") vanishing mismatch");
    out.require(r == oracle::rho(m), "rho(" + m.to_string() + ") differs from full group average");
    ++checked;
  });
  out.require(checked == 625, "grid size");
  out.detail << checked << " monomials";
}

void decomposition(Outcome& out) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for_each_bounded_monomial(n, 5, [&](const Monomial& m) {
      if (!is_ordered(m))
        return;
      const auto where = " at " + m.to_string();
      Decomposition d{SignedPermutation::identity(n), {}, {}, {}, {}};
      try {
        d = decompose(m);
      } catch (const std::exception& e) {
        out.require(false, std::string("decompose threw: ") + e.what());
        return;
      }
      const auto& s = d.sigma;
      const auto f = flag_sequence(s);
      const auto f_inv = flag_sequence(inverse(s));
      std::vector<int> mu_along(n);
      std::vector<int> gamma_along(n);
      std::vector<int> q_along(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(std::abs(s.window()[i]) - 1);
        out.require(m.p()[i] == 2 * d.nu[i] + d.delta[i], "p = 2nu + delta" + where);
        out.require(m.q()[i] == 2 * d.mu[i] + d.gamma[i], "q = 2mu + gamma" + where);
        out.require(d.nu[i] >= 0 && d.mu[i] >= 0, "nu, mu non-negative" + where);
        out.require(d.delta[i] == f_inv[i], "delta = f(sigma^-1)" + where);
        out.require(d.gamma[k] == f[i], "gamma along sigma = f(sigma)" + where);
        out.require((m.q()[k] % 2 != 0) == (s.window()[i] < 0), "sign matches q parity" + where);
        mu_along[i] = d.mu[k];
        gamma_along[i] = d.gamma[k];
        q_along[i] = m.q()[k];
      }
      out.require(weakly_decreasing(d.nu) && weakly_decreasing(d.delta), "nu, delta decreasing" + where);
      out.require(weakly_decreasing(mu_along) && weakly_decreasing(gamma_along),
                  "mu, gamma decreasing along sigma" + where);
      out.require(weakly_decreasing(q_along), "q decreasing along sigma" + where);
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (q_along[i] == q_along[i + 1])
          out.require(s.window()[i] < s.window()[i + 1], "equal q ties increase" + where);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (d.delta[i] == d.delta[j] || d.gamma[i] == d.gamma[j])
            out.require(sign_twist(m.q()[i]) >= sign_twist(m.q()[j]), "tie condition" + where);
      Monomial rebuilt(n);
      for (std::size_t i = 0; i < n; ++i) {
        rebuilt.p()[i] = 2 * d.nu[i];
        rebuilt.q()[i] = 2 * d.mu[i];
      }
      rebuilt *= diagonal_signed_descent_monomial_c(s);
      out.require(rebuilt == m, "reconstruction" + where);
      ++checked;
    });
  out.detail << checked << " ordered monomials";
}

void free_basis(Outcome& out) {
  std::size_t units = 0;
  for (const auto& s : enumerate(3)) {
    BasisExpansion expected(3);
    expected.add(s, Polynomial::constant(3, 1));
    out.require(straighten(rho(diagonal_signed_descent_monomial_c(s))) == expected,
                "unit expansion for " + s.to_string());
    ++units;
  }
  std::mt19937 rng(20240601);
  std::size_t round_trips = 0;
  std::size_t steps = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    const auto f = oracle::random_invariant(rng, n, 6, 10, 3);
    for (const auto& [bd, part] : bidegree_components(f))
      out.require(bd.a + bd.b <= 10, "sample degree bound");
    out.require(!f.is_zero(), "zero sample");
    const auto e = straighten(f, [&](const ReductionStep&) { ++steps; });
    out.require(evaluate(e) == f, "round trip " + f.to_string());
    ++round_trips;
  }
  out.detail << units << " unit expansions, " << round_trips << " round trips, " << steps << " reductions";
}

void hilbert_identity(Outcome& out) {
  std::size_t cells = 0;
  for (const auto& [n, top] : {std::pair<std::size_t, int>{1, 12}, {2, 10}})
    for (int total = 0; total <= top; ++total)
      for (int a = 0; a <= total; ++a) {
        const int b = total - a;
        const auto where = " at n=" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        const auto dim = invariant_dimension(n, a, b);
        out.require(dim == series_coefficient(n, a, b), "dim != series" + where);
        out.require(dim == oracle::series_coefficient(n, a, b), "dim != brute-force series" + where);
        const auto r = verify_basis_rank(n, a, b);
        out.require(r.rank == r.dim && r.generators == r.dim && r.series == r.dim, "rank report" + where);
        ++cells;
      }
  out.detail << cells << " cells";
}

void statistics_identities(Outcome& out) {
  std::size_t elements = 0;
  for_each_signed_permutation(4, [&](const SignedPermutation& s) {
    const auto st = statistics(s);
    const auto w = s.window();
    out.require(st.fmaj == 2 * st.maj + st.neg, "fmaj = 2 maj + neg at " + s.to_string());
    out.require(weakly_decreasing(st.f), "f decreasing at " + s.to_string());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (st.f[i] == st.f[j])
          for (std::size_t k = i; k < j; ++k)
            out.require(w[k] < w[k + 1] && (w[k] < 0) == (w[k + 1] < 0), "f run at " + s.to_string());
    ++elements;
  });
  out.require(elements == 384, "B_4 size");
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto num = fmaj_numerator(n);
    for (const auto& [k, v] : num.terms())
      out.require(num(k.second, k.first) == v, "numerator symmetry n=" + std::to_string(n));
    oracle::Univariate marginal(n * n + 1, 0);
    for (const auto& [k, v] : num.terms())
      marginal[static_cast<std::size_t>(k.second)] += v;
    out.require(marginal == oracle::fmaj_distribution(n), "fmaj distribution n=" + std::to_string(n));
    out.require(marginal == oracle::fmaj_product_formula(n), "product formula n=" + std::to_string(n));
  }
  out.detail << elements << " elements of B_4";
}

void maj_inv(Outcome& out) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<int, std::int64_t> by_maj;
    std::map<int, std::int64_t> by_inv;
    for_each_permutation(n, [&](const SignedPermutation& p) {
      ++by_maj[maj(p)];
      ++by_inv[inversions(p)];
    });
    out.require(by_maj == by_inv, "distributions differ at n=" + std::to_string(n));
    out.require(maj_inv_equidistribution(n), "library check at n=" + std::to_string(n));
  }
  out.detail << "n <= 6";
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"worked example regression", worked_examples},
      {"odd-column vanishing of rho, n=2, exponents <= 4", odd_column_vanishing},
      {"decomposition invariants and reconstruction, n <= 3, exponents <= 5", decomposition},
      {"free-basis round trip", free_basis},
      {"Hilbert series identity and degreewise freeness", hilbert_identity},
      {"statistics identities", statistics_identities},
      {"maj / inv equidistribution", maj_inv},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail << "exception: " << e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << "  ["
              << out.detail.str() << ", " << took.count() << " s]" << std::endl;
    failures += out.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
