#include <random>

#include <gtest/gtest.h>

#include "bnsym/straighten.hpp"
#include "oracles.hpp"

using namespace bnsym;

namespace {

Monomial mono(std::vector<int> p, std::vector<int> q) { return Monomial(p, q); }

Polynomial rho_c(const SignedPermutation& s) { return rho(diagonal_signed_descent_monomial_c(s)); }

Rational half() { return Rational(Integer(1), Integer(2)); }

} // namespace

TEST(LeadingTerm, Examples) {
  const auto lt = leading_term(rho(mono({2, 0}, {2, 0})), {2, 2});
  EXPECT_EQ(lt.monomial, mono({2, 0}, {2, 0}));
  EXPECT_EQ(lt.coefficient, half());

  const auto unit = leading_term(rho_c(SignedPermutation{-1}), {1, 1});
  EXPECT_EQ(unit.monomial, mono({1}, {1}));
  EXPECT_EQ(unit.coefficient, 1);

  const auto off = leading_term(rho(mono({2, 0}, {0, 2})), {2, 2});
  EXPECT_EQ(off.monomial, mono({2, 0}, {0, 2}));
  EXPECT_EQ(off.coefficient, half());
}

TEST(LeadingTerm, Errors) {
  EXPECT_THROW(leading_term(Polynomial(2), {0, 0}), DomainError);
  EXPECT_THROW(leading_term(rho(mono({2, 0}, {2, 0})), {4, 0}), DomainError);
  EXPECT_THROW(leading_term(Polynomial(mono({2, 0}, {0, 0})), {2, 0}), NotInvariant);
}

TEST(ReduceStep, WorkedExample) {
  const auto f = rho(mono({2, 0}, {2, 0}));
  const auto step = reduce_step(f, {2, 2});
  EXPECT_TRUE(step.decomposition.sigma.is_identity());
  EXPECT_EQ(step.decomposition.nu, (std::vector<int>{1, 0}));
  EXPECT_EQ(step.decomposition.mu, (std::vector<int>{1, 0}));
  EXPECT_GT(step.k, 0);
  // Frozen: expand (x1^2 + x2^2)(y1^2 + y2^2) * scale and subtract from f.
  const auto expected = rho_c(SignedPermutation{2, 1}) * Rational(-1);
  EXPECT_EQ(step.remainder, expected);
  EXPECT_EQ(expected, Polynomial(mono({2, 0}, {0, 2}), -half()) + Polynomial(mono({0, 2}, {2, 0}), -half()));
  EXPECT_EQ(f - step.coefficient * rho(Monomial(2)), step.remainder);
}

TEST(ReduceStep, BasisElementsReduceInOneStep) {
  for (const auto& s : enumerate(3)) {
    const auto c = diagonal_signed_descent_monomial_c(s);
    const auto step = reduce_step(rho(c), bidegree(c));
    EXPECT_EQ(step.decomposition.sigma, s);
    EXPECT_EQ(step.decomposition.nu, std::vector<int>(3, 0));
    EXPECT_EQ(step.decomposition.mu, std::vector<int>(3, 0));
    EXPECT_EQ(step.coefficient, Polynomial::constant(3, 1));
    EXPECT_TRUE(step.remainder.is_zero());
  }
}

TEST(ReduceStep, MultiplierAbsorbsExtraDegree) {
  const auto step = reduce_step(rho(mono({3}, {1})), {3, 1});
  EXPECT_EQ(step.decomposition.sigma, SignedPermutation{-1});
  EXPECT_EQ(step.decomposition.nu, std::vector<int>{1});
  EXPECT_EQ(step.decomposition.mu, std::vector<int>{0});
  EXPECT_TRUE(step.remainder.is_zero());
}

TEST(Straighten, WorkedExample) {
  const auto f = rho(mono({2, 0}, {2, 0}));
  const auto e = straighten(f);
  ASSERT_EQ(e.size(), 2u);
  const auto id = SignedPermutation::identity(2);
  ASSERT_NE(e.find(id), nullptr);
  EXPECT_EQ(*e.find(id), (elementary_sym_squares(1, Family::x, 2) * elementary_sym_squares(1, Family::y, 2)) * half());
  ASSERT_NE(e.find(SignedPermutation{2, 1}), nullptr);
  EXPECT_EQ(*e.find(SignedPermutation{2, 1}), Polynomial::constant(2, -1));
  EXPECT_EQ(evaluate(e), f);
}

TEST(Straighten, ConstantsAndZero) {
  const auto one = straighten(Polynomial::constant(3, 1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(*one.find(SignedPermutation::identity(3)), Polynomial::constant(3, 1));
  EXPECT_TRUE(straighten(Polynomial(2)).empty());
  EXPECT_TRUE(evaluate(BasisExpansion(2)).is_zero());
}

TEST(Straighten, RejectsNonInvariant) {
  try {
    straighten(Polynomial(mono({1, 0}, {0, 0})));
    FAIL() << "expected NotInvariant";
  } catch (const NotInvariant& e) {
    EXPECT_NE(std::string(e.what()).find("not invariant"), std::string::npos);
  }
  EXPECT_THROW(straighten(Polynomial::constant(4, 1), {}, 3), GuardError);
}

TEST(Straighten, UnitExpansionsOnB2) {
  for (const auto& s : enumerate(2)) {
    const auto e = straighten(rho_c(s));
    BasisExpansion expected(2);
    expected.add(s, Polynomial::constant(2, 1));
    EXPECT_EQ(e, expected) << s.to_string();
  }
}

TEST(Straighten, InhomogeneousInputMergesComponents) {
  const auto f = rho_c(SignedPermutation{-1, 2}) + rho_c(SignedPermutation{2, 1}) * Rational(3) +
                 Polynomial::constant(2, 5);
  const auto e = straighten(f);
  EXPECT_EQ(e.size(), 3u);
  EXPECT_EQ(*e.find(SignedPermutation{2, 1}), Polynomial::constant(2, 3));
  EXPECT_EQ(*e.find(SignedPermutation::identity(2)), Polynomial::constant(2, 5));
  EXPECT_EQ(evaluate(e), f);
}

TEST(Straighten, RandomRoundTripsWithStepProperties) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 45; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto f = oracle::random_invariant(rng, n, 6, n == 3 ? 8 : 12, 3);
    std::map<Bidegree, Monomial> last;
    const auto e = straighten(f, [&](const ReductionStep& step) {
      EXPECT_GT(step.k, 0);
      const auto bd = bidegree(step.leading);
      if (auto it = last.find(bd); it != last.end()) {
        EXPECT_TRUE(compare(step.leading, it->second) < 0);
      }
      last.insert_or_assign(bd, step.leading);
    });
    EXPECT_EQ(evaluate(e), f);
    for (const auto& [s, coeff] : e.entries()) {
      EXPECT_FALSE(coeff.is_zero());
      EXPECT_TRUE(is_separately_invariant(coeff));
      const int fx = fmaj(inverse(s));
      const int fy = fmaj(s);
      for (const auto& [bd, part] : bidegree_components(coeff * rho_c(s))) {
        EXPECT_LE(fx, bd.a);
        EXPECT_LE(fy, bd.b);
        EXPECT_EQ((bd.a - fx) % 2, 0);
        EXPECT_EQ((bd.b - fy) % 2, 0);
      }
    }
  }
}

TEST(Straighten, RhoOfRandomMonomials) {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto f = rho(oracle::random_monomial(rng, n, n == 3 ? 3 : 6));
    EXPECT_EQ(evaluate(straighten(f)), f);
  }
}

TEST(BasisExpansion, AddDropsZeros) {
  BasisExpansion e(2);
  const SignedPermutation s{2, 1};
  e.add(s, Polynomial::constant(2, 1));
  e.add(s, Polynomial::constant(2, -1));
  EXPECT_TRUE(e.empty());
  e.add(s, Polynomial(2));
  EXPECT_TRUE(e.empty());
  EXPECT_THROW(e.add(SignedPermutation{1}, Polynomial::constant(1, 1)), RankMismatch);
}
