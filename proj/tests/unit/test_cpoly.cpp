#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "covext/cpoly.hpp"
#include "covext/errors.hpp"

using namespace covext;

namespace {

CPoly from_roots(const std::vector<Complex>& rs) {
  CPoly p{1.0};
  for (const Complex& r : rs) p = p * CPoly{-r, 1.0};
  return p;
}

// Matches each expected root to a distinct computed root.
void expect_same_roots(std::vector<Complex> got, std::vector<Complex> want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (const Complex& w : want) {
    auto best = got.begin();
    for (auto it = got.begin(); it != got.end(); ++it)
      if (std::abs(*it - w) < std::abs(*best - w)) best = it;
    EXPECT_LT(std::abs(*best - w), tol) << w;
    got.erase(best);
  }
}

}  // namespace

TEST(CPoly, ArithmeticAndNormalization) {
  const CPoly p{1.0, 2.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(CPoly().is_zero());
  EXPECT_EQ(CPoly().degree(), -1);
  const CPoly q = p * p;
  EXPECT_EQ(q, (CPoly{1.0, 4.0, 4.0}));
  EXPECT_EQ(q - q, CPoly());
  EXPECT_EQ(q.derivative(), (CPoly{4.0, 8.0}));
  EXPECT_EQ(q(Complex(1.0)), Complex(9.0));
  EXPECT_EQ(CPoly::monomial(2.0, 3).coefficient(3), Complex(2.0));
  EXPECT_EQ((CPoly{1.0, 1e-20}).trimmed(1e-12).degree(), 0);
}

TEST(Roots, KnownPolynomials) {
  expect_same_roots(roots(from_roots({1.0, 2.0, 3.0})).roots, {1.0, 2.0, 3.0}, 1e-12);
  std::vector<Complex> unity;
  for (int k = 0; k < 7; ++k) unity.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 7.0));
  expect_same_roots(roots(from_roots(unity)).roots, unity, 1e-12);
  // Widely spread moduli.
  expect_same_roots(roots(from_roots({1e-3, 1.0, 1e3})).roots, {1e-3, 1.0, 1e3}, 1e-9);
  EXPECT_THROW(roots(CPoly{1.0}), NumericFailure);
}

TEST(Roots, OutputIsCanonicallySorted) {
  const RootSet r = roots(from_roots({Complex(1, 1), Complex(-2, 0), Complex(1, -1)}));
  EXPECT_NEAR(r.roots[0].real(), -2.0, 1e-12);
  EXPECT_LT(r.roots[1].imag(), r.roots[2].imag());
}

TEST(RootsProperty, RandomPolynomialsHaveSmallBackwardError) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 200; ++t) {
    const int d = 1 + static_cast<int>(rng() % 12);
    std::vector<Complex> rs;
    for (int i = 0; i < d; ++i) rs.emplace_back(n01(rng), n01(rng));
    const RootSet r = roots(from_roots(rs));
    EXPECT_LE(r.residual_bound, 1e-12);
    expect_same_roots(r.roots, rs, 1e-6);
  }
}

TEST(Resultant, ProductFormula) {
  // Res(p, q) = lc(p)^deg q · ∏ q(roots of p).
  std::mt19937_64 rng(9);
  std::normal_distribution<double> n01;
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> pr, qr;
    for (int i = 0; i < 3; ++i) pr.emplace_back(n01(rng), n01(rng));
    for (int i = 0; i < 2; ++i) qr.emplace_back(n01(rng), n01(rng));
    const CPoly p = from_roots(pr);
    const CPoly q = from_roots(qr);
    Complex expect = 1.0;
    for (const Complex& r : pr) expect *= q(r);
    const Complex got = sylvester_resultant(p, q);
    EXPECT_LT(std::abs(got - expect), 1e-9 * std::max(1.0, std::abs(expect)));
  }
}

TEST(Discriminant, MatchesRootProduct) {
  const CPoly p = from_roots({0.0, 1.0, 3.0});
  // ∏_{i<j} (r_i - r_j)^2 = 1 · 9 · 4.
  EXPECT_NEAR(std::abs(discriminant(p) - Complex(36.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(discriminant(CPoly{-1.0, 0.0, 1.0}) - Complex(4.0)), 0.0, 1e-12);
  EXPECT_THROW(discriminant(CPoly{1.0, 1.0}), NumericFailure);
}

TEST(CanonicalSort, GroupsNearlyEqualRealParts) {
  std::vector<Complex> z = {Complex(1.0, 1.0), Complex(1.0 + 1e-12, -1.0), Complex(0.0, 5.0)};
  canonical_sort(z);
  EXPECT_EQ(z[0], Complex(0.0, 5.0));
  EXPECT_EQ(z[1].imag(), -1.0);
}

TEST(RootBound, BoundsEveryRoot) {
  const CPoly p = from_roots({Complex(3, 4), Complex(-1, 0.5)});
  for (const Complex& r : roots(p).roots) EXPECT_LE(std::abs(r), root_bound(p));
  EXPECT_EQ(min_separation({1.0}), std::numeric_limits<double>::infinity());
}
