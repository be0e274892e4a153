#include <gtest/gtest.h>

#include "cremona/binary_form.hpp"
#include "cremona/error.hpp"
#include "support.hpp"

using namespace cremona;

namespace {

BinaryForm form(std::initializer_list<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(Fp(x));
  return BinaryForm(v);
}

BinaryForm random_binary(int n, Rng& rng) {
  std::vector<Fp> c(static_cast<std::size_t>(n) + 1);
  for (auto& x : c) x = rng.uniform();
  return BinaryForm(c);
}

// Product of linear factors vanishing at the given roots (lambda:mu).
BinaryForm from_roots(const std::vector<std::pair<Fp, Fp>>& roots) {
  BinaryForm out = BinaryForm::one();
  for (auto [l, m] : roots) out = out * BinaryForm::vanishing_at(l, m);
  return out;
}

}  // namespace

TEST(BinaryForm, RootMultiplicity) {
  const BinaryForm r = form({1, -1, 0, 0});  // y^2 (y - z)
  EXPECT_EQ(binary_root_multiplicity(r, Fp(0), Fp(1)), 2);
  EXPECT_EQ(binary_root_multiplicity(r, Fp(1), Fp(1)), 1);
  EXPECT_EQ(binary_root_multiplicity(r, Fp(1), Fp(2)), 0);
  EXPECT_EQ(binary_root_multiplicity(r, Fp(1), Fp(0)), 0);
  EXPECT_THROW(binary_root_multiplicity(BinaryForm(3), Fp(1), Fp(0)), Error);
}

TEST(BinaryForm, RootAtInfinityIsAPowerOfZ) {
  // z^3 vanishes at (1:0) to order 3.
  EXPECT_EQ(binary_root_multiplicity(form({0, 0, 0, 1}), Fp(1), Fp(0)), 3);
  EXPECT_EQ(binary_root_multiplicity(form({0, 0, 0, 1}), Fp(0), Fp(1)), 0);
}

TEST(BinaryForm, VanishingAt) {
  const BinaryForm l = BinaryForm::vanishing_at(Fp(3), Fp(5));
  EXPECT_TRUE(l.evaluate(Fp(3), Fp(5)).is_zero());
  EXPECT_FALSE(l.evaluate(Fp(5), Fp(3)).is_zero());
  EXPECT_THROW(BinaryForm::vanishing_at(Fp(0), Fp(0)), Error);
}

TEST(BinaryForm, RootMultiplicityOfConstructedProducts) {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<Fp, Fp>> roots;
    const std::pair<Fp, Fp> a{rng.uniform(), Fp(1)}, b{Fp(1), Fp(0)};
    const int ka = 1 + static_cast<int>(rng.below(4)), kb = static_cast<int>(rng.below(3));
    for (int i = 0; i < ka; ++i) roots.push_back(a);
    for (int i = 0; i < kb; ++i) roots.push_back(b);
    const BinaryForm r = from_roots(roots) * rng.nonzero();
    EXPECT_EQ(binary_root_multiplicity(r, a.first, a.second), ka);
    EXPECT_EQ(binary_root_multiplicity(r, b.first, b.second), kb);
  }
}

TEST(BinaryGcd, Examples) {
  EXPECT_EQ(binary_gcd(form({0, 1, 0, 0}), form({0, 0, 1, 0})), form({0, 1, 0}));
  ModulusScope p(7);
  const BinaryForm g = binary_gcd(form({1, 0, 1}), form({1, 2}));
  EXPECT_EQ(g.degree(), 0);
  // Independent check by root enumeration: y^2 + z^2 has no root on P^1(F_7).
  for (int y = 0; y < 7; ++y) EXPECT_FALSE(form({1, 0, 1}).evaluate(Fp(y), Fp(1)).is_zero());
  EXPECT_FALSE(form({1, 0, 1}).evaluate(Fp(1), Fp(0)).is_zero());
}

TEST(BinaryGcd, WithZeroIsMonic) {
  const BinaryForm f = form({3, 0, 6, 9});
  EXPECT_EQ(binary_gcd(f, BinaryForm(2)), f.monic());
  EXPECT_EQ(binary_gcd(BinaryForm(2), f), f.monic());
  EXPECT_EQ(f.monic()[3], Fp(1));
  EXPECT_THROW(binary_gcd(BinaryForm(1), BinaryForm(2)), Error);
}

TEST(BinaryGcd, RecoversConstructedCommonFactor) {
  ModulusScope p(101);
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const BinaryForm h = random_binary(1 + static_cast<int>(rng.below(3)), rng);
    const BinaryForm a = random_binary(static_cast<int>(rng.below(4)), rng);
    const BinaryForm b = random_binary(static_cast<int>(rng.below(4)), rng);
    if (h.is_zero() || a.is_zero() || b.is_zero()) continue;
    const BinaryForm g = binary_gcd(a * h, b * h);
    // gcd(a, b) * h up to scalar; root enumeration over F_101 confirms it.
    const BinaryForm expect = (binary_gcd(a, b) * h).monic();
    EXPECT_EQ(g, expect);
    for (int y = 0; y <= 101; ++y) {
      const Fp lam = y == 101 ? Fp(1) : Fp(y), mu = y == 101 ? Fp(0) : Fp(1);
      const int ka = binary_root_multiplicity(a * h, lam, mu), kb = binary_root_multiplicity(b * h, lam, mu);
      EXPECT_EQ(binary_root_multiplicity(g, lam, mu), std::min(ka, kb));
    }
  }
}

TEST(BinaryForm, ExactDivision) {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const BinaryForm a = random_binary(3, rng), b = random_binary(2, rng);
    if (a.is_zero() || b.is_zero()) continue;
    const auto q = exact_divide(a * b, b);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(exact_divide(form({1, 0, 1}), form({1, 1})));
}

TEST(BinaryForm, PolyRoundTrip) {
  Rng rng(24);
  const BinaryForm f = random_binary(4, rng);
  EXPECT_EQ(BinaryForm::from_poly(f.to_poly(2)), f);
  const MultiPoly p3 = f.to_poly(3);
  EXPECT_EQ(p3.degree_in(0), 0);
  const std::vector<Fp> pt{Fp(7), Fp(2), Fp(3)};
  EXPECT_EQ(p3.evaluate(pt), f.evaluate(Fp(2), Fp(3)));
}
