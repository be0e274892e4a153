#include <gtest/gtest.h>

#include "cremona/error.hpp"
#include "cremona/gcd.hpp"
#include "cremona/resultant.hpp"
#include "support.hpp"

using namespace cremona;
using testing_support::random_form;
using testing_support::X;
using testing_support::Y;
using testing_support::Z;

TEST(TrivariateGcd, Examples) {
  EXPECT_EQ(trivariate_gcd(Y(), X() * Y()), Y());
  EXPECT_EQ(trivariate_gcd(X() * Z() + Y() * Y(), Y()).degree(), 0);
  EXPECT_THROW(trivariate_gcd(MultiPoly(3, 1), MultiPoly(3, 2)), Error);
}

TEST(TrivariateGcd, WithZero) {
  const MultiPoly f = Fp(3) * X() * Y() + Z() * Z();
  EXPECT_EQ(trivariate_gcd(f, MultiPoly(3, 4)), f.normalized());
}

TEST(TrivariateGcd, RecoversConstructedFactor) {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int dh = 1 + static_cast<int>(rng.below(3));
    const MultiPoly h = random_form(3, dh, rng);
    const MultiPoly f = random_form(3, 1 + static_cast<int>(rng.below(3)), rng);
    const MultiPoly g = random_form(3, 1 + static_cast<int>(rng.below(3)), rng);
    EXPECT_EQ(trivariate_gcd(f * h, g * h), h.normalized());
  }
}

TEST(TrivariateGcd, FactorsFreeOfX) {
  // Content in k[y,z] must be found too.
  Rng rng(42);
  const MultiPoly c = Y() + Fp(5) * Z();
  const MultiPoly f = random_form(3, 2, rng), g = random_form(3, 3, rng);
  EXPECT_EQ(trivariate_gcd(f * c, g * c), c.normalized());
  EXPECT_EQ(trivariate_gcd(c * c * f, c * g), c.normalized());
}

TEST(TrivariateGcd, VanishingResultantIffCommonFactor) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const bool shared = rng.below(2) == 1;
    MultiPoly f = random_form(3, 2, rng), g = random_form(3, 2, rng);
    if (shared) {
      const MultiPoly h = random_form(3, 1, rng);
      f = f * h;
      g = g * h;
    }
    const bool gcd_nontrivial = trivariate_gcd(f, g).degree() > 0;
    bool resultant_zero = false;
    try {
      (void)eliminant(f, g);
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::CommonComponent);
      resultant_zero = true;
    }
    EXPECT_EQ(gcd_nontrivial, shared);
    EXPECT_EQ(resultant_zero, gcd_nontrivial);
  }
}

TEST(XCoefficients, RoundTrip) {
  Rng rng(44);
  const MultiPoly f = random_form(3, 4, rng);
  const auto cs = x_coefficients(f);
  ASSERT_EQ(cs.size(), 5u);
  for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(cs[i].degree(), 4 - static_cast<int>(i));
  EXPECT_EQ(from_x_coefficients(cs, 4), f);
}
