#include <gtest/gtest.h>

#include "cremona/error.hpp"
#include "cremona/field.hpp"
#include "cremona/random.hpp"

using namespace cremona;

TEST(Field, InverseModSeven) {
  ModulusScope p(7);
  EXPECT_EQ(Fp(2).inverse(), Fp(4));
  EXPECT_EQ(Fp(1).inverse(), Fp(1));
  try {
    (void)Fp(0).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroInverse);
  }
}

TEST(Field, NegativeLiteralsReduce) {
  ModulusScope p(7);
  EXPECT_EQ(Fp(-1).value(), 6u);
  EXPECT_EQ(Fp(-15).value(), 6u);
  EXPECT_EQ(Fp(22), Fp(1));
  EXPECT_EQ(-Fp(0), Fp(0));
}

TEST(Field, InverseIsInverseOverManyPrimes) {
  Rng rng(11);
  for (std::uint64_t p : {5ull, 101ull, 65537ull, 2147483647ull, 4611686018427387847ull}) {
    ModulusScope scope(p);
    for (int i = 0; i < 200; ++i) {
      const Fp a = rng.nonzero();
      EXPECT_EQ(a * a.inverse(), Fp(1)) << p;
      EXPECT_EQ(a.pow(p - 1), Fp(1)) << p;  // Fermat
    }
  }
}

TEST(Field, MultiplicationNearTopOfRange) {
  const std::uint64_t p = 4611686018427387847ull;  // largest prime below 2^62
  ModulusScope scope(p);
  const Fp a = Fp::from_unsigned(p - 1);
  EXPECT_EQ(a * a, Fp(1));
  EXPECT_EQ(a + Fp(1), Fp(0));
}

TEST(Field, PrimalityMatchesTrialDivision) {
  auto slow = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), slow(n)) << n;
  EXPECT_TRUE(is_prime(kDefaultPrime));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
  EXPECT_FALSE(is_prime(2147483649ull));
}

TEST(Field, ModulusValidation) {
  for (std::uint64_t bad : {0ull, 2ull, 3ull, 4ull, 9ull, 1ull << 62}) {
    EXPECT_THROW(set_modulus(bad), Error) << bad;
  }
  EXPECT_EQ(modulus(), kDefaultPrime);
}

TEST(Field, ScopeRestores) {
  {
    ModulusScope outer(13);
    {
      ModulusScope inner(17);
      EXPECT_EQ(modulus(), 17u);
    }
    EXPECT_EQ(modulus(), 13u);
  }
  EXPECT_EQ(modulus(), kDefaultPrime);
}

TEST(Field, ParseResidue) {
  ModulusScope p(101);
  EXPECT_EQ(parse_residue("0"), Fp(0));
  EXPECT_EQ(parse_residue("100"), Fp(100));
  for (const char* bad : {"", "101", "-1", "+3", "07", "1e3", " 5", "5 ", "abc", "99999999999999999999999"}) {
    try {
      (void)parse_residue(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MalformedCertificate);
    }
  }
}

TEST(Random, ReproducibleAndSeedSensitive) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs = differs || x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Random, BelowStaysInRange) {
  Rng rng(5);
  std::vector<int> hits(7);
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Random, DerivedSeedsSeparateTasks) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(2, {2, 3}));
  EXPECT_NE(derive_seed(0, {}), derive_seed(0, {0}));
}
