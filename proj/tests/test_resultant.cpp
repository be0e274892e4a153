#include <gtest/gtest.h>

#include "cremona/error.hpp"
#include "cremona/resultant.hpp"
#include "support.hpp"

using namespace cremona;
using testing_support::random_form;
using testing_support::X;
using testing_support::Y;
using testing_support::Z;

namespace {

std::vector<Fp> poly(std::initializer_list<std::int64_t> c) {
  std::vector<Fp> v;
  for (auto x : c) v.push_back(Fp(x));
  return v;
}

std::vector<Fp> mul(const std::vector<Fp>& a, const std::vector<Fp>& b) {
  std::vector<Fp> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Fp> random_poly(int n, Rng& rng) {
  std::vector<Fp> v(static_cast<std::size_t>(n) + 1);
  for (auto& x : v) x = rng.uniform();
  v.back() = rng.nonzero();
  return v;
}

// Line through two plane points (cross product).
MultiPoly line_through(const ProjectivePoint& p, const ProjectivePoint& q) {
  return (p[1] * q[2] - p[2] * q[1]) * X() + (p[2] * q[0] - p[0] * q[2]) * Y() + (p[0] * q[1] - p[1] * q[0]) * Z();
}

}  // namespace

TEST(Resultant, LinearExamples) {
  EXPECT_EQ(resultant_univariate(poly({-1, 1}), poly({-2, 1})), Fp(-1));
  EXPECT_EQ(resultant_univariate(poly({-1, 0, 1}), poly({-1, 1})), Fp(0));
  EXPECT_THROW(resultant_univariate(poly({3}), poly({5})), Error);
  // Res(c, g) = c^deg g.
  EXPECT_EQ(resultant_univariate(poly({3}), poly({1, 2, 1})), Fp(9));
}

TEST(Resultant, ProductOfRootDifferences) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Fp> as, bs;
    std::vector<Fp> f = poly({1}), g = poly({1});
    for (int i = 0; i < 3; ++i) {
      as.push_back(rng.uniform());
      f = mul(f, {-as.back(), Fp(1)});
    }
    for (int i = 0; i < 2; ++i) {
      bs.push_back(rng.uniform());
      g = mul(g, {-bs.back(), Fp(1)});
    }
    Fp expect(1);
    for (Fp a : as)
      for (Fp b : bs) expect *= a - b;
    EXPECT_EQ(resultant_univariate(f, g), expect);
  }
}

TEST(Resultant, Multiplicative) {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_poly(3, rng), g = random_poly(3, rng), h = random_poly(3, rng);
    EXPECT_EQ(resultant_univariate(mul(f, g), h), resultant_univariate(f, h) * resultant_univariate(g, h));
  }
}

TEST(Resultant, SylvesterLayout) {
  const Matrix s = sylvester_matrix(poly({1, 2}), poly({3, 4, 5}));
  ASSERT_EQ(s.rows(), 3u);
  // Two f-rows first, then one g-row.
  EXPECT_EQ(determinant(s), resultant_univariate(poly({1, 2}), poly({3, 4, 5})));
  EXPECT_EQ(s(0, 0) + s(0, 1) + s(0, 2), Fp(3));
  EXPECT_EQ(s(2, 0) + s(2, 1) + s(2, 2), Fp(12));
}

TEST(Interpolate, ReproducesPolynomial) {
  Rng rng(33);
  const auto p = random_poly(6, rng);
  std::vector<Fp> xs, ys;
  for (int i = 0; i < 7; ++i) {
    const Fp x(3 * i + 1);
    Fp y(0);
    for (std::size_t k = p.size(); k-- > 0;) y = y * x + p[k];
    xs.push_back(x);
    ys.push_back(y);
  }
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(Eliminant, ConicAndLine) {
  const BinaryForm r = eliminant(X() * X() - Y() * Z(), X() - Y());
  EXPECT_EQ(r.monic(), BinaryForm(std::vector<Fp>{Fp(1), Fp(-1), Fp(0)}).monic());
  EXPECT_EQ(binary_root_multiplicity(r, Fp(0), Fp(1)), 1);
  EXPECT_EQ(binary_root_multiplicity(r, Fp(1), Fp(1)), 1);
}

TEST(Eliminant, SharedFactorIsReported) {
  try {
    (void)eliminant(X() * Y(), X() * Z());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CommonComponent);
  }
  const MultiPoly l = X() + Y() + Fp(2) * Z();
  try {
    (void)eliminant(l * (X() - Z()), l * (X() + Y()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CommonComponent);
  }
  try {
    (void)eliminant(Y() * Z(), X() * X() + Y() * Z());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadLeadingCoefficient);
  }
}

TEST(Eliminant, ConicsThroughFourKnownPoints) {
  // F = L12*L34 and G = L13*L24 meet exactly in p1..p4.
  Rng rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ProjectivePoint> p;
    for (int i = 0; i < 4; ++i) p.push_back(testing_support::random_point(3, rng));
    const MultiPoly f = line_through(p[0], p[1]) * line_through(p[2], p[3]);
    const MultiPoly g = line_through(p[0], p[2]) * line_through(p[1], p[3]);
    const BinaryForm r = eliminant(f, g);
    ASSERT_EQ(r.degree(), 4);
    BinaryForm expect = BinaryForm::one();
    for (const auto& q : p) expect = expect * BinaryForm::vanishing_at(q[1], q[2]);
    EXPECT_EQ(r.monic(), expect.monic());
    for (const auto& q : p) EXPECT_EQ(binary_root_multiplicity(r, q[1], q[2]), 1);
  }
}

TEST(Eliminant, DegreeIsProductOfDegrees) {
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const int a = 1 + static_cast<int>(rng.below(4)), b = 1 + static_cast<int>(rng.below(4));
    const MultiPoly f = random_form(3, a, rng), g = random_form(3, b, rng);
    const BinaryForm r = eliminant(f, g);
    EXPECT_EQ(r.degree(), a * b);
    EXPECT_FALSE(r[0].is_zero());  // generic: no intersection on z = 0 projecting to (1:0)
  }
}

TEST(Eliminant, ProjectionOfCommonZeroIsARoot) {
  // Make (x:y:z) = P a common zero of two random forms and check its projection.
  Rng rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing_support::random_point(3, rng);
    MultiPoly f = random_form(3, 3, rng), g = random_form(3, 2, rng);
    const MultiPoly zf = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 0) * MultiPoly::variable(3, 0);
    const MultiPoly zg = MultiPoly::variable(3, 0) * MultiPoly::variable(3, 0);
    const Fp px3 = zf.evaluate(p), px2 = zg.evaluate(p);
    if (px3.is_zero()) continue;
    f -= zf * (f.evaluate(p) / px3);
    g -= zg * (g.evaluate(p) / px2);
    ASSERT_TRUE(f.evaluate(p).is_zero());
    ASSERT_TRUE(g.evaluate(p).is_zero());
    EXPECT_GE(binary_root_multiplicity(eliminant(f, g), p[1], p[2]), 1);
  }
}
