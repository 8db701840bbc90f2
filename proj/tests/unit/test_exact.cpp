#include <gtest/gtest.h>

#include "nkverify/errors.hpp"
#include "nkverify/exact/circle.hpp"
#include "nkverify/exact/identity_test.hpp"
#include "nkverify/exact/qsqrt3.hpp"

using namespace nkv::exact;

TEST(Rational, CanonicalForm) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, 5).str(), "0/1");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_THROW(Rational(0).inverse(), nkv::DomainError);
}

TEST(QSqrt3, DefiningRelation) {
  const QSqrt3 r3 = QSqrt3::sqrt3();
  EXPECT_EQ(r3 * r3, QSqrt3(3));
  EXPECT_EQ((QSqrt3(1) + r3) * (QSqrt3(1) - r3), QSqrt3(-2));
  EXPECT_EQ(r3.inverse(), QSqrt3(Rational(0), Rational(1, 3)));
  EXPECT_THROW(QSqrt3().inverse(), nkv::DomainError);
}

TEST(QSqrt3, SignOfMixedValues) {
  EXPECT_EQ(QSqrt3(Rational(2), Rational(-1)).sign(), 1);   // 2 - sqrt3
  EXPECT_EQ(QSqrt3(Rational(-7), Rational(4)).sign(), -1);  // -7 + 4 sqrt3 < 0
  EXPECT_EQ(QSqrt3().sign(), 0);
}

TEST(QSqrt3, RingAxiomsOnRandomTriples) {
  RationalSampler rng(11);
  for (int s = 0; s < 200; ++s) {
    const QSqrt3 a(rng.rational(50), rng.rational(50)), b(rng.rational(50), rng.rational(50)),
        c(rng.rational(50), rng.rational(50));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), QSqrt3(1));
  }
}

TEST(CirclePoint, TangentHalfAngle) {
  EXPECT_EQ(rat_circle_point(Rational(0)), CirclePoint(Rational(1), Rational(0)));
  EXPECT_EQ(rat_circle_point(Rational(1)), CirclePoint(Rational(0), Rational(1)));
  EXPECT_EQ(rat_circle_point(Rational(1, 2)), CirclePoint(Rational(3, 5), Rational(4, 5)));
  EXPECT_THROW(CirclePoint(Rational(1), Rational(1)), nkv::DomainError);
}

TEST(CirclePoint, AngleAddition) {
  const CirclePoint q = rat_circle_point(Rational(2, 7));
  EXPECT_EQ(angle_add(CirclePoint(), q), q);
  const CirclePoint quarter(Rational(0), Rational(1));
  EXPECT_EQ(angle_add(quarter, quarter), CirclePoint(Rational(-1), Rational(0)));
  EXPECT_EQ(angle_add(CirclePoint(Rational(3, 5), Rational(4, 5)), CirclePoint(Rational(3, 5), Rational(-4, 5))),
            CirclePoint());
  EXPECT_EQ(angle_sub(q, q), CirclePoint());
}

TEST(CirclePoint, DistinctParametersGiveDistinctPoints) {
  std::vector<CirclePoint> seen;
  for (long n = -20; n <= 20; ++n)
    for (long d = 1; d <= 5; ++d) {
      const Rational t(n, d);
      const CirclePoint p = rat_circle_point(t);
      bool dup = false;
      for (long m = -20; m <= 20 && !dup; ++m)
        for (long e = 1; e <= 5 && !dup; ++e)
          if (!(Rational(m, e) == t) && rat_circle_point(Rational(m, e)) == p) dup = true;
      EXPECT_FALSE(dup) << t;
    }
}

TEST(PolyIdentity, DistinguishesPolynomials) {
  const PolyEvaluator f = [](std::span<const Rational> x) { return QSqrt3(x[0] * x[0] - Rational(1)); };
  const PolyEvaluator g = [](std::span<const Rational> x) { return QSqrt3((x[0] - Rational(1)) * (x[0] + Rational(1))); };
  EXPECT_TRUE(poly_identity_check(f, g, 1));

  const PolyEvaluator id = [](std::span<const Rational> x) { return QSqrt3(x[0]); };
  const PolyEvaluator shifted = [](std::span<const Rational> x) { return QSqrt3(x[0] + Rational(1)); };
  const auto r = poly_identity_check(id, shifted, 1);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->size(), 1u);
}

TEST(PolyIdentity, DeterministicGivenSeed) {
  std::vector<Rational> a, b;
  const PolyEvaluator record_a = [&](std::span<const Rational> x) { a.push_back(x[0]); return QSqrt3(); };
  const PolyEvaluator record_b = [&](std::span<const Rational> x) { b.push_back(x[0]); return QSqrt3(); };
  const PolyEvaluator zero = [](std::span<const Rational>) { return QSqrt3(); };
  poly_identity_check(record_a, zero, 1, 20, 5);
  poly_identity_check(record_b, zero, 1, 20, 5);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 20u);
}
