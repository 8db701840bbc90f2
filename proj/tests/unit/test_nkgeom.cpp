#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/chart.hpp"
#include "nkverify/nkgeom/connection.hpp"
#include "nkverify/nkgeom/structure.hpp"
#include "nkverify/nkgeom/suite.hpp"
#include "oracles.hpp"

using namespace nkv::nkgeom;
using nkv::testing::random_unit;
using nkv::testing::random_vec6;

namespace {

const PointS3S3 kIdentity{Quaternion::identity(), Quaternion::identity()};

TangentVector tv(const PointS3S3& b, ImaginaryQuaternion a, ImaginaryQuaternion c) { return {b, a, c}; }

}  // namespace

TEST(Structure, MetricValues) {
  const TangentVector pi = tv(kIdentity, {1, 0, 0}, {});
  const TangentVector qi = tv(kIdentity, {}, {1, 0, 0});
  EXPECT_DOUBLE_EQ(metric_g(pi, pi), 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(metric_g(pi, qi), -2.0 / 3.0);
  EXPECT_NEAR(metric_g_from_definition(pi, qi), -2.0 / 3.0, 1e-15);
}

TEST(Structure, JOnEqualComponents) {
  const ImaginaryQuaternion a{0.3, -1.2, 0.7};
  const TangentVector j = apply_J(tv(kIdentity, a, a));
  EXPECT_LT((j.alpha - a / std::sqrt(3.0)).norm(), 1e-15);
  EXPECT_LT((j.beta + a / std::sqrt(3.0)).norm(), 1e-15);
}

TEST(Structure, PSwapsComponents) {
  const TangentVector x = tv(kIdentity, {1, 2, 3}, {4, 5, 6});
  const TangentVector p = apply_P(x);
  EXPECT_EQ(p.alpha, x.beta);
  EXPECT_EQ(p.beta, x.alpha);
  const TangentVector pp = apply_P(p);
  EXPECT_EQ(pp.alpha, x.alpha);
  EXPECT_EQ(pp.beta, x.beta);
}

TEST(Structure, BasePointMismatch) {
  std::mt19937_64 rng(1);
  const PointS3S3 other(random_unit(rng), random_unit(rng));
  EXPECT_THROW(metric_g(tv(kIdentity, {1, 0, 0}, {}), tv(other, {1, 0, 0}, {})), nkv::DomainError);
  EXPECT_THROW(PointS3S3(Quaternion(2, 0, 0, 0), Quaternion()), nkv::DomainError);
}

TEST(Structure, MatricesMatchPointwiseMaps) {
  std::mt19937_64 rng(2);
  const PointS3S3 b(random_unit(rng), random_unit(rng));
  for (int s = 0; s < 50; ++s) {
    const Vec6 v = random_vec6(rng), w = random_vec6(rng);
    const auto x = TangentVector::from_components(b, v), y = TangentVector::from_components(b, w);
    EXPECT_NEAR(metric_g(x, y), v.dot(metric_matrix() * w), 1e-13);
    EXPECT_LT((apply_J(x).components() - j_matrix() * v).norm(), 1e-14);
    EXPECT_LT((apply_P(x).components() - p_matrix() * v).norm(), 1e-15);
  }
}

TEST(Structure, SuitePasses) {
  for (const auto& r : structure_suite(1000, 7)) EXPECT_EQ(r.status, nkv::Status::pass) << r.id;
}

TEST(Structure, ImpossibleToleranceFailsWithFiniteResiduals) {
  const auto records = structure_suite(50, 7, 1e-30);
  bool failed = false;
  for (const auto& r : records) {
    EXPECT_TRUE(std::isfinite(r.max_residual));
    failed = failed || r.status == nkv::Status::fail;
  }
  EXPECT_TRUE(failed);
}

TEST(Chart, OriginAndRoundTrip) {
  std::mt19937_64 rng(4);
  const PointS3S3 b(random_unit(rng), random_unit(rng));
  const Chart ch(b);
  EXPECT_TRUE(ch.point(Vec6::Zero()).near(b));
  EXPECT_LT((ch.pushforward(Vec6::Zero()) - Mat6::Identity()).norm(), 1e-10);
  std::uniform_real_distribution<double> u(-0.28, 0.28);
  for (int s = 0; s < 100; ++s) {
    Vec6 x;
    for (int i = 0; i < 6; ++i) x[i] = u(rng);
    EXPECT_LT((ch.coordinates(ch.point(x)) - x).norm(), 1e-10);
  }
}

TEST(Chart, PushforwardMatchesDifferences) {
  std::mt19937_64 rng(8);
  const Chart ch(PointS3S3(random_unit(rng), random_unit(rng)));
  const Vec6 x = 0.3 * random_vec6(rng);
  const Mat6 t = ch.pushforward(x);
  const double h = 1e-6;
  for (int a = 0; a < 6; ++a) {
    const Vec6 e = Vec6::Unit(a) * h;
    // Left-trivialized difference: log(p^-1 p') / (2h) at the midpoint base.
    const PointS3S3 plus = ch.point(x + e), minus = ch.point(x - e);
    const Chart local(ch.point(x));
    const Vec6 d = (local.coordinates(plus) - local.coordinates(minus)) / (2 * h);
    EXPECT_LT((d - t.col(a)).norm(), 1e-8) << a;
  }
}

TEST(Chart, RadiusCap) {
  const Chart ch(kIdentity);
  Vec6 x = Vec6::Zero();
  x[0] = kChartRadius + 0.01;
  EXPECT_THROW(ch.point(x), nkv::DomainError);
  x[0] = 0.0;
  x[4] = -(kChartRadius + 0.01);
  EXPECT_THROW(ch.point(x), nkv::DomainError);
}

TEST(Connection, ChristoffelSymmetric) {
  std::mt19937_64 rng(5);
  const Chart ch(PointS3S3(random_unit(rng), random_unit(rng)));
  const Christoffel g = christoffel(ch, 0.2 * random_vec6(rng));
  for (int c = 0; c < 6; ++c) EXPECT_EQ(g.gamma[c], g.gamma[c].transpose());
}

TEST(Connection, MetricCompatibility) {
  std::mt19937_64 rng(6);
  const Chart ch(PointS3S3(random_unit(rng), random_unit(rng)));
  const CoordinateField w = [](const Vec6& x) {
    Vec6 o;
    o << std::sin(x[0]), x[1] * x[1], 1.0, x[3] * x[4], std::cos(x[5]), 0.5 + x[2];
    return o;
  };
  for (int s = 0; s < 10; ++s) {
    const Vec6 x = 0.3 * random_vec6(rng), v = random_vec6(rng);
    auto energy = [&](double t) {
      const Vec6 y = x + t * v;
      return w(y).dot(ch.metric(y) * w(y));
    };
    const double h = 1e-5;
    const double lhs = (energy(h) - energy(-h)) / (2 * h);
    const Vec6 nabla = covariant_derivative_coordinates(ch, v, w, x);
    const double rhs = 2.0 * nabla.dot(ch.metric(x) * w(x));
    EXPECT_LT(std::abs(lhs - rhs), 1e-5);
  }
}

TEST(Connection, FactorIsTotallyGeodesic) {
  // Geodesic through (1, 1) with initial velocity (i, 0), integrated with the
  // computed Christoffel symbols, must stay in S3 x {1}.
  const Chart ch(kIdentity);
  Vec6 x = Vec6::Zero(), v = Vec6::Unit(0);
  auto accel = [&](const Vec6& p, const Vec6& q) { return -christoffel(ch, p).contract(q, q); };
  const int steps = 100;
  const double dt = 1.0 / steps;
  double drift = 0.0;
  for (int s = 0; s < steps; ++s) {
    const Vec6 k1x = v, k1v = accel(x, v);
    const Vec6 k2x = v + 0.5 * dt * k1v, k2v = accel(x + 0.5 * dt * k1x, k2x);
    const Vec6 k3x = v + 0.5 * dt * k2v, k3v = accel(x + 0.5 * dt * k2x, k3x);
    const Vec6 k4x = v + dt * k3v, k4v = accel(x + dt * k3x, k4x);
    x += dt / 6 * (k1x + 2 * k2x + 2 * k3x + k4x);
    v += dt / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    drift = std::max(drift, x.tail<3>().norm());
  }
  EXPECT_LT(drift, 1e-8);
  const PointS3S3 end = ch.point(x);
  EXPECT_LT((end.q() - Quaternion::identity()).norm(), 1e-8);
}

TEST(Connection, StepUnderflow) {
  const Chart ch(kIdentity);
  EXPECT_THROW(christoffel(ch, Vec6::Zero(), 1e-14), nkv::NumericError);
}

TEST(GTensor, MatchesInvariantConnection) {
  std::mt19937_64 rng(1);
  for (int s = 0; s < 20; ++s) {
    const PointS3S3 b(random_unit(rng), random_unit(rng));
    const Vec6 x = random_vec6(rng), y = random_vec6(rng);
    const auto gx = G_tensor(TangentVector::from_components(b, x), TangentVector::from_components(b, y));
    EXPECT_LT((gx.components() - nkv::testing::invariant_G(x, y)).norm(), 1e-8);
  }
}

TEST(GTensor, SkewAndOrthogonal) {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 20; ++s) {
    const PointS3S3 b(random_unit(rng), random_unit(rng));
    const auto x = TangentVector::from_components(b, random_vec6(rng));
    const auto y = TangentVector::from_components(b, random_vec6(rng));
    EXPECT_LT(G_tensor(x, x).components().norm(), 1e-5);
    EXPECT_LT((G_tensor(x, y) + G_tensor(y, x)).components().norm(), 1e-5);
    EXPECT_LT(std::abs(metric_g(G_tensor(x, y), y)), 1e-4);
    EXPECT_LT(std::abs(metric_g(G_tensor(x, y), x)), 1e-4);
  }
}

TEST(GTensor, NearlyKaehlerSuitePasses) {
  for (const auto& r : nearly_kaehler_suite(200, 7)) EXPECT_EQ(r.status, nkv::Status::pass) << r.id;
}
