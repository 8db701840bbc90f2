#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nkverify/errors.hpp"
#include "nkverify/humfit/fit.hpp"
#include "nkverify/humfit/harness.hpp"
#include "nkverify/humfit/umbilical.hpp"
#include "nkverify/lagrangian/examples.hpp"

using namespace nkv::humfit;

namespace {

Eigen::Vector3d random_vector(std::mt19937_64& rng, double lo, double hi) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(lo, hi);
  Eigen::Vector3d v(normal(rng), normal(rng), normal(rng));
  return v.normalized() * radius(rng);
}

CubicTensor random_trace_free(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CubicTensor c(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int k = b; k < 3; ++k) c.set(a, b, k, normal(rng));
  // Remove the trace by subtracting the pattern with matching traces: for
  // w = (delta_ab t_c + ...)/5 the trace is t.
  Eigen::VectorXd t(3);
  for (int k = 0; k < 3; ++k) t(k) = c.trace(k) / 5.0;
  CubicTensor w(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int k = b; k < 3; ++k)
        w.set(a, b, k, (a == b ? t(k) : 0.0) + (b == k ? t(a) : 0.0) + (k == a ? t(b) : 0.0));
  return c - w;
}

}  // namespace

TEST(CubicTensor, SymmetricWrites) {
  CubicTensor c(3);
  c.set(0, 1, 2, 4.0);
  EXPECT_EQ(c(2, 1, 0), 4.0);
  EXPECT_EQ(c(1, 0, 2), 4.0);
  EXPECT_EQ(CubicTensor::key(2, 0, 1), "123");
  EXPECT_EQ(CubicTensor::keys(3).size(), 10u);
  EXPECT_EQ(CubicTensor::keys(2), (std::vector<std::string>{"111", "112", "122", "222"}));
}

TEST(CubicTensor, HFromVExamples) {
  const CubicTensor e1 = build_h_from_V(Eigen::Vector3d(1, 0, 0));
  EXPECT_DOUBLE_EQ(e1(0, 0, 0), -2.0);
  EXPECT_DOUBLE_EQ(e1(0, 1, 1), 1.0);
  EXPECT_DOUBLE_EQ(e1(0, 2, 2), 1.0);
  EXPECT_DOUBLE_EQ(e1(1, 1, 1), 0.0);
  EXPECT_DOUBLE_EQ(build_h_from_V(Eigen::Vector3d(2, 0, 0))(0, 1, 1), 8.0);
  EXPECT_EQ(build_h_from_V(Eigen::Vector3d::Zero()).norm(), 0.0);
}

TEST(CubicTensor, HFromVIsTraceFree) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 20; ++s) {
    const CubicTensor h = build_h_from_V(random_vector(rng, 0.1, 10.0));
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(h.trace(k), 0.0, 1e-10 * h.norm());
  }
}

TEST(CubicTensor, JsonRoundTrip) {
  const CubicTensor h = build_h_from_V(Eigen::Vector3d(0.3, -1.2, 0.7));
  const CubicTensor back = CubicTensor::from_json(h.to_json());
  EXPECT_EQ((h - back).norm(), 0.0);
}

TEST(CubicTensor, JsonErrorsNameTheKey) {
  nlohmann::json j = CubicTensor(3).to_json();
  j["components"].erase("123");
  try {
    (void)CubicTensor::from_json(j);
    FAIL() << "expected DomainError";
  } catch (const nkv::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("123"), std::string::npos) << e.what();
  }
  nlohmann::json extra = CubicTensor(3).to_json();
  extra["components"]["321"] = 1.0;
  EXPECT_THROW((void)CubicTensor::from_json(extra), nkv::DomainError);
  EXPECT_THROW((void)CubicTensor::from_json(nlohmann::json{{"n", 3}}), nkv::DomainError);
}

TEST(Fit, RecoversTheInvariantForm) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 100; ++s) {
    const Eigen::Vector3d v = random_vector(rng, 0.1, 10.0);
    const CubicTensor h = build_h_from_V(v);
    const auto f = fit(h, 1e-10 * std::max(1.0, h.norm()));
    ASSERT_TRUE(f.has_value()) << s;
    const double r3 = std::pow(v.norm(), 3);
    EXPECT_LT((f->u - v.normalized()).norm(), 1e-8);
    EXPECT_NEAR(f->mu, r3, 1e-9 * r3);
    EXPECT_NEAR(f->lambda, -2.0 * r3, 1e-9 * r3);
    EXPECT_LT(f->minimality_residual, 1e-9 * r3);
  }
}

TEST(Fit, ScaleEquivariance) {
  const CubicTensor h = humbilical_pattern(Eigen::Vector3d(0, 0.6, 0.8), 1.5, 0.4);
  const auto f = fit(h);
  const auto g = fit(h * 3.0);
  ASSERT_TRUE(f && g);
  EXPECT_NEAR(g->lambda, 3.0 * f->lambda, 1e-9);
  EXPECT_NEAR(g->mu, 3.0 * f->mu, 1e-9);
  EXPECT_LT((g->u - f->u).norm(), 1e-8);
  EXPECT_NEAR(f->lambda, 1.5, 1e-9);
  EXPECT_NEAR(f->mu, 0.4, 1e-9);
}

TEST(Fit, NegativeMuFlipsDirection) {
  const Eigen::Vector3d u(1, 0, 0);
  const auto f = fit(humbilical_pattern(u, 2.0, -1.0));
  ASSERT_TRUE(f);
  EXPECT_NEAR(f->mu, 1.0, 1e-9);
  EXPECT_NEAR(f->lambda, -2.0, 1e-9);
  EXPECT_LT((f->u + u).norm(), 1e-8);
}

TEST(Fit, ZeroTensor) {
  const auto f = fit(CubicTensor(3));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->lambda, 0.0);
  EXPECT_EQ(f->mu, 0.0);
  EXPECT_EQ(f->residual, 0.0);
}

TEST(Fit, OtherDimensions) {
  for (int n : {1, 2, 4, 5}) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    u(n - 1) = 1.0;
    const auto f = fit(humbilical_pattern(u, -0.7, 0.35));
    ASSERT_TRUE(f) << n;
    EXPECT_LT(f->residual, 1e-12);
    // In one dimension mu is not identifiable and the sign of u is a convention.
    if (n > 1) {
      EXPECT_NEAR(f->lambda, -0.7, 1e-9);
      EXPECT_NEAR(f->mu, 0.35, 1e-9);
    }
  }
}

// The ascent-based search is compared against an exhaustive sweep of unit
// directions with the closed-form least-squares (lambda, mu) per direction.
TEST(Fit, RejectsGenericTraceFreeTensors) {
  std::mt19937_64 rng(5);
  constexpr int kGrid = 64;
  for (int s = 0; s < 5; ++s) {
    const CubicTensor h = random_trace_free(rng);
    for (int k = 0; k < 3; ++k) ASSERT_NEAR(h.trace(k), 0.0, 1e-12);
    double sweep = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i)
      for (int j = 0; j < kGrid; ++j) {
        const double theta = std::numbers::pi * (i + 0.5) / kGrid;
        const double phi = 2.0 * std::numbers::pi * j / kGrid;
        Eigen::VectorXd u(3);
        u << std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta);
        sweep = std::min(sweep, fit_for_direction(h, u).residual);
      }
    const HUmbilicalFit best = best_fit(h);
    EXPECT_LE(best.residual, sweep + 1e-9);
    EXPECT_GT(best.residual, 0.05 * h.norm());
    EXPECT_FALSE(fit(h).has_value());
  }
}

TEST(Fit, Deterministic) {
  std::mt19937_64 rng(9);
  const CubicTensor h = random_trace_free(rng);
  EXPECT_EQ(best_fit(h).to_json().dump(), best_fit(h).to_json().dump());
}

TEST(Umbilical, Asymmetry) {
  Eigen::VectorXd xi(2);
  xi << 1.0, 0.0;
  EXPECT_DOUBLE_EQ(umbilical_asymmetry(xi), 1.0);
  EXPECT_EQ(umbilical_asymmetry(Eigen::VectorXd::Zero(3)), 0.0);
}

TEST(Umbilical, LemmaChecks) {
  for (int n : {2, 3, 4}) {
    const auto r = umbilical_lemma_check(n, 100, 7);
    EXPECT_EQ(r.status, nkv::Status::pass) << r.id;
    EXPECT_EQ(r.id, "lemma.umbilical_n" + std::to_string(n));
  }
  EXPECT_THROW((void)umbilical_lemma_check(1, 10, 7), nkv::DomainError);
}

TEST(Harness, BuiltinsAreTotallyGeodesic) {
  for (const auto& label : nkv::lagrangian::builtin_lagrangian_labels()) {
    const auto r = theorem_harness(*nkv::lagrangian::find_builtin(label), 3);
    EXPECT_EQ(r.status, nkv::Status::pass) << label << " " << r.details.dump();
    EXPECT_TRUE(r.details["falsification_candidates"].empty());
  }
}

TEST(Harness, RejectsNonLagrangianInput) {
  EXPECT_THROW((void)theorem_harness(*nkv::lagrangian::find_builtin("twisted-control"), 3), nkv::DomainError);
}
