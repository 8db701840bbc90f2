#include <gtest/gtest.h>

#include <numbers>

#include "nkverify/errors.hpp"
#include "nkverify/lagrangian/analyzer.hpp"
#include "nkverify/lagrangian/angles.hpp"
#include "nkverify/lagrangian/examples.hpp"
#include "nkverify/lagrangian/suite.hpp"
#include "oracles.hpp"

using namespace nkv::lagrangian;
using nkv::quat::Quaternion;

namespace {

Immersion builtin(const std::string& label) { return *find_builtin(label); }

const Vec3 kSample(0.1, -0.2, 0.3);

}  // namespace

TEST(Examples, Catalogue) {
  EXPECT_EQ(builtin_examples().size(), 4u);
  EXPECT_EQ(builtin_lagrangian_labels(), (std::vector<std::string>{"factor-left", "factor-right", "diagonal"}));
  EXPECT_FALSE(find_builtin("nope").has_value());
  const PointS3S3 origin = builtin("factor-left")(Vec3::Zero());
  EXPECT_TRUE(origin.near(PointS3S3(Quaternion(), Quaternion())));
}

TEST(Examples, LagrangianTest) {
  for (const auto& label : builtin_lagrangian_labels()) {
    const Immersion imm = builtin(label);
    for (const auto& u : imm.domain().grid(3)) {
      const auto t = is_lagrangian(imm, u);
      EXPECT_TRUE(t) << label;
      EXPECT_LT(t.residual, 1e-9);
    }
  }
  const auto twisted = is_lagrangian(builtin("twisted-control"), kSample);
  EXPECT_FALSE(twisted);
  EXPECT_GT(twisted.residual, 0.1);
}

TEST(Examples, AnalyticPushforwardMatchesDifferences) {
  for (const auto& imm : builtin_examples()) {
    const Immersion numeric(imm.label(), imm.domain(), [imm](const Vec3& u) { return imm(u); });
    const auto a = imm.pushforward(kSample), n = numeric.pushforward(kSample);
    for (int i = 0; i < 3; ++i) EXPECT_LT((a[i].components() - n[i].components()).norm(), 1e-8) << imm.label();
  }
}

TEST(SecondFundamentalForm, BuiltinsTotallyGeodesic) {
  for (const auto& label : builtin_lagrangian_labels()) {
    const Immersion imm = builtin(label);
    for (const auto& u : imm.domain().grid(3)) {
      const auto h = second_fundamental_form(imm, u);
      EXPECT_LT(h.norm, 1e-5) << label;
      EXPECT_LT(h.mean_curvature.norm(), 1e-5);
      EXPECT_LT(h.symmetry_residual, 1e-5);
    }
  }
}

TEST(SecondFundamentalForm, RefusesNonLagrangian) {
  EXPECT_THROW(second_fundamental_form(builtin("twisted-control"), kSample), nkv::DomainError);
  EXPECT_THROW(frame_components(builtin("twisted-control"), kSample), nkv::DomainError);
  EXPECT_THROW(codazzi_residual(builtin("twisted-control"), kSample), nkv::DomainError);
}

TEST(ABOperators, DiagonalIsFixedByP) {
  const auto ab = ab_operators(builtin("diagonal"), kSample);
  EXPECT_LT((ab.a - Mat3::Identity()).norm(), 1e-12);
  EXPECT_LT(ab.b.norm(), 1e-12);
}

TEST(ABOperators, Identities) {
  for (const auto& imm : {builtin("factor-left"), builtin("diagonal"), nkv::testing::conjugation_orbit()}) {
    const auto ab = ab_operators(imm, kSample);
    EXPECT_LT(ab.symmetry, 1e-8) << imm.label();
    EXPECT_LT(ab.commutator, 1e-8);
    EXPECT_LT(ab.identity_residual, 1e-8);
    EXPECT_LT(ab.decomposition_residual, 1e-8);
  }
}

TEST(Angles, IdentityIsDegenerate) {
  const AngleData d = angle_functions(Mat3::Identity(), Mat3::Zero());
  EXPECT_TRUE(d.degenerate);
  EXPECT_LT(d.theta.norm(), 1e-15);
}

TEST(Angles, ConstructThenRecover) {
  const Vec3 theta(0.3, 0.5, std::numbers::pi - 0.8);
  const Mat3 q = Eigen::AngleAxisd(0.7, Vec3(1, -2, 0.5).normalized()).toRotationMatrix();
  Mat3 a = Mat3::Zero(), b = Mat3::Zero();
  for (int i = 0; i < 3; ++i) {
    a(i, i) = std::cos(2 * theta[i]);
    b(i, i) = std::sin(2 * theta[i]);
  }
  const AngleData d = angle_functions(q * a * q.transpose(), q * b * q.transpose());
  EXPECT_FALSE(d.degenerate);
  // Ascending cos 2theta: pi - 0.8, 0.5, 0.3.
  const Vec3 expected(std::numbers::pi - 0.8, 0.5, 0.3);
  for (int i = 0; i < 3; ++i) EXPECT_LT(distance_mod_pi(d.theta[i] - expected[i]), 1e-10);
  for (int i = 0; i < 3; ++i) {
    const Vec3 e = d.eigenframe.col(i);
    EXPECT_LT((q * a * q.transpose() * e - std::cos(2 * d.theta[i]) * e).norm(), 1e-10);
  }
}

TEST(Angles, NonCommutingRejected) {
  Mat3 a = Mat3::Identity(), b = Mat3::Zero();
  a(0, 0) = -1;
  b(0, 1) = b(1, 0) = 0.5;
  EXPECT_THROW(angle_functions(a, b), nkv::DomainError);
}

TEST(Angles, ModPi) {
  EXPECT_NEAR(distance_mod_pi(std::numbers::pi - 1e-7), 1e-7, 1e-15);
  EXPECT_NEAR(reduce_mod_pi(-0.25), std::numbers::pi - 0.25, 1e-15);
  EXPECT_EQ(epsilon(0, 1, 2), 1);
  EXPECT_EQ(epsilon(1, 0, 2), -1);
  EXPECT_EQ(epsilon(0, 0, 2), 0);
}

TEST(FrameComponents, BuiltinsAreDegenerateAndFramed) {
  for (const auto& label : builtin_lagrangian_labels()) {
    const auto d = frame_components(builtin(label), kSample);
    EXPECT_TRUE(d.degenerate) << label;
    EXPECT_FALSE(d.angle_relation.has_value());
    EXPECT_LT(d.h.max_abs(), 1e-5);
    EXPECT_LT(d.frame_formula, 1e-4);
    EXPECT_LT(d.angle_sum, 1e-5);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(nkv::nkgeom::metric_g(d.frame[i], d.frame[j]), i == j, 1e-10);
  }
}

// A Lagrangian with distinct angles and nonzero h exercises every relation.
TEST(FrameComponents, ConjugationOrbit) {
  const Immersion imm = nkv::testing::conjugation_orbit();
  const auto d = frame_components(imm, kSample);
  EXPECT_LT(d.lagrangian_residual, 1e-9);
  EXPECT_FALSE(d.degenerate);
  EXPECT_GT(d.h.max_abs(), 0.1);
  EXPECT_LT(d.mean_curvature.norm(), 1e-5);
  EXPECT_LT(d.cubic_symmetry, 1e-5);
  EXPECT_LT(d.angle_sum, 1e-5);
  EXPECT_LT(d.frame_formula, 1e-4);
  EXPECT_LT(d.omega_antisymmetry, 1e-8);
  ASSERT_TRUE(d.angle_relation.has_value());
  EXPECT_LT(*d.angle_relation, 1e-5);
  ASSERT_TRUE(d.derivative_relation.has_value());
  EXPECT_LT(*d.derivative_relation, 1e-5);
  EXPECT_LT(codazzi_residual(imm, kSample), 1e-4);
  // Angles are 2pi/3, pi/3, 0 up to order.
  std::vector<double> t(d.theta.data(), d.theta.data() + 3);
  std::sort(t.begin(), t.end());
  EXPECT_NEAR(t[0], 0.0, 1e-8);
  EXPECT_NEAR(t[1], std::numbers::pi / 3, 1e-8);
  EXPECT_NEAR(t[2], 2 * std::numbers::pi / 3, 1e-8);
}

TEST(Codazzi, BuiltinsAndIsometricImages) {
  const Isometry iso{Quaternion(1, 2, 3, 4).normalized(), Quaternion(-1, 0.5, 2, 1).normalized(),
                     Quaternion(0.3, -1, 1, 2).normalized()};
  for (const auto& label : builtin_lagrangian_labels()) {
    EXPECT_LT(codazzi_residual(builtin(label), kSample), 1e-4) << label;
    const Immersion moved = compose(iso, builtin(label));
    EXPECT_LT(is_lagrangian(moved, kSample).residual, 1e-9);
    EXPECT_LT(codazzi_residual(moved, kSample), 1e-4) << label;
  }
}

TEST(Suite, DiagonalPasses) {
  for (const auto& r : lagrangian_suite(builtin("diagonal"), 5)) EXPECT_NE(r.status, nkv::Status::fail) << r.id;
}

TEST(Suite, TwistedControlSkipsDownstream) {
  const auto records = lagrangian_suite(builtin("twisted-control"), 2);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.front().status, nkv::Status::fail);
  for (std::size_t i = 1; i < records.size(); ++i) EXPECT_EQ(records[i].status, nkv::Status::skip);
}

TEST(Manifest, ComposesAndValidates) {
  const auto imm = immersion_from_manifest(nlohmann::json::parse(R"({
    "base": "diagonal", "label": "moved",
    "isometry": {"a": [0, 1, 0, 0], "c": [0.6, 0, 0.8, 0]},
    "domain": {"lo": [-0.2, -0.2, -0.2], "hi": [0.2, 0.2, 0.2]}})"));
  EXPECT_EQ(imm.label(), "moved");
  EXPECT_DOUBLE_EQ(imm.domain().hi[0], 0.2);
  EXPECT_LT(is_lagrangian(imm, Vec3(0.1, 0, 0)).residual, 1e-9);

  for (const char* bad : {R"({"base": "diagonal", "colour": 1})", R"({"base": "nope"})", R"({})",
                          R"({"base": "diagonal", "isometry": {"a": [2, 0, 0, 0]}})",
                          R"({"base": "diagonal", "domain": {"lo": [0, 0, 0], "hi": [0, 1, 1]}})"})
    EXPECT_THROW(immersion_from_manifest(nlohmann::json::parse(bad)), nkv::DomainError) << bad;
}
