#include <gtest/gtest.h>

#include <cmath>

#include "nkverify/codazzi/checks.hpp"
#include "nkverify/errors.hpp"

using namespace nkv::codazzi;
using nkv::exact::rat_circle_point;
using nkv::exact::RationalSampler;

namespace {

const QSqrt3 kSqrt3 = QSqrt3::sqrt3();

// v = (1, 2, 3), theta_1, theta_2 from the tangent half-angles 1/3 and 2/7.
FrameState reference_state() {
  return FrameState({Rational(1), Rational(2), Rational(3)}, rat_circle_point(Rational(1, 3)),
                    rat_circle_point(Rational(2, 7)));
}

QSqrt3 q(long n, long d, long sn = 0, long sd = 1) { return {Rational(n, d), Rational(sn, sd)}; }

QSqrt3 parse(const char* a, const char* b = "0") { return {Rational::parse(a), Rational::parse(b)}; }

}  // namespace

TEST(FrameState, DoubledAngleSines) {
  const FrameState st = reference_state();
  EXPECT_EQ(st.sin2(0, 1), Rational(12144, 70225));
  EXPECT_EQ(st.sin2(0, 2), Rational(-911064, 1755625));
  EXPECT_EQ(angle_add(angle_add(st.theta(0), st.theta(1)), st.theta(2)), CirclePoint());
}

TEST(FrameState, Rejections) {
  const auto t = rat_circle_point(Rational(1, 3));
  // Coincident angles make some sin(theta_a - theta_b) vanish.
  EXPECT_THROW(FrameState({Rational(1), Rational(2), Rational(0)}, t, t), nkv::DomainError);
  // 4 v1^2 = 3 (v2^2 + v3^2) has no nonzero rational solution, so the only
  // rational state with a vanishing elimination factor is v = 0.
  const auto t2 = rat_circle_point(Rational(2, 7));
  EXPECT_THROW(FrameState({Rational(0), Rational(0), Rational(0)}, t, t2), nkv::DomainError);
  EXPECT_NO_THROW(FrameState({Rational(0), Rational(0), Rational(0)}, t, t2, false));
  EXPECT_EQ(ec_value({Rational(3), Rational(3), Rational(3)}), Rational(-18));
  EXPECT_EQ(ec_value({Rational(3), Rational(0), Rational(2)}), Rational(24));
}

TEST(Tensors, HFromVExamples) {
  const auto h = hijk_from_v<Rational>({Rational(1), Rational(0), Rational(0)});
  EXPECT_EQ(h(0, 0, 0), Rational(-2));
  EXPECT_EQ(h(0, 1, 1), Rational(1));
  EXPECT_EQ(h(1, 1, 0), Rational(1));
  EXPECT_EQ(h(1, 2, 0), Rational(0));
  const auto zero = hijk_from_v<Rational>({Rational(0), Rational(0), Rational(0)});
  for (const auto& x : zero.data) EXPECT_TRUE(x.is_zero());
}

TEST(Tensors, InvariantFormMatchesFrameComponents) {
  auto basis = [](int a) {
    Vec3Q e{Rational(0), Rational(0), Rational(0)};
    e[a] = Rational(1);
    return e;
  };
  RationalSampler rng(4);
  for (int s = 0; s < 50; ++s) {
    const Vec3Q v{rng.rational(9), rng.rational(9), rng.rational(9)};
    const auto h = hijk_from_v<Rational>(v);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) EXPECT_EQ(h(i, j, k), invariant_form_contraction(v, basis(i), basis(j), basis(k)));
  }
}

TEST(Tensors, OmegaExamples) {
  RationalSampler rng(2);
  const auto [t1, t2] = sample_angles(rng, {Rational(0), Rational(1), Rational(0)}, false);
  const FrameState st({Rational(0), Rational(1), Rational(0)}, t1, t2, false);
  const auto om = omega_from_data(st.data());
  EXPECT_EQ(om(0, 1, 2), QSqrt3(Rational(0), Rational(1, 6)));  // 1 / (2 sqrt3)
  EXPECT_EQ(om(0, 0, 1), -QSqrt3(st.cot(0, 1)));
  EXPECT_EQ(om(0, 1, 0), QSqrt3(st.cot(0, 1)));
  EXPECT_TRUE(om(1, 2, 2).is_zero());
}

TEST(Tensors, ReferenceComponents) {
  const CodazziSystem<QSqrt3> sys(reference_state().data());
  EXPECT_EQ(sys(0, 1, 0, 0).constant, parse("-437440361031/67515074") - QSqrt3(9) * kSqrt3);
  const std::array<long, 9> grad = {-30, -15, -10, 24, -12, -27, 0, 0, 0};
  for (int p = 0; p < 9; ++p) EXPECT_EQ(sys(0, 1, 0, 2).grad[p], QSqrt3(grad[p])) << p;
}

TEST(Tensors, EqualArgumentsVanish) {
  const FrameState origin({Rational(0), Rational(0), Rational(0)}, rat_circle_point(Rational(1, 3)),
                          rat_circle_point(Rational(2, 7)), false);
  const CodazziSystem<QSqrt3> sys(origin.data());
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      for (int m = 0; m < 3; ++m) {
        EXPECT_TRUE(sys(i, i, k, m).constant.is_zero());
        EXPECT_TRUE(sys(i, i, k, m).gradient_vanishes());
      }
}

TEST(Solve, ReferenceState) {
  const FrameState st = reference_state();
  const CodazziSystem<QSqrt3> sys(st.data());
  const auto first = solve_triple_system(sys, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}, first_solve_unknowns());
  const auto second = solve_triple_system(sys, {{0, 2, 0}, {0, 2, 1}, {0, 2, 2}}, second_solve_unknowns());
  for (const auto* s : {&first, &second}) {
    EXPECT_EQ(s->rank, 5);
    EXPECT_FALSE(s->anomaly);
    EXPECT_TRUE(s->leftover.empty());
    EXPECT_EQ(s->zero_rows, 4);
  }
  const std::array<QSqrt3, 9> zero{};
  EXPECT_EQ(first.value[d_index(1, 0)]->evaluate(zero), parse("-23148901039993/530182808925") - kSqrt3 / QSqrt3(4));

  const auto d2 = *first.value[d_index(0, 1)] - *second.value[d_index(0, 1)];
  const auto d3 = *first.value[d_index(0, 2)] - *second.value[d_index(0, 2)];
  EXPECT_EQ(d2.constant, q(104841, 34410250));
  EXPECT_EQ(d3.constant, q(303633, 120435875));
  EXPECT_TRUE(d2.gradient_vanishes());
  EXPECT_TRUE(d3.gradient_vanishes());
}

TEST(Solve, TotallyGeodesicState) {
  const FrameState origin({Rational(0), Rational(0), Rational(0)}, rat_circle_point(Rational(1, 3)),
                          rat_circle_point(Rational(2, 7)), false);
  const CodazziSystem<QSqrt3> sys(origin.data());
  const auto first = solve_triple_system(sys, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}, first_solve_unknowns());
  // At v = 0 the derivative terms drop out entirely.
  EXPECT_TRUE(first.anomaly);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) EXPECT_TRUE(sys(i, j, k, m).gradient_vanishes());
}

TEST(SolveRows, DetectsAnomalyAndLeftover) {
  Affine<QSqrt3> a, b;
  a.grad[0] = 1;
  a.constant = 2;
  b.grad[0] = 2;
  b.constant = 5;
  const auto s = solve_rows<QSqrt3>({a, b}, {0});
  EXPECT_EQ(s.rank, 1);
  ASSERT_EQ(s.leftover.size(), 1u);
  // The larger pivot 2 D + 5 = 0 is used; the other row leaves 2 - 5/2.
  EXPECT_EQ(s.leftover[0].constant, q(-1, 2));
  EXPECT_EQ(s.value[0]->constant, q(-5, 2));
  const auto none = solve_rows<QSqrt3>({a}, {1});
  EXPECT_TRUE(none.anomaly);
  EXPECT_EQ(none.free_unknowns, std::vector<int>{1});
}

TEST(System2, Coefficients) {
  const auto m = system2_coefficients({Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(m[0][0], Rational(22));
  EXPECT_EQ(m[0][1], Rational(-26));
  for (const auto& row : system2_coefficients({Rational(0), Rational(0), Rational(0)}))
    for (const auto& x : row) EXPECT_TRUE(x.is_zero());
  EXPECT_EQ(determinant_product({Rational(0), Rational(1), Rational(0)}), Rational(-12));
  EXPECT_EQ(determinant_product({Rational(1), Rational(0), Rational(0)}), Rational(0));
}

TEST(Checks, ExactSuitePasses) {
  for (auto check : {hijk_check, angle_relation_check, affinity_check, system1_check, case1_check, case2_check,
                     det_factorization_check}) {
    const auto r = check(7, 100);
    EXPECT_EQ(r.status, nkv::Status::pass) << r.id << " " << r.details.dump();
    EXPECT_EQ(r.samples, 100);
  }
}

TEST(Checks, SnapshotValues) {
  const auto s1 = system1_check(7, 20);
  EXPECT_EQ(s1.details["clearing_factor_delta2"], qsqrt3_json(q(-12, 5)));
  EXPECT_EQ(s1.details["clearing_factor_delta3"], qsqrt3_json(q(-12, 5)));
  EXPECT_EQ(s1.details["rank_first_solve"], 5);

  const auto c1 = case1_check(3, 10);
  EXPECT_EQ(c1.details["cubic_coefficient"], qsqrt3_json(q(0, 1, -1, 3)));

  const auto c2 = case2_check(3, 10);
  EXPECT_EQ(c2.details["factor_first"], qsqrt3_json(q(0, 1, 2, 3)));
  EXPECT_EQ(c2.details["factor_second"], qsqrt3_json(q(0, 1, -1, 3)));
}

TEST(Checks, DeterministicGivenSeed) {
  EXPECT_EQ(system1_check(11, 30).to_json(false).dump(), system1_check(11, 30).to_json(false).dump());
  EXPECT_EQ(case3_check(11, 20).to_json(false).dump(), case3_check(11, 20).to_json(false).dump());
}

TEST(Case3, ClosedFormsOnBranch) {
  const auto [e2v3, e2v1] = case3_closed_forms(1.0L, 0.0L);
  EXPECT_NEAR(static_cast<double>(e2v3), 1.0 / (4.0 * std::sqrt(3.0)), 1e-15);
  EXPECT_EQ(static_cast<double>(e2v1), 0.0);
}

TEST(Case3, CheckPasses) {
  const auto r = case3_check(7, 50);
  EXPECT_EQ(r.status, nkv::Status::pass) << r.details.dump();
  EXPECT_EQ(r.samples, 50);
  EXPECT_LT(r.details["closed_form_residual"].get<double>(), 1e-9);
  EXPECT_GT(r.details["branch_v3_zero_samples"].get<int>(), 0);
}
