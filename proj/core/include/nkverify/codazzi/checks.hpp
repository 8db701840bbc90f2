#pragma once

#include <array>
#include <cstdint>

#include "nkverify/codazzi/frame_state.hpp"
#include "nkverify/report.hpp"

namespace nkv::codazzi {

using Vec3Q = std::array<Rational, 3>;

/// g(h(X, Y), J Z) for h built from V by the invariant H-umbilical form,
/// contracted directly from g(V,V), g(X,V), ... (independent of hijk_from_v).
Rational invariant_form_contraction(const Vec3Q& v, const Vec3Q& x, const Vec3Q& y, const Vec3Q& z);

/// Signed 2x2 coefficient matrix of the compatibility system in the unknowns
/// sin 2(theta1 - theta2), sin 2(theta1 - theta3); entries are quartics in v.
std::array<std::array<Rational, 2>, 2> system2_coefficients(const Vec3Q& v);

/// 4 (v2^2 + v3^2) |v|^2 (2 v1^2 + v2^2 + v3^2) (4 v1^2 - 3 (v2^2 + v3^2)).
Rational determinant_product(const Vec3Q& v);

/// F1, F2 of the compatibility system at a state.
Rational compatibility_f1(const FrameState& st);
Rational compatibility_f2(const FrameState& st);

/// Unknowns of the two solves, zero-based D indices.
std::vector<int> first_solve_unknowns();   // E2(v1), E1(v2), E2(v2), E1(v3), E2(v3)
std::vector<int> second_solve_unknowns();  // E3(v1), E1(v2), E3(v2), E1(v3), E3(v3)

/// Minimum sample counts.
inline constexpr std::int64_t kMinExactStates = 100;
inline constexpr std::int64_t kMinCaseStates = 50;

// Each check draws sample i from seed + i and returns one report record.
CheckRecord hijk_check(std::uint64_t seed, std::int64_t trials);
CheckRecord angle_relation_check(std::uint64_t seed, std::int64_t trials);
CheckRecord affinity_check(std::uint64_t seed, std::int64_t trials);
CheckRecord system1_check(std::uint64_t seed, std::int64_t trials);
CheckRecord case1_check(std::uint64_t seed, std::int64_t trials);
CheckRecord case2_check(std::uint64_t seed, std::int64_t trials);
CheckRecord det_factorization_check(std::uint64_t seed, std::int64_t trials);

/// Floating-point check on the transcendental constraint variety.
inline constexpr double kCase3Tolerance = 1e-8;
CheckRecord case3_check(std::uint64_t seed, std::int64_t trials, double tol = kCase3Tolerance);

/// Closed forms for E2(v3), E2(v1) when v2 = 0 (values in long double).
std::pair<long double, long double> case3_closed_forms(long double v1, long double v3);

/// Exact JSON for a Q(sqrt3) value: {"a": "num/den", "b": "num/den"}.
nlohmann::json qsqrt3_json(const QSqrt3& x);

}  // namespace nkv::codazzi
