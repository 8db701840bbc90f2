#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include <nlohmann/json.hpp>

#include "nkverify/codazzi/tensors.hpp"
#include "nkverify/exact/circle.hpp"
#include "nkverify/exact/identity_test.hpp"

namespace nkv::codazzi {

using exact::CirclePoint;

/// 4 v1^2 - 3 (v2^2 + v3^2).
Rational ec_value(const std::array<Rational, 3>& v);

/// Exact sample for the frame-level engine: rational v and exact circle points
/// for theta_1, theta_2 with theta_3 = -theta_1 - theta_2 imposed exactly.
class FrameState {
 public:
  /// Throws DomainError if some sin(theta_a - theta_b) vanishes, or if
  /// require_ec and 4 v1^2 - 3 (v2^2 + v3^2) = 0.
  FrameState(std::array<Rational, 3> v, CirclePoint theta1, CirclePoint theta2, bool require_ec = true);

  /// Same admissibility test without throwing.
  static bool admissible(const std::array<Rational, 3>& v, const CirclePoint& theta1, const CirclePoint& theta2,
                         bool require_ec);

  const std::array<Rational, 3>& v() const { return v_; }
  const CirclePoint& theta(int a) const { return theta_[a]; }
  /// theta_a - theta_b
  CirclePoint difference(int a, int b) const { return exact::angle_sub(theta_[a], theta_[b]); }
  Rational cot(int a, int b) const;
  /// sin(2 theta_a - 2 theta_b)
  Rational sin2(int a, int b) const;
  Rational ec() const { return ec_value(v_); }

  /// Same angles, different v (admissibility re-checked).
  FrameState with_v(std::array<Rational, 3> v, bool require_ec) const;

  FrameData<QSqrt3> data() const;

  /// Rationals as "num/den" strings.
  nlohmann::json to_json() const;

 private:
  std::array<Rational, 3> v_;
  std::array<CirclePoint, 3> theta_;
};

/// Numerator/denominator bound used when sampling states.
inline constexpr long kStateBound = 9;

/// Random admissible angle pair (theta_1, theta_2) for the given v.
std::pair<CirclePoint, CirclePoint> sample_angles(exact::RationalSampler& rng, const std::array<Rational, 3>& v,
                                                  bool require_ec);

/// Random admissible state with v_i drawn independently; components listed in
/// `zero_components` are fixed to 0.
FrameState sample_state(exact::RationalSampler& rng, bool require_ec, std::initializer_list<int> zero_components = {});

}  // namespace nkv::codazzi
