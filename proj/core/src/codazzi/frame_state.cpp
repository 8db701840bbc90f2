#include "nkverify/codazzi/frame_state.hpp"

#include <algorithm>

#include "nkverify/errors.hpp"

namespace nkv::codazzi {

namespace {

std::array<CirclePoint, 3> angles(const CirclePoint& t1, const CirclePoint& t2) {
  return {t1, t2, exact::angle_add(t1, t2).conjugate()};
}

nlohmann::json circle_json(const CirclePoint& p) { return {{"cos", p.cos().str()}, {"sin", p.sin().str()}}; }

}  // namespace

Rational ec_value(const std::array<Rational, 3>& v) {
  return Rational(4) * v[0] * v[0] - Rational(3) * (v[1] * v[1] + v[2] * v[2]);
}

bool FrameState::admissible(const std::array<Rational, 3>& v, const CirclePoint& theta1, const CirclePoint& theta2,
                            bool require_ec) {
  const auto th = angles(theta1, theta2);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (exact::angle_sub(th[a], th[b]).sin().is_zero()) return false;
  return !require_ec || !ec_value(v).is_zero();
}

FrameState::FrameState(std::array<Rational, 3> v, CirclePoint theta1, CirclePoint theta2, bool require_ec)
    : v_(std::move(v)), theta_(angles(theta1, theta2)) {
  if (!admissible(v_, theta1, theta2, require_ec)) throw DomainError("inadmissible frame state");
}

Rational FrameState::cot(int a, int b) const {
  const CirclePoint d = difference(a, b);
  return d.cos() / d.sin();
}

Rational FrameState::sin2(int a, int b) const { return difference(a, b).doubled().sin(); }

FrameState FrameState::with_v(std::array<Rational, 3> v, bool require_ec) const {
  return FrameState(std::move(v), theta_[0], theta_[1], require_ec);
}

FrameData<QSqrt3> FrameState::data() const {
  FrameData<QSqrt3> d;
  for (int i = 0; i < 3; ++i) d.v[i] = v_[i];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      d.cot[a][b] = cot(a, b);
      d.sin2[a][b] = sin2(a, b);
    }
  return d;
}

nlohmann::json FrameState::to_json() const {
  return {{"v", {v_[0].str(), v_[1].str(), v_[2].str()}},
          {"theta", {circle_json(theta_[0]), circle_json(theta_[1]), circle_json(theta_[2])}}};
}

std::pair<CirclePoint, CirclePoint> sample_angles(exact::RationalSampler& rng, const std::array<Rational, 3>& v,
                                                  bool require_ec) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const CirclePoint t1 = exact::rat_circle_point(rng.rational(kStateBound));
    const CirclePoint t2 = exact::rat_circle_point(rng.rational(kStateBound));
    if (FrameState::admissible(v, t1, t2, require_ec)) return {t1, t2};
  }
  throw NumericError("no admissible angles found");
}

FrameState sample_state(exact::RationalSampler& rng, bool require_ec, std::initializer_list<int> zero_components) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::array<Rational, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = rng.rational(kStateBound);
    for (int z : zero_components) v[z] = Rational(0);
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); })) continue;
    if (require_ec && ec_value(v).is_zero()) continue;
    const auto [t1, t2] = sample_angles(rng, v, require_ec);
    return FrameState(v, t1, t2, require_ec);
  }
  throw NumericError("no admissible state found");
}

}  // namespace nkv::codazzi
