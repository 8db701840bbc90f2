#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nkverify/nkgeom/structure.hpp"

namespace nkv::lagrangian {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using nkgeom::PointS3S3;
using nkgeom::TangentVector;

/// Axis-aligned box lo <= u <= hi.
struct Box {
  Vec3 lo = Vec3::Constant(-0.5);
  Vec3 hi = Vec3::Constant(0.5);

  bool contains(const Vec3& u) const;
  /// n^3 points of a regular grid including the corners (n = 1 gives the centre).
  std::vector<Vec3> grid(int n) const;
};

/// Central-difference step for numeric pushforwards.
inline constexpr double kPushforwardStep = 1e-5;

class Immersion {
 public:
  using Map = std::function<PointS3S3(const Vec3&)>;
  using Pushforward = std::function<std::array<TangentVector, 3>(const Vec3&)>;

  Immersion(std::string label, Box domain, Map map, std::optional<Pushforward> pushforward = std::nullopt);

  const std::string& label() const { return label_; }
  const Box& domain() const { return domain_; }
  bool has_analytic_pushforward() const { return pushforward_.has_value(); }

  PointS3S3 operator()(const Vec3& u) const { return map_(u); }

  /// f_* e_a at u; analytic when supplied, else central differences with
  /// step kPushforwardStep in an exponential chart centred at f(u).
  std::array<TangentVector, 3> pushforward(const Vec3& u) const;

 private:
  std::string label_;
  Box domain_;
  Map map_;
  std::optional<Pushforward> pushforward_;
};

}  // namespace nkv::lagrangian
