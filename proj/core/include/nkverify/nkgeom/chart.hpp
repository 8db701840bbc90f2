#pragma once

#include <Eigen/Core>

#include "nkverify/nkgeom/structure.hpp"

namespace nkv::nkgeom {

/// Exponential chart around a base point:
///   x -> (p exp(Bp x[0..2]), q exp(Bq x[3..5]))
/// with Bp, Bq orthonormal bases of the imaginary quaternions.
class Chart {
 public:
  explicit Chart(const PointS3S3& base, const Eigen::Matrix3d& basis_p = Eigen::Matrix3d::Identity(),
                 const Eigen::Matrix3d& basis_q = Eigen::Matrix3d::Identity());

  const PointS3S3& base() const { return base_; }

  /// Throws DomainError when either half of x leaves the ball of radius pi - 0.1.
  PointS3S3 point(const Vec6& x) const;

  /// Inverse of point(); principal branch of the logarithm.
  Vec6 coordinates(const PointS3S3& pt) const;

  /// Column a holds the (alpha, beta) components of d/dx_a at point(x).
  Mat6 pushforward(const Vec6& x) const;

  /// Components g(d/dx_a, d/dx_b).
  Mat6 metric(const Vec6& x) const;

  /// J expressed on coordinate vectors at point(x).
  Mat6 j_coordinates(const Vec6& x) const;

  /// Tangent vector at point(x) with coordinate components w.
  TangentVector tangent(const Vec6& x, const Vec6& w) const;

 private:
  PointS3S3 base_;
  Eigen::Matrix3d basis_p_;
  Eigen::Matrix3d basis_q_;
};

inline constexpr double kChartRadius = 3.141592653589793 - 0.1;

/// Left-trivialized differential of exp on imaginary quaternions:
/// exp(xi)^{-1} d/dt exp(xi + t eta) = dexp(xi) eta.
Eigen::Matrix3d dexp_left(const Eigen::Vector3d& xi);

}  // namespace nkv::nkgeom
