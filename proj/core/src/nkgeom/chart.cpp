#include "nkverify/nkgeom/chart.hpp"

#include <cmath>

#include <Eigen/LU>

#include "nkverify/errors.hpp"

namespace nkv::nkgeom {

namespace {

void require_orthonormal(const Eigen::Matrix3d& b) {
  if (!(b.transpose() * b).isIdentity(1e-12)) throw DomainError("chart basis must be orthonormal");
}

quat::Quaternion exp_of(const Eigen::Matrix3d& basis, const Eigen::Vector3d& x) {
  return quat::exp_im(ImaginaryQuaternion::from_vector(basis * x));
}

}  // namespace

Eigen::Matrix3d dexp_left(const Eigen::Vector3d& xi) {
  // dexp(xi) eta = a eta + c (xi.eta) xi - b xi x eta with t = |xi|,
  // a = sin 2t / 2t, b = (sin t / t)^2, c = (1 - a) / t^2.
  const double t = xi.norm();
  double a, b, c;
  if (t < 1e-4) {
    const double t2 = t * t;
    a = 1.0 - 2.0 * t2 / 3.0;
    b = 1.0 - t2 / 3.0;
    c = 2.0 / 3.0 - 2.0 * t2 / 15.0;
  } else {
    a = std::sin(2.0 * t) / (2.0 * t);
    const double s = std::sin(t) / t;
    b = s * s;
    c = (1.0 - a) / (t * t);
  }
  Eigen::Matrix3d cross;
  cross << 0.0, -xi.z(), xi.y(), xi.z(), 0.0, -xi.x(), -xi.y(), xi.x(), 0.0;
  return a * Eigen::Matrix3d::Identity() + c * xi * xi.transpose() - b * cross;
}

Chart::Chart(const PointS3S3& base, const Eigen::Matrix3d& basis_p, const Eigen::Matrix3d& basis_q)
    : base_(base), basis_p_(basis_p), basis_q_(basis_q) {
  require_orthonormal(basis_p);
  require_orthonormal(basis_q);
}

PointS3S3 Chart::point(const Vec6& x) const {
  const Eigen::Vector3d xp = x.head<3>();
  const Eigen::Vector3d xq = x.tail<3>();
  if (!(xp.norm() < kChartRadius) || !(xq.norm() < kChartRadius))
    throw DomainError("chart radius exceeded");
  return {(base_.p() * exp_of(basis_p_, xp)).normalized(), (base_.q() * exp_of(basis_q_, xq)).normalized()};
}

Vec6 Chart::coordinates(const PointS3S3& pt) const {
  Vec6 x;
  x.head<3>() = basis_p_.transpose() * quat::log_unit((base_.p().conj() * pt.p()).normalized()).vector();
  x.tail<3>() = basis_q_.transpose() * quat::log_unit((base_.q().conj() * pt.q()).normalized()).vector();
  return x;
}

Mat6 Chart::pushforward(const Vec6& x) const {
  Mat6 t = Mat6::Zero();
  t.topLeftCorner<3, 3>() = dexp_left(basis_p_ * x.head<3>()) * basis_p_;
  t.bottomRightCorner<3, 3>() = dexp_left(basis_q_ * x.tail<3>()) * basis_q_;
  return t;
}

Mat6 Chart::metric(const Vec6& x) const {
  const Mat6 t = pushforward(x);
  const Mat6 g = t.transpose() * metric_matrix() * t;
  return 0.5 * (g + g.transpose());
}

Mat6 Chart::j_coordinates(const Vec6& x) const {
  const Mat6 t = pushforward(x);
  return t.partialPivLu().solve(j_matrix() * t);
}

TangentVector Chart::tangent(const Vec6& x, const Vec6& w) const {
  return TangentVector::from_components(point(x), pushforward(x) * w);
}

}  // namespace nkv::nkgeom
