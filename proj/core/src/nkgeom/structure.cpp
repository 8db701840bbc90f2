#include "nkverify/nkgeom/structure.hpp"

#include <cmath>

#include "nkverify/errors.hpp"

namespace nkv::nkgeom {

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

Mat6 make_metric() {
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>().diagonal().setConstant(4.0 / 3.0);
  m.bottomRightCorner<3, 3>().diagonal().setConstant(4.0 / 3.0);
  m.topRightCorner<3, 3>().diagonal().setConstant(-2.0 / 3.0);
  m.bottomLeftCorner<3, 3>().diagonal().setConstant(-2.0 / 3.0);
  return m;
}

Mat6 make_j() {
  // alpha' = (2 beta - alpha)/sqrt3, beta' = (beta - 2 alpha)/sqrt3
  Mat6 m = Mat6::Zero();
  m.topLeftCorner<3, 3>().diagonal().setConstant(-kInvSqrt3);
  m.topRightCorner<3, 3>().diagonal().setConstant(2.0 * kInvSqrt3);
  m.bottomLeftCorner<3, 3>().diagonal().setConstant(-2.0 * kInvSqrt3);
  m.bottomRightCorner<3, 3>().diagonal().setConstant(kInvSqrt3);
  return m;
}

Mat6 make_p() {
  Mat6 m = Mat6::Zero();
  m.topRightCorner<3, 3>().setIdentity();
  m.bottomLeftCorner<3, 3>().setIdentity();
  return m;
}

}  // namespace

PointS3S3::PointS3S3(const Quaternion& p, const Quaternion& q) : p_(p), q_(q) {
  if (std::abs(p.norm() - 1.0) >= quat::kUnitTolerance || std::abs(q.norm() - 1.0) >= quat::kUnitTolerance)
    throw DomainError("PointS3S3: factors must be unit quaternions");
}

bool PointS3S3::near(const PointS3S3& other, double tol) const {
  return (p_ - other.p_).norm() <= tol && (q_ - other.q_).norm() <= tol;
}

Vec6 TangentVector::components() const {
  Vec6 v;
  v << alpha.x, alpha.y, alpha.z, beta.x, beta.y, beta.z;
  return v;
}

TangentVector TangentVector::from_components(const PointS3S3& base, const Vec6& v) {
  return {base, {v(0), v(1), v(2)}, {v(3), v(4), v(5)}};
}

std::pair<Quaternion, Quaternion> TangentVector::ambient() const {
  return {base.p() * alpha, base.q() * beta};
}

TangentVector operator+(const TangentVector& a, const TangentVector& b) {
  require_same_base(a, b);
  return {a.base, a.alpha + b.alpha, a.beta + b.beta};
}

TangentVector operator-(const TangentVector& a, const TangentVector& b) {
  require_same_base(a, b);
  return {a.base, a.alpha - b.alpha, a.beta - b.beta};
}

TangentVector operator*(double s, const TangentVector& a) { return {a.base, s * a.alpha, s * a.beta}; }

void require_same_base(const TangentVector& x, const TangentVector& y) {
  if (!x.base.near(y.base)) throw DomainError("tangent vectors live at different base points");
}

double metric_g(const TangentVector& x, const TangentVector& y) {
  require_same_base(x, y);
  using quat::dot;
  return 4.0 / 3.0 * (dot(x.alpha, y.alpha) + dot(x.beta, y.beta)) -
         2.0 / 3.0 * (dot(x.alpha, y.beta) + dot(y.alpha, x.beta));
}

double euclidean_product(const TangentVector& x, const TangentVector& y) {
  require_same_base(x, y);
  const auto [xp, xq] = x.ambient();
  const auto [yp, yq] = y.ambient();
  return quat::dot(xp, yp) + quat::dot(xq, yq);
}

double metric_g_from_definition(const TangentVector& x, const TangentVector& y) {
  return 0.5 * (euclidean_product(x, y) + euclidean_product(apply_J(x), apply_J(y)));
}

TangentVector apply_J(const TangentVector& x) {
  return {x.base, kInvSqrt3 * (2.0 * x.beta - x.alpha), kInvSqrt3 * (x.beta - 2.0 * x.alpha)};
}

TangentVector apply_P(const TangentVector& x) { return {x.base, x.beta, x.alpha}; }

const Mat6& metric_matrix() {
  static const Mat6 m = make_metric();
  return m;
}

const Mat6& j_matrix() {
  static const Mat6 m = make_j();
  return m;
}

const Mat6& p_matrix() {
  static const Mat6 m = make_p();
  return m;
}

}  // namespace nkv::nkgeom
