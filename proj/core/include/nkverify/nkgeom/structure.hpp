#pragma once

#include <Eigen/Core>

#include "nkverify/quat/quaternion.hpp"

namespace nkv::nkgeom {

using quat::ImaginaryQuaternion;
using quat::Quaternion;

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Point (p, q) of S^3 x S^3. Both factors are unit quaternions to 1e-9.
class PointS3S3 {
 public:
  PointS3S3() = default;
  PointS3S3(const Quaternion& p, const Quaternion& q);

  const Quaternion& p() const { return p_; }
  const Quaternion& q() const { return q_; }

  /// Componentwise comparison to `tol` in R^8.
  bool near(const PointS3S3& other, double tol = 1e-12) const;

 private:
  Quaternion p_;
  Quaternion q_;
};

/// Tangent vector (p alpha, q beta) at base (p, q), stored as the pair of
/// imaginary quaternions (alpha, beta).
struct TangentVector {
  PointS3S3 base;
  ImaginaryQuaternion alpha;
  ImaginaryQuaternion beta;

  /// (alpha_x, alpha_y, alpha_z, beta_x, beta_y, beta_z).
  Vec6 components() const;
  static TangentVector from_components(const PointS3S3& base, const Vec6& v);

  /// Ambient representation (p alpha, q beta) in R^8 = H x H.
  std::pair<Quaternion, Quaternion> ambient() const;
};

TangentVector operator+(const TangentVector& a, const TangentVector& b);
TangentVector operator-(const TangentVector& a, const TangentVector& b);
TangentVector operator*(double s, const TangentVector& a);

/// Hermitian metric in the (alpha, beta) representation:
/// 4/3 (<a,a'> + <b,b'>) - 2/3 (<a,b'> + <a',b>).
double metric_g(const TangentVector& x, const TangentVector& y);

/// Same metric from its definition 1/2 (<X,Y> + <JX,JY>) with the Euclidean
/// product of R^8 evaluated on the ambient vectors.
double metric_g_from_definition(const TangentVector& x, const TangentVector& y);

/// Euclidean product of R^8 on ambient vectors (product of round metrics).
double euclidean_product(const TangentVector& x, const TangentVector& y);

/// Almost complex structure: (p(2b - a)/sqrt3, q(b - 2a)/sqrt3).
TangentVector apply_J(const TangentVector& x);

/// Almost product structure: (p b, q a).
TangentVector apply_P(const TangentVector& x);

/// Constant 6x6 matrices of g, J and P acting on (alpha, beta) components.
const Mat6& metric_matrix();
const Mat6& j_matrix();
const Mat6& p_matrix();

/// Throws DomainError unless both vectors sit at the same base point.
void require_same_base(const TangentVector& x, const TangentVector& y);

}  // namespace nkv::nkgeom
