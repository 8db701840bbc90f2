#pragma once

#include <iosfwd>

#include <Eigen/Core>

namespace nkv::quat {

/// Purely imaginary quaternion x i + y j + z k; behaves as a vector of R^3.
struct ImaginaryQuaternion {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static ImaginaryQuaternion from_vector(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
  Eigen::Vector3d vector() const { return {x, y, z}; }

  double norm() const;

  ImaginaryQuaternion& operator+=(const ImaginaryQuaternion& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  ImaginaryQuaternion& operator-=(const ImaginaryQuaternion& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  ImaginaryQuaternion& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend ImaginaryQuaternion operator+(ImaginaryQuaternion a, const ImaginaryQuaternion& b) { return a += b; }
  friend ImaginaryQuaternion operator-(ImaginaryQuaternion a, const ImaginaryQuaternion& b) { return a -= b; }
  friend ImaginaryQuaternion operator-(const ImaginaryQuaternion& a) { return {-a.x, -a.y, -a.z}; }
  friend ImaginaryQuaternion operator*(double s, ImaginaryQuaternion a) { return a *= s; }
  friend ImaginaryQuaternion operator*(ImaginaryQuaternion a, double s) { return a *= s; }
  friend ImaginaryQuaternion operator/(ImaginaryQuaternion a, double s) { return a *= 1.0 / s; }
  friend bool operator==(const ImaginaryQuaternion&, const ImaginaryQuaternion&) = default;
};

/// Euclidean inner product on R^3.
double dot(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b);
ImaginaryQuaternion cross(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b);

/// Hamilton quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  explicit Quaternion(const ImaginaryQuaternion& v) : w(0.0), x(v.x), y(v.y), z(v.z) {}

  static Quaternion identity() { return {}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  double norm() const;
  Quaternion conj() const { return {w, -x, -y, -z}; }
  Quaternion normalized() const;
  ImaginaryQuaternion imaginary() const { return {x, y, z}; }
  Eigen::Vector4d vector() const { return {w, x, y, z}; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(double s, const Quaternion& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
Quaternion mul(const Quaternion& a, const Quaternion& b);
inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }
inline Quaternion operator*(const Quaternion& a, const ImaginaryQuaternion& b) { return mul(a, Quaternion(b)); }

/// Euclidean inner product on R^4.
double dot(const Quaternion& a, const Quaternion& b);

/// exp of an imaginary quaternion: cos|a| + sin|a| a/|a|; unit norm.
Quaternion exp_im(const ImaginaryQuaternion& a);

/// Principal logarithm of a unit quaternion, inverse of exp_im on |a| < pi.
/// Throws DomainError if |q| deviates from 1 by more than 1e-9 and BranchError
/// if q is within 1e-9 of -1.
ImaginaryQuaternion log_unit(const Quaternion& q);

inline constexpr double kUnitTolerance = 1e-9;

std::ostream& operator<<(std::ostream& os, const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const ImaginaryQuaternion& q);

}  // namespace nkv::quat
