#include "nkverify/quat/quaternion.hpp"

#include <cmath>
#include <ostream>

#include "nkverify/errors.hpp"

namespace nkv::quat {

double ImaginaryQuaternion::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dot(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

ImaginaryQuaternion cross(const ImaginaryQuaternion& a, const ImaginaryQuaternion& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

Quaternion Quaternion::normalized() const {
  const double n = norm();
  return {w / n, x / n, y / n, z / n};
}

Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

Quaternion exp_im(const ImaginaryQuaternion& a) {
  const double t = a.norm();
  // sin(t)/t, with a series below 1e-6 to avoid 0/0.
  const double sinc = t < 1e-6 ? 1.0 - t * t / 6.0 : std::sin(t) / t;
  return {std::cos(t), sinc * a.x, sinc * a.y, sinc * a.z};
}

ImaginaryQuaternion log_unit(const Quaternion& q) {
  const double n = q.norm();
  if (std::abs(n - 1.0) > kUnitTolerance) throw DomainError("log_unit: quaternion is not unit");
  if ((q + Quaternion::identity()).norm() < kUnitTolerance)
    throw BranchError("log_unit: antipode -1 is on the branch cut");
  const ImaginaryQuaternion v = q.imaginary();
  const double s = v.norm();
  const double t = std::atan2(s, q.w);
  // t / sin(t) with sin(t) = s; series for tiny angles.
  const double scale = (s < 1e-8 && q.w > 0.0) ? 1.0 + s * s / 6.0 : t / s;
  return v * scale;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
}

std::ostream& operator<<(std::ostream& os, const ImaginaryQuaternion& q) {
  return os << "(" << q.x << ", " << q.y << ", " << q.z << ")";
}

}  // namespace nkv::quat
