#include "nkverify/lagrangian/examples.hpp"

#include <cmath>

#include <Eigen/Geometry>

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/chart.hpp"

namespace nkv::lagrangian {

namespace {

using quat::ImaginaryQuaternion;
using quat::Quaternion;

Quaternion expv(const Vec3& u) { return quat::exp_im(ImaginaryQuaternion::from_vector(u)); }

ImaginaryQuaternion dexp(const Vec3& u, const Vec3& e) {
  return ImaginaryQuaternion::from_vector(nkgeom::dexp_left(u) * e);
}

const Mat3& twist() {
  static const Mat3 r = Eigen::AngleAxisd(1.0, Vec3(1.0, 2.0, 3.0).normalized()).toRotationMatrix();
  return r;
}

void require_unit(const Quaternion& q) {
  if (std::abs(q.norm() - 1.0) >= quat::kUnitTolerance) throw DomainError("isometry parameters must be unit quaternions");
}

ImaginaryQuaternion conjugate_by(const Quaternion& c, const ImaginaryQuaternion& v) {
  return (c * v * c.conj()).imaginary();
}

}  // namespace

std::vector<Immersion> builtin_examples() {
  const Box box;
  std::vector<Immersion> out;
  out.emplace_back(
      "factor-left", box, [](const Vec3& u) { return PointS3S3(expv(u), Quaternion()); },
      [](const Vec3& u) {
        const PointS3S3 x(expv(u), Quaternion());
        std::array<TangentVector, 3> pf;
        for (int a = 0; a < 3; ++a) pf[a] = {x, dexp(u, Vec3::Unit(a)), {}};
        return pf;
      });
  out.emplace_back(
      "factor-right", box, [](const Vec3& u) { return PointS3S3(Quaternion(), expv(u)); },
      [](const Vec3& u) {
        const PointS3S3 x(Quaternion(), expv(u));
        std::array<TangentVector, 3> pf;
        for (int a = 0; a < 3; ++a) pf[a] = {x, {}, dexp(u, Vec3::Unit(a))};
        return pf;
      });
  out.emplace_back(
      "diagonal", box, [](const Vec3& u) { return PointS3S3(expv(u), expv(u)); },
      [](const Vec3& u) {
        const PointS3S3 x(expv(u), expv(u));
        std::array<TangentVector, 3> pf;
        for (int a = 0; a < 3; ++a) pf[a] = {x, dexp(u, Vec3::Unit(a)), dexp(u, Vec3::Unit(a))};
        return pf;
      });
  out.emplace_back(
      "twisted-control", box, [](const Vec3& u) { return PointS3S3(expv(u), expv(twist() * u)); },
      [](const Vec3& u) {
        const PointS3S3 x(expv(u), expv(twist() * u));
        std::array<TangentVector, 3> pf;
        for (int a = 0; a < 3; ++a) pf[a] = {x, dexp(u, Vec3::Unit(a)), dexp(twist() * u, twist().col(a))};
        return pf;
      });
  return out;
}

std::optional<Immersion> find_builtin(const std::string& label) {
  for (auto& imm : builtin_examples())
    if (imm.label() == label) return imm;
  return std::nullopt;
}

std::vector<std::string> builtin_lagrangian_labels() { return {"factor-left", "factor-right", "diagonal"}; }

PointS3S3 Isometry::apply(const PointS3S3& x) const {
  return {(a * x.p() * c.conj()).normalized(), (b * x.q() * c.conj()).normalized()};
}

TangentVector Isometry::apply(const TangentVector& v) const {
  return {apply(v.base), conjugate_by(c, v.alpha), conjugate_by(c, v.beta)};
}

Immersion compose(const Isometry& iso, const Immersion& imm) {
  require_unit(iso.a);
  require_unit(iso.b);
  require_unit(iso.c);
  Immersion::Map map = [iso, imm](const Vec3& u) { return iso.apply(imm(u)); };
  std::optional<Immersion::Pushforward> pf;
  if (imm.has_analytic_pushforward()) {
    pf = [iso, imm](const Vec3& u) {
      auto v = imm.pushforward(u);
      for (auto& t : v) t = iso.apply(t);
      return v;
    };
  }
  return Immersion(imm.label(), imm.domain(), std::move(map), std::move(pf));
}

}  // namespace nkv::lagrangian
