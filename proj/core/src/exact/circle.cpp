#include "nkverify/exact/circle.hpp"

#include "nkverify/errors.hpp"

namespace nkv::exact {

CirclePoint::CirclePoint(Rational c, Rational s) : c_(std::move(c)), s_(std::move(s)) {
  if (c_ * c_ + s_ * s_ != Rational(1))
    throw DomainError("circle point off the unit circle: (" + c_.str() + ", " + s_.str() + ")");
}

CirclePoint CirclePoint::doubled() const { return angle_add(*this, *this); }

CirclePoint rat_circle_point(const Rational& t) {
  const Rational t2 = t * t;
  const Rational den = Rational(1) + t2;
  return {(Rational(1) - t2) / den, Rational(2) * t / den};
}

CirclePoint angle_add(const CirclePoint& p, const CirclePoint& q) {
  return {p.cos() * q.cos() - p.sin() * q.sin(), p.sin() * q.cos() + p.cos() * q.sin()};
}

CirclePoint angle_sub(const CirclePoint& p, const CirclePoint& q) {
  return angle_add(p, q.conjugate());
}

}  // namespace nkv::exact
