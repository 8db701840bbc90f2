#pragma once

#include "nkverify/exact/rational.hpp"

namespace nkv::exact {

/// Exact point (cos t, sin t) on the unit circle with rational coordinates.
/// The constructor rejects pairs with c^2 + s^2 != 1.
class CirclePoint {
 public:
  CirclePoint() : c_(1), s_(0) {}
  CirclePoint(Rational c, Rational s);

  const Rational& cos() const { return c_; }
  const Rational& sin() const { return s_; }

  /// Angle negation.
  CirclePoint conjugate() const { return {c_, -s_}; }
  CirclePoint doubled() const;

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  Rational c_;
  Rational s_;
};

/// Tangent half-angle parametrisation ((1-t^2)/(1+t^2), 2t/(1+t^2)).
CirclePoint rat_circle_point(const Rational& t);

/// Angle addition: (c1 c2 - s1 s2, s1 c2 + c1 s2).
CirclePoint angle_add(const CirclePoint& p, const CirclePoint& q);

/// Angle subtraction p - q.
CirclePoint angle_sub(const CirclePoint& p, const CirclePoint& q);

}  // namespace nkv::exact
