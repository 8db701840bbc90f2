#include "nkverify/exact/qsqrt3.hpp"

#include <cmath>
#include <ostream>

#include "nkverify/errors.hpp"

namespace nkv::exact {

QSqrt3 QSqrt3::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(sqrt3)");
  const Rational n = norm();
  return {a_ / n, -b_ / n};
}

int QSqrt3::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 3 b^2.
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(3) * b_ * b_;
  return lhs > rhs ? sa : sb;
}

double QSqrt3::approx() const { return a_.to_double() + b_.to_double() * std::sqrt(3.0); }

QSqrt3& QSqrt3::operator+=(const QSqrt3& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator-=(const QSqrt3& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QSqrt3& QSqrt3::operator*=(const QSqrt3& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + Rational(3) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string QSqrt3::str() const { return a_.str() + " + " + b_.str() + "*sqrt3"; }

std::ostream& operator<<(std::ostream& os, const QSqrt3& x) { return os << x.str(); }

}  // namespace nkv::exact
