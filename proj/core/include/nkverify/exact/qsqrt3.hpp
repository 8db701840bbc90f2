#pragma once

#include <iosfwd>
#include <string>

#include "nkverify/exact/rational.hpp"

namespace nkv::exact {

/// Element a + b*sqrt(3) of the quadratic field Q(sqrt 3). sqrt(3) is carried
/// symbolically; nothing here rounds to floating point.
class QSqrt3 {
 public:
  QSqrt3() = default;
  template <std::integral I>
  QSqrt3(I a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt3 sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Field norm a^2 - 3 b^2; zero only for the zero element.
  Rational norm() const { return a_ * a_ - Rational(3) * b_ * b_; }
  QSqrt3 conjugate() const { return {a_, -b_}; }
  /// (a - b sqrt3) / (a^2 - 3 b^2); throws DomainError on zero.
  QSqrt3 inverse() const;

  /// Sign of the real number a + b sqrt3, decided exactly.
  int sign() const;

  /// Rounded value for reports and numeric cross-checks only.
  double approx() const;

  QSqrt3& operator+=(const QSqrt3& o);
  QSqrt3& operator-=(const QSqrt3& o);
  QSqrt3& operator*=(const QSqrt3& o);
  QSqrt3& operator/=(const QSqrt3& o) { return *this *= o.inverse(); }

  friend QSqrt3 operator+(QSqrt3 x, const QSqrt3& y) { return x += y; }
  friend QSqrt3 operator-(QSqrt3 x, const QSqrt3& y) { return x -= y; }
  friend QSqrt3 operator*(QSqrt3 x, const QSqrt3& y) { return x *= y; }
  friend QSqrt3 operator/(QSqrt3 x, const QSqrt3& y) { return x /= y; }
  friend QSqrt3 operator-(const QSqrt3& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// "a + b*sqrt3" with both parts as num/den.
  std::string str() const;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QSqrt3& x);

}  // namespace nkv::exact
