#pragma once

#include <cmath>

#include "nkverify/exact/qsqrt3.hpp"

namespace nkv::codazzi {

using exact::QSqrt3;
using exact::Rational;

/// Scalar field used by the frame-level engine: exact Q(sqrt3) or long double.
template <class F>
struct Field;

template <>
struct Field<QSqrt3> {
  static QSqrt3 sqrt3() { return QSqrt3::sqrt3(); }
  static bool negligible(const QSqrt3& x, double /*scale*/) { return x.is_zero(); }
  static double magnitude(const QSqrt3& x) { return std::abs(x.approx()); }
};

template <>
struct Field<long double> {
  static long double sqrt3() { return std::sqrt(3.0L); }
  static bool negligible(long double x, double scale) { return std::abs(x) <= 1e-15L * scale; }
  static double magnitude(long double x) { return static_cast<double>(std::abs(x)); }
};

}  // namespace nkv::codazzi
