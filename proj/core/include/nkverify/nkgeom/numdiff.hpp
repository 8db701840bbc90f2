#pragma once

#include <cmath>

#include "nkverify/errors.hpp"

namespace nkv::nkgeom {

/// Smallest step accepted by the finite-difference routines.
inline constexpr double kMinStep = 1e-10;

inline void require_step(double h) {
  if (!std::isfinite(h) || h < kMinStep) throw NumericError("finite-difference step underflow");
}

/// d/dt f(t) at t = 0 from central differences at h and h/2 combined by one
/// Richardson level. f returns a scalar or an Eigen object.
template <class F>
auto richardson_derivative(F&& f, double h) {
  require_step(h);
  using R = decltype(f(0.0) * 1.0);
  const auto fh = f(h);
  const auto fmh = f(-h);
  const auto fh2 = f(0.5 * h);
  const auto fmh2 = f(-0.5 * h);
  if constexpr (std::is_arithmetic_v<R>) {
    const double coarse = (fh - fmh) / (2.0 * h);
    const double fine = (fh2 - fmh2) / h;
    return (4.0 * fine - coarse) / 3.0;
  } else {
    const auto coarse = ((fh - fmh) / (2.0 * h)).eval();
    const auto fine = ((fh2 - fmh2) / h).eval();
    return ((4.0 * fine - coarse) / 3.0).eval();
  }
}

}  // namespace nkv::nkgeom
