#pragma once

#include <array>
#include <functional>

#include "nkverify/nkgeom/chart.hpp"

namespace nkv::nkgeom {

/// Step for metric differences; one Richardson level (h, h/2) is applied.
inline constexpr double kConnectionStep = 1e-4;

/// Christoffel symbols of g in a chart: gamma[c](a, b) = Gamma^c_ab.
struct Christoffel {
  std::array<Mat6, 6> gamma;

  /// Gamma(v, w)^c = sum_ab Gamma^c_ab v^a w^b.
  Vec6 contract(const Vec6& v, const Vec6& w) const;
};

/// Symmetric in (a, b) by construction.
Christoffel christoffel(const Chart& chart, const Vec6& x, double h = kConnectionStep);

/// Vector field given by its coordinate components.
using CoordinateField = std::function<Vec6(const Vec6&)>;

/// Coordinate components of nabla_V W at x.
Vec6 covariant_derivative_coordinates(const Chart& chart, const Vec6& v, const CoordinateField& w,
                                      const Vec6& x, double h = kConnectionStep);

/// nabla_V W at chart.point(x), with V given by coordinate components.
TangentVector covariant_derivative(const Chart& chart, const Vec6& v, const CoordinateField& w, const Vec6& x,
                                   double h = kConnectionStep);

/// G(X, Y) = (nabla_X J) Y, evaluated with the constant-coordinate extension
/// of Y in an exponential chart centred at the common base point.
TangentVector G_tensor(const TangentVector& x, const TangentVector& y, double h = kConnectionStep);

}  // namespace nkv::nkgeom
