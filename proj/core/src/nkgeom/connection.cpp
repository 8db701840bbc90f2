#include "nkverify/nkgeom/connection.hpp"

#include <Eigen/LU>

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/numdiff.hpp"

namespace nkv::nkgeom {

namespace {

void require_finite(const Vec6& v) {
  if (!v.allFinite()) throw NumericError("non-finite covariant derivative");
}

}  // namespace

Vec6 Christoffel::contract(const Vec6& v, const Vec6& w) const {
  Vec6 out;
  for (int c = 0; c < 6; ++c) out(c) = v.dot(gamma[c] * w);
  return out;
}

Christoffel christoffel(const Chart& chart, const Vec6& x, double h) {
  std::array<Mat6, 6> dg;
  for (int e = 0; e < 6; ++e) {
    dg[e] = richardson_derivative([&](double t) { return chart.metric(x + t * Vec6::Unit(e)); }, h);
  }
  const Mat6 ginv = chart.metric(x).inverse();

  Christoffel out;
  for (int a = 0; a < 6; ++a) {
    for (int b = a; b < 6; ++b) {
      Vec6 lowered;
      for (int d = 0; d < 6; ++d) lowered(d) = 0.5 * (dg[a](b, d) + dg[b](a, d) - dg[d](a, b));
      const Vec6 raised = ginv * lowered;
      for (int c = 0; c < 6; ++c) {
        out.gamma[c](a, b) = raised(c);
        out.gamma[c](b, a) = raised(c);
      }
    }
  }
  return out;
}

Vec6 covariant_derivative_coordinates(const Chart& chart, const Vec6& v, const CoordinateField& w, const Vec6& x,
                                      double h) {
  const Vec6 dw = richardson_derivative([&](double t) { return w(x + t * v); }, h);
  const Vec6 out = dw + christoffel(chart, x, h).contract(v, w(x));
  require_finite(out);
  return out;
}

TangentVector covariant_derivative(const Chart& chart, const Vec6& v, const CoordinateField& w, const Vec6& x,
                                   double h) {
  return chart.tangent(x, covariant_derivative_coordinates(chart, v, w, x, h));
}

TangentVector G_tensor(const TangentVector& x, const TangentVector& y, double h) {
  require_same_base(x, y);
  const Chart chart(x.base);
  // At the chart centre the pushforward is the identity, so coordinate and
  // (alpha, beta) components coincide.
  const Vec6 origin = Vec6::Zero();
  const Vec6 xv = x.components();
  const Vec6 yv = y.components();
  const Christoffel gamma = christoffel(chart, origin, h);

  const Vec6 djy = richardson_derivative([&](double t) { return (chart.j_coordinates(t * xv) * yv).eval(); }, h);
  const Vec6 nabla_jy = djy + gamma.contract(xv, j_matrix() * yv);
  const Vec6 nabla_y = gamma.contract(xv, yv);
  const Vec6 g = nabla_jy - j_matrix() * nabla_y;
  require_finite(g);
  return TangentVector::from_components(x.base, g);
}

}  // namespace nkv::nkgeom
