#include "nkverify/lagrangian/local_geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/numdiff.hpp"

namespace nkv::lagrangian {

double FrameTensor::max_abs() const {
  double m = 0.0;
  for (double v : data) m = std::max(m, std::abs(v));
  return m;
}

int epsilon(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

LocalChart::LocalChart(const Immersion& imm, const Vec3& u0) : imm_(imm), u0_(u0), chart_(imm(u0)) {}

Vec6 LocalChart::coordinates(const Vec3& u) const { return chart_.coordinates(imm_(u)); }

Mat63 LocalChart::jacobian(const Vec3& u) const {
  Mat63 jac;
  if (imm_.has_analytic_pushforward()) {
    const Vec6 x = coordinates(u);
    const auto lu = chart_.pushforward(x).partialPivLu();
    const auto pf = imm_.pushforward(u);
    for (int a = 0; a < 3; ++a) jac.col(a) = lu.solve(pf[a].components());
    return jac;
  }
  for (int a = 0; a < 3; ++a) {
    jac.col(a) =
        nkgeom::richardson_derivative([&](double t) { return coordinates(u + t * Vec3::Unit(a)); }, kPushforwardStep);
  }
  return jac;
}

std::array<Vec6, 9> LocalChart::hessian(const Vec3& u) const {
  const double h = kSecondDerivativeStep;
  auto second = [&](int a, int b, double s) -> Vec6 {
    const Vec3 ea = s * Vec3::Unit(a);
    const Vec3 eb = s * Vec3::Unit(b);
    if (a == b) return (coordinates(u + ea) - 2.0 * coordinates(u) + coordinates(u - ea)) / (s * s);
    return (coordinates(u + ea + eb) - coordinates(u + ea - eb) - coordinates(u - ea + eb) +
            coordinates(u - ea - eb)) /
           (4.0 * s * s);
  };
  std::array<Vec6, 9> out;
  for (int a = 0; a < 3; ++a) {
    for (int b = a; b < 3; ++b) {
      const Vec6 d = (4.0 * second(a, b, 0.5 * h) - second(a, b, h)) / 3.0;
      out[3 * a + b] = d;
      out[3 * b + a] = d;
    }
  }
  return out;
}

Mat3 LocalChart::gram(const Mat63& jac, const Vec6& x) const {
  const Mat3 g = jac.transpose() * chart_.metric(x) * jac;
  Eigen::SelfAdjointEigenSolver<Mat3> es(g, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues()(0) > kRankThreshold)) throw DomainError("rank-deficient pushforward");
  return g;
}

Mat3 LocalChart::gram_schmidt(const Mat3& gram) const {
  const Eigen::LLT<Mat3> llt(gram);
  const Mat3 l = llt.matrixL();
  return l.inverse().transpose();
}

FrameTensor LocalChart::cubic(const Vec3& u, const Mat3& k) const {
  const Vec6 x = coordinates(u);
  const Mat63 jac = jacobian(u);
  const auto hess = hessian(u);
  const nkgeom::Christoffel gamma = nkgeom::christoffel(chart_, x);
  const Mat6 t = chart_.pushforward(x);
  const Mat6 mj = nkgeom::metric_matrix() * nkgeom::j_matrix();

  // (alpha, beta) components of nabla~_{d_a} d_b and of J E_k.
  std::array<Vec6, 9> amb;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) amb[3 * a + b] = t * (hess[3 * a + b] + gamma.contract(jac.col(a), jac.col(b)));
  const Mat63 frame = t * jac * k;

  FrameTensor c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) s += k(a, i) * k(b, j) * amb[3 * a + b].dot(mj * frame.col(m));
        c(i, j, m) = s;
      }
  return c;
}

}  // namespace nkv::lagrangian
