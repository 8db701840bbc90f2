#include "nkverify/humfit/fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

namespace nkv::humfit {

namespace {

constexpr int kMaxAscentSteps = 20000;
constexpr double kMinStep = 1e-16;
constexpr int kPolishSteps = 8;

// Projected ascent of x -> c(x, x, x) on the unit sphere; c is odd, so this
// maximizes |c| as well.
VecX ascend(const CubicTensor& c, VecX x) {
  double value = c.evaluate(x, x, x);
  double step = 0.5;
  for (int it = 0; it < kMaxAscentSteps; ++it) {
    const VecX g = 3.0 * c.contract(x);
    const VecX t = g - g.dot(x) * x;
    const double tn = t.norm();
    if (tn < kAscentGradientTol) break;
    const VecX y = (x + step * t / tn).normalized();
    const double vy = c.evaluate(y, y, y);
    if (vy > value) {
      x = y;
      value = vy;
      step = std::min(1.0, 2.0 * step);
    } else {
      step *= 0.5;
      if (step < kMinStep) break;
    }
  }
  return x;
}

// Riemannian Newton steps on the sphere for the critical-point equation of
// c(x, x, x); a step is kept only while it shrinks the tangential gradient.
VecX polish(const CubicTensor& c, VecX x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) return x;
  auto tangent_gradient = [&](const VecX& y) {
    const VecX g = c.contract(y);
    return VecX(g - g.dot(y) * y);
  };
  VecX grad = tangent_gradient(x);
  for (int it = 0; it < kPolishSteps && grad.norm() > 0.0; ++it) {
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(x).householderQ();
    const Eigen::MatrixXd basis = q.rightCols(n - 1);
    Eigen::MatrixXd cx(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) cx(a, b) = 2.0 * c.evaluate(x, VecX::Unit(n, a), VecX::Unit(n, b));
    cx -= c.evaluate(x, x, x) * Eigen::MatrixXd::Identity(n, n);
    const Eigen::MatrixXd hess = basis.transpose() * cx * basis;
    const Eigen::VectorXd step = hess.completeOrthogonalDecomposition().solve(-basis.transpose() * grad);
    const VecX y = (x + basis * step).normalized();
    const VecX gy = tangent_gradient(y);
    if (!(gy.norm() < grad.norm())) break;
    x = y;
    grad = gy;
  }
  return x;
}

bool lexicographically_positive(const VecX& u) {
  for (int i = 0; i < u.size(); ++i)
    if (u[i] != 0.0) return u[i] > 0.0;
  return true;
}

}  // namespace

nlohmann::json HUmbilicalFit::to_json() const {
  return {{"u", std::vector<double>(u.data(), u.data() + u.size())},
          {"lambda", lambda},
          {"mu", mu},
          {"residual", residual},
          {"minimality_residual", minimality_residual}};
}

HUmbilicalFit fit_for_direction(const CubicTensor& h, const VecX& u) {
  const CubicTensor p = humbilical_pattern(u, 1.0, 0.0);  // u u u
  const CubicTensor q = humbilical_pattern(u, 3.0, 1.0);  // symmetrized d u
  const int n = h.dim();
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
  Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Eigen::Vector2d basis(p(a, b, c), q(a, b, c));
        m += basis * basis.transpose();
        rhs += basis * h(a, b, c);
      }
  const Eigen::Vector2d sol = m.ldlt().solve(rhs);
  HUmbilicalFit f;
  f.u = u;
  f.lambda = sol[0] + 3.0 * sol[1];
  f.mu = sol[1];
  f.residual = (h - humbilical_pattern(u, f.lambda, f.mu)).norm();
  return f;
}

HUmbilicalFit best_fit(const CubicTensor& h) {
  const int n = h.dim();
  const double scale = h.norm();
  std::optional<HUmbilicalFit> best;
  if (scale > 0.0) {
    const CubicTensor c = h * (1.0 / scale);
    std::mt19937_64 rng(kFitSeed);
    std::normal_distribution<double> normal;
    for (int s = 0; s < kFitStarts; ++s) {
      VecX x(n);
      for (int i = 0; i < n; ++i) x[i] = normal(rng);
      if (x.norm() == 0.0) x = VecX::Unit(n, 0);
      HUmbilicalFit f = fit_for_direction(h, polish(c, ascend(c, x.normalized())));
      if (!best || f.residual < best->residual) best = f;
    }
  } else {
    best = fit_for_direction(h, VecX::Unit(n, 0));
  }
  HUmbilicalFit f = *best;
  // (u, lambda, mu) and (-u, -lambda, -mu) give the same pattern.
  if (f.mu < 0.0 || (f.mu == 0.0 && !lexicographically_positive(f.u))) {
    f.u = -f.u;
    f.lambda = -f.lambda;
    f.mu = -f.mu;
  }
  f.minimality_residual = std::abs(f.lambda + 2.0 * f.mu);
  return f;
}

std::optional<HUmbilicalFit> fit(const CubicTensor& h, double tol) {
  const double norm = h.norm();
  if (norm < tol) {
    HUmbilicalFit f;
    f.u = VecX::Unit(h.dim(), 0);
    f.residual = norm;
    return f;
  }
  HUmbilicalFit f = best_fit(h);
  if (f.residual < tol) return f;
  return std::nullopt;
}

}  // namespace nkv::humfit
