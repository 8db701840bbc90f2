#include "nkverify/lagrangian/angles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "nkverify/errors.hpp"

namespace nkv::lagrangian {

namespace {

// Sign so that the entry of largest magnitude is positive; keeps output
// independent of the eigensolver's sign choice.
void orient(Eigen::Ref<Vec3> e) {
  Eigen::Index idx = 0;
  e.cwiseAbs().maxCoeff(&idx);
  if (e(idx) < 0.0) e = -e;
}

}  // namespace

double reduce_mod_pi(double x) {
  double r = std::fmod(x, std::numbers::pi);
  if (r < 0.0) r += std::numbers::pi;
  if (r >= std::numbers::pi) r = 0.0;
  return r;
}

double distance_mod_pi(double x) {
  const double r = reduce_mod_pi(x);
  return std::min(r, std::numbers::pi - r);
}

AngleData angle_functions(const Mat3& a, const Mat3& b) {
  if ((a * b - b * a).norm() > 1e-6) throw DomainError("angle_functions: A and B do not commute");
  const Mat3 as = 0.5 * (a + a.transpose());
  const Mat3 bs = 0.5 * (b + b.transpose());

  Eigen::SelfAdjointEigenSolver<Mat3> ea(as);
  const Vec3 lambda = ea.eigenvalues();
  Mat3 vecs = ea.eigenvectors();
  std::array<bool, 3> keep_sign{false, false, false};

  // Diagonalize B inside each cluster of A-eigenvalues.
  int start = 0;
  while (start < 3) {
    int end = start + 1;
    while (end < 3 && lambda(end) - lambda(end - 1) < kDegeneracyThreshold) ++end;
    const int size = end - start;
    if (size > 1) {
      const Eigen::MatrixXd block = vecs.middleCols(start, size);
      const Eigen::MatrixXd restricted = block.transpose() * bs * block;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eb(restricted);
      const Eigen::VectorXd mu = eb.eigenvalues();
      Eigen::MatrixXd rotated = block * eb.eigenvectors();
      // Coincident B-eigenvalues: span the eigenspace by the projected input axes.
      int g0 = 0;
      while (g0 < size) {
        int g1 = g0 + 1;
        while (g1 < size && mu(g1) - mu(g1 - 1) < kDegeneracyThreshold) ++g1;
        if (g1 - g0 > 1) {
          const Eigen::MatrixXd space = rotated.middleCols(g0, g1 - g0);
          const Mat3 proj = space * space.transpose();
          int filled = g0;
          for (int axis = 0; axis < 3 && filled < g1; ++axis) {
            Vec3 e = proj * Vec3::Unit(axis);
            for (int c = g0; c < filled; ++c) e -= rotated.col(c).dot(e) * Vec3(rotated.col(c));
            if (e.norm() < 1e-3) continue;
            rotated.col(filled) = e.normalized();
            keep_sign[start + filled] = true;
            ++filled;
          }
        }
        g0 = g1;
      }
      vecs.middleCols(start, size) = rotated;
    }
    start = end;
  }

  Vec3 c2, s2;
  for (int i = 0; i < 3; ++i) {
    c2(i) = vecs.col(i).dot(as * vecs.col(i));
    s2(i) = vecs.col(i).dot(bs * vecs.col(i));
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    if (std::abs(c2(i) - c2(j)) >= kDegeneracyThreshold) return c2(i) < c2(j);
    if (std::abs(s2(i) - s2(j)) >= kDegeneracyThreshold) return s2(i) < s2(j);
    return false;
  });

  AngleData out;
  for (int k = 0; k < 3; ++k) {
    const int i = order[k];
    out.eigenframe.col(k) = vecs.col(i);
    if (!keep_sign[i]) orient(out.eigenframe.col(k));
    out.theta(k) = reduce_mod_pi(0.5 * std::atan2(s2(i), c2(i)));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::hypot(c2(i) - c2(j), s2(i) - s2(j)) < kDegeneracyThreshold) out.degenerate = true;
  return out;
}

}  // namespace nkv::lagrangian
