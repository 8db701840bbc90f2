#pragma once

#include <array>

#include "nkverify/lagrangian/immersion.hpp"
#include "nkverify/nkgeom/connection.hpp"

namespace nkv::lagrangian {

using nkgeom::Mat6;
using nkgeom::Vec6;
using Mat63 = Eigen::Matrix<double, 6, 3>;

/// Step for second derivatives of the chart representation (Richardson h, h/2).
inline constexpr double kSecondDerivativeStep = 1e-3;
/// Step for derivatives of frame-level data along frame directions.
inline constexpr double kFrameStep = 2e-3;
/// Smallest admissible eigenvalue of the induced Gram matrix.
inline constexpr double kRankThreshold = 1e-6;

/// Index tensor T(i, j, k) over {0, 1, 2}.
struct FrameTensor {
  std::array<double, 27> data{};
  double& operator()(int i, int j, int k) { return data[9 * i + 3 * j + k]; }
  double operator()(int i, int j, int k) const { return data[9 * i + 3 * j + k]; }
  double max_abs() const;
};

/// Levi-Civita symbol on {0, 1, 2}.
int epsilon(int i, int j, int k);

/// An immersion seen through one exponential chart centred at f(u0). All
/// coordinate data at nearby parameters is expressed in this same chart.
class LocalChart {
 public:
  LocalChart(const Immersion& imm, const Vec3& u0);

  const nkgeom::Chart& chart() const { return chart_; }
  const Vec3& centre() const { return u0_; }

  Vec6 coordinates(const Vec3& u) const;
  /// Column a: coordinate components of f_* e_a at u.
  Mat63 jacobian(const Vec3& u) const;
  /// hessian[3a + b]: second partial derivative of the coordinates.
  std::array<Vec6, 9> hessian(const Vec3& u) const;

  /// Induced metric in parameter space; throws DomainError when rank-deficient.
  Mat3 gram(const Mat63& jac, const Vec6& x) const;

  /// Upper-triangular K with f_* K orthonormal (Gram-Schmidt on f_* e_1, e_2, e_3).
  Mat3 gram_schmidt(const Mat3& gram) const;

  /// (alpha, beta) components of coordinate vectors at x.
  Mat6 pushforward(const Vec6& x) const { return chart_.pushforward(x); }

  /// Components g(nabla~_{E_i} E_j, J E_k) for the frame E = f_* K at u.
  FrameTensor cubic(const Vec3& u, const Mat3& k) const;

 private:
  const Immersion& imm_;
  Vec3 u0_;
  nkgeom::Chart chart_;
};

}  // namespace nkv::lagrangian
