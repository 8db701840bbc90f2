#pragma once

#include <array>
#include <optional>

#include "nkverify/lagrangian/angles.hpp"
#include "nkverify/lagrangian/immersion.hpp"
#include "nkverify/lagrangian/local_geometry.hpp"

namespace nkv::lagrangian {

/// Operations that require a Lagrangian input refuse points above this residual.
inline constexpr double kLagrangianPrecondition = 1e-6;

struct LagrangianTest {
  bool lagrangian = false;
  double residual = 0.0;  ///< max |g(J E_a, E_b)| over an orthonormal tangent frame
  explicit operator bool() const { return lagrangian; }
};

LagrangianTest is_lagrangian(const Immersion& imm, const Vec3& u, double tol = 1e-9);

struct SecondFundamentalForm {
  std::array<TangentVector, 3> frame;  ///< Gram-Schmidt frame of f_* e_1, e_2, e_3
  FrameTensor cubic;                   ///< g(h(E_i, E_j), J E_k)
  Vec3 mean_curvature;                 ///< H = (1/3) sum_i h(E_i, E_i), components along J E_k
  double norm = 0.0;                   ///< Frobenius norm of the cubic components
  double symmetry_residual = 0.0;      ///< max |c_ijk - c_jik|, |c_ijk - c_ikj|
};

SecondFundamentalForm second_fundamental_form(const Immersion& imm, const Vec3& u);

struct ABOperators {
  std::array<TangentVector, 3> frame;  ///< frame in which A, B are expressed
  Mat3 a;                              ///< g(P E_a, E_b)
  Mat3 b;                              ///< g(P E_a, J E_b)
  double symmetry = 0.0;               ///< max |A - A^T|, |B - B^T|
  double commutator = 0.0;             ///< ||AB - BA||
  double identity_residual = 0.0;      ///< ||A^2 + B^2 - Id||
  double decomposition_residual = 0.0; ///< max_a |P E_a - A E_a - J B E_a|
};

ABOperators ab_operators(const Immersion& imm, const Vec3& u);

struct AdaptedFrameData {
  Vec3 u;
  PointS3S3 point;
  std::array<TangentVector, 3> frame;
  Vec3 theta;
  Mat3 a;
  Mat3 b;
  FrameTensor h;
  FrameTensor omega;
  Vec3 mean_curvature;
  bool degenerate = false;
  bool orientation_flipped = false;

  double lagrangian_residual = 0.0;
  double cubic_symmetry = 0.0;
  double commutator = 0.0;
  double ab_identity = 0.0;
  double angle_sum = 0.0;          ///< distance of theta_1 + theta_2 + theta_3 to pi Z
  double frame_formula = 0.0;      ///< max ||G(E_i, E_j) + (1/sqrt3) sum eps_ij^k J E_k||
  double omega_antisymmetry = 0.0; ///< max |omega_ij^k + omega_ik^j|
  std::optional<double> angle_relation;       ///< Lemma-3 algebraic relation, non-degenerate only
  std::optional<double> derivative_relation;  ///< max |E_i(theta_j) + h_jj^i|, non-degenerate only
};

/// Throws DomainError when the point fails the Lagrangian precondition.
AdaptedFrameData frame_components(const Immersion& imm, const Vec3& u);

/// max_{j != k} |h_ij^k cos(theta_j - theta_k) - (eps_ij^k / (2 sqrt3) - omega_ij^k) sin(theta_j - theta_k)|
double angle_relation_residual(const FrameTensor& h, const FrameTensor& omega, const Vec3& theta);

/// Max |JE_m-component| of (nabla-bar h)(X,Y,Z) - (nabla-bar h)(Y,X,Z) minus the
/// curvature term, over frame triples. Throws DomainError for non-Lagrangian input.
double codazzi_residual(const Immersion& imm, const Vec3& u);

}  // namespace nkv::lagrangian
