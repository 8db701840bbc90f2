#include "nkverify/lagrangian/analyzer.hpp"

#include <cmath>
#include <numbers>

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/numdiff.hpp"

namespace nkv::lagrangian {

namespace {

using Vec27 = Eigen::Matrix<double, 27, 1>;

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// Geometry of the Gram-Schmidt frame at one parameter, in the central chart.
struct Sample {
  Vec6 x;
  Mat63 jac;
  Mat3 k;   // frame = f_* k
  Mat63 w;  // (alpha, beta) components of the frame
  Mat3 a;
  Mat3 b;
  Mat3 lag;  // g(E_a, J E_b)
};

Sample sample(const LocalChart& lc, const Vec3& u) {
  Sample s;
  s.x = lc.coordinates(u);
  s.jac = lc.jacobian(u);
  s.k = lc.gram_schmidt(lc.gram(s.jac, s.x));
  s.w = lc.pushforward(s.x) * s.jac * s.k;
  const Mat6& m = nkgeom::metric_matrix();
  const Mat6 pm = nkgeom::p_matrix().transpose() * m;
  s.a = s.w.transpose() * pm * s.w;
  s.b = s.w.transpose() * pm * nkgeom::j_matrix() * s.w;
  s.lag = s.w.transpose() * m * nkgeom::j_matrix() * s.w;
  return s;
}

std::array<TangentVector, 3> tangent_frame(const PointS3S3& base, const Mat63& w) {
  return {TangentVector::from_components(base, w.col(0)), TangentVector::from_components(base, w.col(1)),
          TangentVector::from_components(base, w.col(2))};
}

double g_norm(const Vec6& v) { return std::sqrt(std::max(0.0, v.dot(nkgeom::metric_matrix() * v))); }

void require_lagrangian(const Sample& s) {
  if (s.lag.cwiseAbs().maxCoeff() > kLagrangianPrecondition)
    throw DomainError("immersion is not Lagrangian at this point");
}

double symmetry_residual(const FrameTensor& c) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        r = std::max({r, std::abs(c(i, j, k) - c(j, i, k)), std::abs(c(i, j, k) - c(i, k, j))});
  return r;
}

Vec3 mean_curvature(const FrameTensor& c) {
  Vec3 h = Vec3::Zero();
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) h(k) += c(i, i, k) / 3.0;
  return h;
}

// Smooth adapted frame field around the centre: Gram-Schmidt frame rotated
// into the simultaneous eigenframe of A and B, aligned column-wise with the
// centre frame. In the degenerate case the centre rotation is kept fixed.
class Analysis {
 public:
  Analysis(const Immersion& imm, const Vec3& u0) : lc_(imm, u0), centre_(sample(lc_, u0)) {
    require_lagrangian(centre_);
    const AngleData angles = angle_functions(centre_.a, centre_.b);
    q0_ = angles.eigenframe;
    theta0_ = angles.theta;
    degenerate_ = angles.degenerate;

    const auto e = frame(q0_);
    const Vec6 g12 = nkgeom::G_tensor(e[0], e[1]).components();
    const Vec6 je3 = nkgeom::j_matrix() * e[2].components();
    if (g12.dot(nkgeom::metric_matrix() * je3) > 0.0) {
      q0_.col(2) = -q0_.col(2);
      flipped_ = true;
    }
    w0_ = centre_.w * q0_;
  }

  const Sample& centre() const { return centre_; }
  const Mat3& q0() const { return q0_; }
  const Vec3& theta0() const { return theta0_; }
  bool degenerate() const { return degenerate_; }
  bool flipped() const { return flipped_; }
  const LocalChart& chart() const { return lc_; }

  std::array<TangentVector, 3> frame(const Mat3& q) const {
    return tangent_frame(lc_.chart().base(), centre_.w * q);
  }
  std::array<TangentVector, 3> frame() const { return frame(q0_); }

  Mat3 rotation(const Sample& s) const {
    if (degenerate_) return q0_;
    const Mat3 raw = angle_functions(s.a, s.b).eigenframe;
    Mat3 q;
    for (int c = 0; c < 3; ++c) {
      Eigen::Index best = 0;
      const Vec3 overlaps = raw.transpose() * q0_.col(c);
      overlaps.cwiseAbs().maxCoeff(&best);
      q.col(c) = overlaps(best) < 0.0 ? Vec3(-raw.col(best)) : Vec3(raw.col(best));
    }
    return q;
  }

  Vec3 theta(const Vec3& u) const {
    const Sample s = sample(lc_, u);
    const Mat3 q = rotation(s);
    Vec3 t;
    for (int j = 0; j < 3; ++j) {
      const double raw = 0.5 * std::atan2(q.col(j).dot(s.b * q.col(j)), q.col(j).dot(s.a * q.col(j)));
      t(j) = theta0_(j) + std::remainder(raw - theta0_(j), std::numbers::pi);
    }
    return t;
  }

  // Parameter-space direction of E_i at the centre.
  Vec3 direction(int i) const { return centre_.k * q0_.col(i); }

  Mat63 frame_coordinates(const Vec3& u) const {
    const Sample s = sample(lc_, u);
    return s.jac * s.k * rotation(s);
  }

  FrameTensor cubic() const { return lc_.cubic(lc_.centre(), centre_.k * q0_); }

  FrameTensor cubic_at(const Vec3& u) const {
    const Sample s = sample(lc_, u);
    return lc_.cubic(u, s.k * rotation(s));
  }

  FrameTensor omega() const {
    const Vec6 origin = centre_.x;
    const nkgeom::Christoffel gamma = nkgeom::christoffel(lc_.chart(), origin);
    const Mat6 gc = lc_.chart().metric(origin);
    const Mat63 e0 = centre_.jac * centre_.k * q0_;
    FrameTensor om;
    for (int i = 0; i < 3; ++i) {
      const Vec3 d = direction(i);
      const Mat63 de = nkgeom::richardson_derivative(
          [&](double t) { return frame_coordinates(lc_.centre() + t * d); }, kFrameStep);
      for (int j = 0; j < 3; ++j) {
        const Vec6 nabla = de.col(j) + gamma.contract(e0.col(i), e0.col(j));
        for (int k = 0; k < 3; ++k) om(i, j, k) = nabla.dot(gc * e0.col(k));
      }
    }
    return om;
  }

  // g(G(E_i, E_l), J E_m)
  FrameTensor g_components() const {
    const auto e = frame();
    const Mat6 mj = nkgeom::metric_matrix() * nkgeom::j_matrix();
    FrameTensor out;
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) {
        const Vec6 g = nkgeom::G_tensor(e[i], e[l]).components();
        for (int m = 0; m < 3; ++m) out(i, l, m) = g.dot(mj * w0_.col(m));
      }
    return out;
  }

  double frame_formula() const {
    const auto e = frame();
    double r = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec6 res = nkgeom::G_tensor(e[i], e[j]).components();
        for (int k = 0; k < 3; ++k) res += kInvSqrt3 * epsilon(i, j, k) * (nkgeom::j_matrix() * w0_.col(k));
        r = std::max(r, g_norm(res));
      }
    return r;
  }

  // E_i(c_jkm) for the adapted frame field.
  std::array<FrameTensor, 3> cubic_derivatives() const {
    std::array<FrameTensor, 3> out;
    for (int i = 0; i < 3; ++i) {
      const Vec3 d = direction(i);
      const Vec27 dc = nkgeom::richardson_derivative(
          [&](double t) {
            const FrameTensor c = cubic_at(lc_.centre() + t * d);
            return Vec27(Eigen::Map<const Vec27>(c.data.data()));
          },
          kFrameStep);
      Eigen::Map<Vec27>(out[i].data.data()) = dc;
    }
    return out;
  }

 private:
  LocalChart lc_;
  Sample centre_;
  Mat3 q0_;
  Vec3 theta0_;
  Mat63 w0_;
  bool degenerate_ = false;
  bool flipped_ = false;
};

}  // namespace

LagrangianTest is_lagrangian(const Immersion& imm, const Vec3& u, double tol) {
  const LocalChart lc(imm, u);
  const Sample s = sample(lc, u);
  const double r = s.lag.cwiseAbs().maxCoeff();
  return {r < tol, r};
}

SecondFundamentalForm second_fundamental_form(const Immersion& imm, const Vec3& u) {
  const LocalChart lc(imm, u);
  const Sample s = sample(lc, u);
  require_lagrangian(s);
  SecondFundamentalForm out;
  out.frame = tangent_frame(lc.chart().base(), s.w);
  out.cubic = lc.cubic(u, s.k);
  out.mean_curvature = mean_curvature(out.cubic);
  out.norm = Eigen::Map<const Vec27>(out.cubic.data.data()).norm();
  out.symmetry_residual = symmetry_residual(out.cubic);
  return out;
}

ABOperators ab_operators(const Immersion& imm, const Vec3& u) {
  const LocalChart lc(imm, u);
  const Sample s = sample(lc, u);
  require_lagrangian(s);
  ABOperators out;
  out.frame = tangent_frame(lc.chart().base(), s.w);
  out.a = s.a;
  out.b = s.b;
  out.symmetry = std::max((s.a - s.a.transpose()).cwiseAbs().maxCoeff(), (s.b - s.b.transpose()).cwiseAbs().maxCoeff());
  out.commutator = (s.a * s.b - s.b * s.a).norm();
  out.identity_residual = (s.a * s.a + s.b * s.b - Mat3::Identity()).norm();
  const Mat63 residual = nkgeom::p_matrix() * s.w - s.w * s.a - nkgeom::j_matrix() * s.w * s.b;
  for (int a = 0; a < 3; ++a) out.decomposition_residual = std::max(out.decomposition_residual, g_norm(residual.col(a)));
  return out;
}

double angle_relation_residual(const FrameTensor& h, const FrameTensor& omega, const Vec3& theta) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (j == k) continue;
        const double d = theta(j) - theta(k);
        const double lhs = h(i, j, k) * std::cos(d);
        const double rhs = (epsilon(i, j, k) * 0.5 * kInvSqrt3 - omega(i, j, k)) * std::sin(d);
        r = std::max(r, std::abs(lhs - rhs));
      }
  return r;
}

AdaptedFrameData frame_components(const Immersion& imm, const Vec3& u) {
  const Analysis an(imm, u);
  const Sample& s = an.centre();
  AdaptedFrameData out;
  out.u = u;
  out.point = an.chart().chart().base();
  out.frame = an.frame();
  out.theta = an.theta0();
  out.a = an.q0().transpose() * s.a * an.q0();
  out.b = an.q0().transpose() * s.b * an.q0();
  out.h = an.cubic();
  out.omega = an.omega();
  out.mean_curvature = mean_curvature(out.h);
  out.degenerate = an.degenerate();
  out.orientation_flipped = an.flipped();

  out.lagrangian_residual = s.lag.cwiseAbs().maxCoeff();
  out.cubic_symmetry = symmetry_residual(out.h);
  out.commutator = (s.a * s.b - s.b * s.a).norm();
  out.ab_identity = (s.a * s.a + s.b * s.b - Mat3::Identity()).norm();
  out.angle_sum = distance_mod_pi(out.theta.sum());
  out.frame_formula = an.frame_formula();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        out.omega_antisymmetry = std::max(out.omega_antisymmetry, std::abs(out.omega(i, j, k) + out.omega(i, k, j)));

  if (!out.degenerate) {
    out.angle_relation = angle_relation_residual(out.h, out.omega, out.theta);
    double r = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Vec3 d = an.direction(i);
      const Vec3 dtheta = nkgeom::richardson_derivative([&](double t) { return an.theta(u + t * d); }, kFrameStep);
      for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(dtheta(j) + out.h(j, j, i)));
    }
    out.derivative_relation = r;
  }
  return out;
}

double codazzi_residual(const Immersion& imm, const Vec3& u) {
  const Analysis an(imm, u);
  const FrameTensor c = an.cubic();
  const FrameTensor om = an.omega();
  const FrameTensor gt = an.g_components();
  const auto dc = an.cubic_derivatives();
  const Mat3 a = an.q0().transpose() * an.centre().a * an.q0();
  const Mat3 b = an.q0().transpose() * an.centre().b * an.q0();

  // JE_m-component of (nabla-bar h)(E_i, E_j, E_k)
  auto nabla_h = [&](int i, int j, int k, int m) {
    double v = dc[i](j, k, m);
    for (int l = 0; l < 3; ++l) v += c(j, k, l) * (om(i, l, m) + gt(i, l, m));
    for (int p = 0; p < 3; ++p) v -= om(i, j, p) * c(p, k, m) + om(i, k, p) * c(j, p, m);
    return v;
  };

  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) {
          const double rhs = (a(j, k) * b(i, m) - a(i, k) * b(j, m) - b(j, k) * a(i, m) + b(i, k) * a(j, m)) / 3.0;
          r = std::max(r, std::abs(nabla_h(i, j, k, m) - nabla_h(j, i, k, m) - rhs));
        }
  return r;
}

}  // namespace nkv::lagrangian
