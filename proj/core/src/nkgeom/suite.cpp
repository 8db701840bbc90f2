#include "nkverify/nkgeom/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/connection.hpp"
#include "nkverify/nkgeom/structure.hpp"

namespace nkv::nkgeom {

namespace {

struct Sampler {
  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  Quaternion unit_quaternion() {
    Quaternion q;
    do q = {normal(rng), normal(rng), normal(rng), normal(rng)};
    while (q.norm() < 1e-6);
    return q.normalized();
  }
  PointS3S3 point() { return {unit_quaternion(), unit_quaternion()}; }
  TangentVector vector(const PointS3S3& base) {
    Vec6 v;
    for (int i = 0; i < 6; ++i) v[i] = normal(rng);
    return TangentVector::from_components(base, v);
  }

  std::mt19937_64 rng;
  std::normal_distribution<double> normal;
};

double distance(const TangentVector& a, const TangentVector& b) { return (a.components() - b.components()).norm(); }

CheckRecord record(std::string id, double residual, double tolerance, std::int64_t samples, std::uint64_t seed,
                   std::optional<double> tol) {
  CheckRecord r;
  r.id = std::move(id);
  r.max_residual = residual;
  r.tolerance = tol.value_or(tolerance);
  r.samples = samples;
  r.seed = seed;
  r.judge();
  return r;
}

void require_samples(std::int64_t samples) {
  if (samples < 1) throw DomainError("samples must be at least 1");
}

}  // namespace

std::vector<CheckRecord> structure_suite(std::int64_t samples, std::uint64_t seed, std::optional<double> tol) {
  require_samples(samples);
  double j_squared = 0, j_isometry = 0, p_squared = 0, jp = 0, p_symmetric = 0, definition = 0;
  double min_ratio = INFINITY;
  for (std::int64_t s = 0; s < samples; ++s) {
    Sampler rng(seed + static_cast<std::uint64_t>(s));
    const PointS3S3 base = rng.point();
    const TangentVector x = rng.vector(base), y = rng.vector(base);
    j_squared = std::max(j_squared, distance(apply_J(apply_J(x)), -1.0 * x));
    j_isometry = std::max(j_isometry, std::abs(metric_g(apply_J(x), apply_J(y)) - metric_g(x, y)));
    p_squared = std::max(p_squared, distance(apply_P(apply_P(x)), x));
    jp = std::max(jp, (apply_J(apply_P(x)) + apply_P(apply_J(x))).components().norm());
    p_symmetric = std::max(p_symmetric, std::abs(metric_g(apply_P(x), y) - metric_g(x, apply_P(y))));
    definition = std::max(definition, std::abs(metric_g(x, y) - metric_g_from_definition(x, y)));
    min_ratio = std::min(min_ratio, metric_g(x, x) / x.components().squaredNorm());
  }
  std::vector<CheckRecord> out;
  out.push_back(record("structure.j_squared", j_squared, 1e-12, samples, seed, tol));
  out.push_back(record("structure.j_isometry", j_isometry, 1e-12, samples, seed, tol));
  out.push_back(record("structure.p_squared", p_squared, 0.0, samples, seed, tol));
  out.push_back(record("structure.jp_anticommute", jp, 1e-13, samples, seed, tol));
  out.push_back(record("structure.p_symmetric", p_symmetric, 1e-12, samples, seed, tol));
  out.push_back(record("structure.metric_two_forms", definition, 1e-12, samples, seed, tol));
  // g has eigenvalues 2/3 and 2 on (alpha, beta); the residual is how far the
  // smallest Rayleigh quotient falls below zero.
  CheckRecord pos = record("structure.metric_positive", std::max(0.0, -min_ratio), 0.0, samples, seed, tol);
  pos.details["min_rayleigh_quotient"] = min_ratio;
  if (!(min_ratio > 0.0)) pos.status = Status::fail;
  out.push_back(pos);
  return out;
}

std::vector<CheckRecord> nearly_kaehler_suite(std::int64_t samples, std::uint64_t seed, std::optional<double> tol) {
  require_samples(samples);
  double diag = 0, skew = 0, orth = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    Sampler rng(seed + static_cast<std::uint64_t>(s));
    const PointS3S3 base = rng.point();
    const TangentVector x = rng.vector(base), y = rng.vector(base);
    const TangentVector gxy = G_tensor(x, y);
    diag = std::max(diag, G_tensor(x, x).components().norm());
    skew = std::max(skew, (gxy + G_tensor(y, x)).components().norm());
    orth = std::max(orth, std::abs(metric_g(gxy, y)));
  }
  std::vector<CheckRecord> out;
  out.push_back(record("nearly_kaehler.g_diagonal", diag, 1e-5, samples, seed, tol));
  out.push_back(record("nearly_kaehler.g_skew", skew, 1e-5, samples, seed, tol));
  out.push_back(record("nearly_kaehler.g_orthogonal", orth, 1e-4, samples, seed, tol));
  for (auto& r : out) r.details["connection_step"] = kConnectionStep;
  return out;
}

}  // namespace nkv::nkgeom
