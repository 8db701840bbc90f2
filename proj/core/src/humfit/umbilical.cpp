#include "nkverify/humfit/umbilical.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nkverify/errors.hpp"

namespace nkv::humfit {

double umbilical_asymmetry(const VecX& xi) {
  const int n = static_cast<int>(xi.size());
  auto c = [&](int a, int b, int z) { return (a == b ? 1.0 : 0.0) * xi[z]; };
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int z = 0; z < n; ++z)
        worst = std::max({worst, std::abs(c(a, b, z) - c(a, z, b)), std::abs(c(a, b, z) - c(z, b, a))});
  return worst;
}

CheckRecord umbilical_lemma_check(int n, std::int64_t trials, std::uint64_t seed) {
  if (n < 2) throw DomainError("umbilical lemma check needs n >= 2");
  if (trials < 1) throw DomainError("trials must be at least 1");
  CheckRecord rec;
  rec.id = "lemma.umbilical_n" + std::to_string(n);
  rec.seed = seed;
  rec.samples = trials;
  rec.tolerance = 0.0;

  const double bound = 1.0 / std::sqrt(static_cast<double>(n));
  const double at_zero = umbilical_asymmetry(VecX::Zero(n));
  std::int64_t violations = at_zero == 0.0 ? 0 : 1;
  double min_asym = INFINITY;
  for (std::int64_t s = 0; s < trials; ++s) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(s));
    std::normal_distribution<double> normal;
    VecX xi(n);
    do {
      for (int i = 0; i < n; ++i) xi[i] = normal(rng);
    } while (xi.norm() == 0.0);
    xi.normalize();
    const double asym = umbilical_asymmetry(xi);
    min_asym = std::min(min_asym, asym);
    // c(e_a, e_a, e_z) = xi_z while c(e_a, e_z, e_a) = 0 for a != z.
    if (asym < bound * (1.0 - 1e-12) || asym < xi.cwiseAbs().maxCoeff() * (1.0 - 1e-12)) ++violations;
  }
  rec.max_residual = static_cast<double>(violations);
  rec.details = {{"residual_meaning", "samples violating the asymmetry bound, plus 1 if xi = 0 is asymmetric"},
                 {"asymmetry_at_zero", at_zero},
                 {"min_asymmetry", min_asym},
                 {"asymmetry_lower_bound", bound}};
  rec.judge();
  return rec;
}

}  // namespace nkv::humfit
