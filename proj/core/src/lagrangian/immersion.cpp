#include "nkverify/lagrangian/immersion.hpp"

#include "nkverify/errors.hpp"
#include "nkverify/nkgeom/chart.hpp"
#include "nkverify/nkgeom/numdiff.hpp"

namespace nkv::lagrangian {

bool Box::contains(const Vec3& u) const { return (u.array() >= lo.array()).all() && (u.array() <= hi.array()).all(); }

std::vector<Vec3> Box::grid(int n) const {
  if (n < 1) throw DomainError("grid resolution must be positive");
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n * n * n));
  auto coord = [&](int axis, int i) {
    if (n == 1) return 0.5 * (lo(axis) + hi(axis));
    return lo(axis) + (hi(axis) - lo(axis)) * i / (n - 1);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.emplace_back(coord(0, i), coord(1, j), coord(2, k));
  return out;
}

Immersion::Immersion(std::string label, Box domain, Map map, std::optional<Pushforward> pushforward)
    : label_(std::move(label)), domain_(domain), map_(std::move(map)), pushforward_(std::move(pushforward)) {
  if (!map_) throw DomainError("immersion map is empty");
}

std::array<TangentVector, 3> Immersion::pushforward(const Vec3& u) const {
  if (pushforward_) return (*pushforward_)(u);
  const PointS3S3 base = map_(u);
  const nkgeom::Chart chart(base);
  std::array<TangentVector, 3> out;
  for (int a = 0; a < 3; ++a) {
    const nkgeom::Vec6 d = nkgeom::richardson_derivative(
        [&](double t) { return chart.coordinates(map_(u + t * Vec3::Unit(a))); }, kPushforwardStep);
    out[a] = TangentVector::from_components(base, d);
  }
  return out;
}

}  // namespace nkv::lagrangian
