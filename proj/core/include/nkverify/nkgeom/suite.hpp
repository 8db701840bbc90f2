#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nkverify/report.hpp"

namespace nkv::nkgeom {

inline constexpr std::int64_t kStructureSamples = 1000;
inline constexpr std::int64_t kNearlyKaehlerSamples = 200;

/// Pointwise algebra of g, J, P: J^2 = -Id, g(JX, JY) = g(X, Y), P^2 = Id,
/// JP = -PJ, P g-symmetric, g positive, and the two expressions for g.
/// `tol` replaces every per-check tolerance when given.
std::vector<CheckRecord> structure_suite(std::int64_t samples, std::uint64_t seed,
                                         std::optional<double> tol = std::nullopt);

/// G = nabla J from finite differences: G(X, X) = 0, G(X, Y) = -G(Y, X) and
/// g(G(X, Y), Y) = 0 at random points.
std::vector<CheckRecord> nearly_kaehler_suite(std::int64_t samples, std::uint64_t seed,
                                              std::optional<double> tol = std::nullopt);

}  // namespace nkv::nkgeom
