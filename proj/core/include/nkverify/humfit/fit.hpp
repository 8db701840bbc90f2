#pragma once

#include <cstdint>
#include <optional>

#include "nkverify/humfit/cubic_tensor.hpp"

namespace nkv::humfit {

/// Acceptance threshold on ||h - pattern||. The analyzer delivers h to about
/// 1e-5 at grid points where h vanishes, so callers judging "h = 0" compare
/// norms against their own tolerance, not this one.
inline constexpr double kFitTolerance = 1e-6;
inline constexpr int kFitStarts = 16;
inline constexpr std::uint64_t kFitSeed = 20160704;
inline constexpr double kAscentGradientTol = 1e-12;

struct HUmbilicalFit {
  VecX u;           ///< unit U1
  double lambda = 0.0;
  double mu = 0.0;  ///< >= 0 after the sign convention
  double residual = 0.0;             ///< ||h - pattern(u, lambda, mu)||
  double minimality_residual = 0.0;  ///< |lambda + 2 mu|

  nlohmann::json to_json() const;
};

/// Best pattern over the multi-start candidates, accepted or not.
HUmbilicalFit best_fit(const CubicTensor& h);

/// Fit if the best residual is below tol; a tensor with ||h|| < tol fits
/// with lambda = mu = 0.
std::optional<HUmbilicalFit> fit(const CubicTensor& h, double tol = kFitTolerance);

/// Least-squares (lambda, mu) for a fixed unit u, with the residual.
HUmbilicalFit fit_for_direction(const CubicTensor& h, const VecX& u);

}  // namespace nkv::humfit
