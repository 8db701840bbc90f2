#pragma once

#include "nkverify/humfit/cubic_tensor.hpp"
#include "nkverify/lagrangian/immersion.hpp"
#include "nkverify/lagrangian/local_geometry.hpp"
#include "nkverify/report.hpp"

namespace nkv::humfit {

inline constexpr double kHarnessTolerance = 1e-5;

/// Symmetrized copy of analyzer frame components.
CubicTensor from_frame(const lagrangian::FrameTensor& c);

/// At every grid point: compute h, try an H-umbilical fit. A successful fit
/// with ||h|| >= tol (or |lambda|, |mu| >= tol) is a falsification candidate.
/// Throws DomainError if a grid point is not Lagrangian.
CheckRecord theorem_harness(const lagrangian::Immersion& imm, int grid, double tol = kHarnessTolerance);

}  // namespace nkv::humfit
