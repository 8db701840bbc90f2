#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "nkverify/lagrangian/immersion.hpp"
#include "nkverify/report.hpp"

namespace nkv::lagrangian {

inline constexpr int kDefaultGrid = 5;

/// Analyzer checks on an n^3 grid, one record per property, ids prefixed by
/// "lagrangian.<label>.". When the Lagrangian test fails, the remaining
/// records are skipped. `tol` replaces every per-check tolerance when given.
std::vector<CheckRecord> lagrangian_suite(const Immersion& imm, int grid, std::optional<double> tol = std::nullopt);

/// Immersion from a manifest:
///   {"base": "<built-in label>",
///    "isometry": {"a": [w,x,y,z], "b": [...], "c": [...]},   (optional)
///    "domain": {"lo": [..3], "hi": [..3]},                   (optional)
///    "label": "<name>"}                                       (optional)
/// Quaternions must be unit to 1e-6 and are renormalized. Throws DomainError
/// on unknown fields or invalid values.
Immersion immersion_from_manifest(const nlohmann::json& manifest);

}  // namespace nkv::lagrangian
