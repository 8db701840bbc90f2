#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nkverify/lagrangian/immersion.hpp"

namespace nkv::lagrangian {

/// factor-left u -> (exp u, 1), factor-right u -> (1, exp u),
/// diagonal u -> (exp u, exp u), twisted-control u -> (exp u, exp Ru) with R a
/// fixed generic rotation (not Lagrangian). Domain [-0.5, 0.5]^3.
std::vector<Immersion> builtin_examples();

std::optional<Immersion> find_builtin(const std::string& label);

/// The three built-ins expected to be Lagrangian.
std::vector<std::string> builtin_lagrangian_labels();

/// Isometry (p, q) -> (a p conj(c), b q conj(c)) of the nearly Kaehler structure.
struct Isometry {
  quat::Quaternion a;
  quat::Quaternion b;
  quat::Quaternion c;

  PointS3S3 apply(const PointS3S3& x) const;
  TangentVector apply(const TangentVector& v) const;
};

/// Isometry composed with an immersion; the pushforward is carried along.
Immersion compose(const Isometry& iso, const Immersion& imm);

}  // namespace nkv::lagrangian
