#pragma once

#include "nkverify/lagrangian/immersion.hpp"

namespace nkv::lagrangian {

/// Two eigenpairs (cos 2theta, sin 2theta) closer than this count as equal.
inline constexpr double kDegeneracyThreshold = 1e-6;

struct AngleData {
  Vec3 theta;       ///< each in [0, pi)
  Mat3 eigenframe;  ///< orthonormal columns e_i with A e_i = cos(2 theta_i) e_i, B e_i = sin(2 theta_i) e_i
  bool degenerate = false;
};

/// Simultaneous diagonalization of commuting symmetric A, B with A^2 + B^2 = Id.
/// Columns sorted by ascending cos 2theta, ties by sin 2theta; within a coincident
/// group the basis comes from the projected input axes. Throws DomainError if A and B do
/// not commute (to 1e-6).
AngleData angle_functions(const Mat3& a, const Mat3& b);

/// Distance from x to the nearest integer multiple of pi.
double distance_mod_pi(double x);

/// Representative of x modulo pi in [0, pi).
double reduce_mod_pi(double x);

}  // namespace nkv::lagrangian
