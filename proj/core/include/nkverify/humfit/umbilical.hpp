#pragma once

#include <cstdint>

#include "nkverify/humfit/cubic_tensor.hpp"
#include "nkverify/report.hpp"

namespace nkv::humfit {

/// max |c_abc - c_sigma(abc)| over index permutations of
/// c(X, Y, Z) = g(X, Y) <xi, Z>, the cubic form of h(X, Y) = g(X, Y) xi.
double umbilical_asymmetry(const VecX& xi);

/// xi = 0 gives a symmetric form; unit xi drawn from the seed give an asymmetry
/// of at least max_c |xi_c| >= 1 / sqrt(n). Requires n >= 2.
CheckRecord umbilical_lemma_check(int n, std::int64_t trials, std::uint64_t seed);

}  // namespace nkv::humfit
