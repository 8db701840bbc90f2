#include "nkverify/humfit/harness.hpp"

#include <algorithm>
#include <array>

#include "nkverify/errors.hpp"
#include "nkverify/humfit/fit.hpp"
#include "nkverify/lagrangian/analyzer.hpp"

namespace nkv::humfit {

CubicTensor from_frame(const lagrangian::FrameTensor& c) {
  CubicTensor t(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int z = b; z < 3; ++z) {
        std::array<int, 3> idx{a, b, z};
        double sum = 0.0;
        int count = 0;
        do {
          sum += c(idx[0], idx[1], idx[2]);
          ++count;
        } while (std::next_permutation(idx.begin(), idx.end()));
        t.set(a, b, z, sum / count);
      }
  return t;
}

CheckRecord theorem_harness(const lagrangian::Immersion& imm, int grid, double tol) {
  if (grid < 1) throw DomainError("grid must be at least 1");
  const auto points = imm.domain().grid(grid);
  for (const auto& u : points)
    if (const auto test = lagrangian::is_lagrangian(imm, u, lagrangian::kLagrangianPrecondition); !test)
      throw DomainError("theorem harness: " + imm.label() + " is not Lagrangian (residual " +
                        std::to_string(test.residual) + ")");

  CheckRecord rec;
  rec.id = "theorem.totally_geodesic." + imm.label();
  rec.samples = static_cast<std::int64_t>(points.size());
  rec.tolerance = tol;
  std::int64_t fitted = 0, rejected = 0;
  double max_norm = 0.0, worst_fitted = 0.0, worst_rejected_residual = 0.0;
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& u : points) {
    const CubicTensor h = from_frame(lagrangian::second_fundamental_form(imm, u).cubic);
    const double norm = h.norm();
    max_norm = std::max(max_norm, norm);
    const auto f = fit(h);
    if (!f) {
      ++rejected;
      worst_rejected_residual = std::max(worst_rejected_residual, best_fit(h).residual);
      continue;
    }
    ++fitted;
    const double r = std::max({norm, std::abs(f->lambda), std::abs(f->mu)});
    worst_fitted = std::max(worst_fitted, r);
    if (r > tol)
      candidates.push_back({{"u", {u[0], u[1], u[2]}}, {"h_norm", norm}, {"fit", f->to_json()}});
  }
  rec.max_residual = worst_fitted;
  rec.details = {{"grid", grid},
                 {"fitted", fitted},
                 {"rejected", rejected},
                 {"max_h_norm", max_norm},
                 {"fit_tolerance", kFitTolerance},
                 {"falsification_candidates", candidates}};
  if (rejected > 0) rec.details["max_rejected_fit_residual"] = worst_rejected_residual;
  rec.judge();
  return rec;
}

}  // namespace nkv::humfit
