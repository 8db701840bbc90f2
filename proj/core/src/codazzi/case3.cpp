#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/tools/roots.hpp>

#include "nkverify/codazzi/checks.hpp"
#include "nkverify/errors.hpp"

namespace nkv::codazzi {

namespace {

using LD = long double;

constexpr int kScanCells = 256;
constexpr LD kMinSin = 1e-3L;
constexpr int kAttemptsPerSample = 20;

struct Angles {
  LD t1, t2, t3;
  LD operator[](int a) const { return a == 0 ? t1 : a == 1 ? t2 : t3; }
};

FrameData<LD> frame_data(LD v1, LD v3, const Angles& th) {
  FrameData<LD> d;
  d.v = {v1, 0.0L, v3};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      const LD diff = th[a] - th[b];
      d.cot[a][b] = std::cos(diff) / std::sin(diff);
      d.sin2[a][b] = std::sin(2 * diff);
    }
  return d;
}

bool admissible(const Angles& th) {
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (std::abs(std::sin(th[a] - th[b])) < kMinSin) return false;
  return true;
}

// (v1^2 + v3^2) sin 2(theta1 - theta2) - v1^2 sin 2(theta1 - theta3), theta3 = -theta1 - theta2.
LD constraint(LD v1, LD v3, LD t1, LD t2) {
  const LD a = v1 * v1, c = v3 * v3;
  return (a + c) * std::sin(2 * (t1 - t2)) - a * std::sin(2 * (2 * t1 + t2));
}

// First admissible root in theta2 over one period.
std::optional<Angles> solve_theta2(LD v1, LD v3, LD t1) {
  const LD pi = std::numbers::pi_v<LD>;
  auto f = [&](LD t2) { return constraint(v1, v3, t1, t2); };
  LD lo = 0.0L, flo = f(lo);
  for (int cell = 1; cell <= kScanCells; ++cell) {
    const LD hi = pi * cell / kScanCells, fhi = f(hi);
    if (flo == 0.0L || flo * fhi < 0.0L) {
      LD root = lo;
      if (flo != 0.0L) {
        std::uintmax_t iters = 200;
        const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                                              boost::math::tools::eps_tolerance<LD>(), iters);
        root = (a + b) / 2;
      }
      const Angles th{t1, root, -t1 - root};
      if (admissible(th)) return th;
    }
    lo = hi;
    flo = fhi;
  }
  return std::nullopt;
}

}  // namespace

std::pair<long double, long double> case3_closed_forms(long double v1, long double v3) {
  const LD a = v1 * v1, c = v3 * v3;
  const LD den = 3 * std::sqrt(3.0L) * (8 * a * a + 6 * a * c + 3 * c * c);
  return {v1 * (6 * a * a + 5 * a * c + 4 * c * c) / den, -v3 * (10 * a * a + 8 * a * c + 3 * c * c) / den};
}

CheckRecord case3_check(std::uint64_t seed, std::int64_t trials, double tol) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  CheckRecord rec;
  rec.id = "proof.case_v2_zero";
  rec.seed = seed;
  rec.tolerance = tol;

  const LD s3 = std::sqrt(3.0L);
  const std::vector<int> zeroed = {d_index(0, 1), d_index(1, 1), d_index(2, 1)};
  const std::vector<int> unknowns = {d_index(1, 0), d_index(1, 2)};
  LD worst_forms = 0, worst_contradiction = 0, worst_branch = 0, worst_constraint = 0, min_contradiction = INFINITY;
  std::int64_t accepted = 0, skipped = 0, branch_samples = 0;
  nlohmann::json full_solve;

  for (std::int64_t attempt = 0; accepted < trials && attempt < kAttemptsPerSample * trials; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> mag(0.25, 2.0), angle(0.0, std::numbers::pi);
    std::bernoulli_distribution flip(0.5);
    const LD v1 = (flip(rng) ? -1 : 1) * static_cast<LD>(mag(rng));
    // Every tenth sample sits on the branch v3 = 0.
    const bool branch = accepted % 10 == 9;
    const LD v3 = branch ? 0.0L : (flip(rng) ? -1 : 1) * static_cast<LD>(mag(rng));
    // At v3 = 0 the constraint reads cos(3 theta1) sin(theta2 - theta3) = 0, so
    // admissible states need theta1 = pi/6 mod pi/3 and leave theta2 free.
    std::optional<Angles> th;
    if (branch) {
      const LD t1 = std::numbers::pi_v<LD> / 6 + std::uniform_int_distribution<int>(0, 2)(rng) * std::numbers::pi_v<LD> / 3;
      const LD t2 = static_cast<LD>(angle(rng));
      if (admissible({t1, t2, -t1 - t2})) th = Angles{t1, t2, -t1 - t2};
    } else {
      th = solve_theta2(v1, v3, static_cast<LD>(angle(rng)));
    }
    if (!th) {
      ++skipped;
      continue;
    }
    ++accepted;
    worst_constraint = std::max(worst_constraint, std::abs(constraint(v1, v3, th->t1, th->t2)));

    const CodazziSystem<LD> sys(frame_data(v1, v3, *th));
    const auto sol = solve_rows<LD>({sys(0, 1, 0, 0), sys(0, 1, 0, 2)}, unknowns, zeroed);
    if (sol.anomaly) {
      worst_forms = INFINITY;
      continue;
    }
    const LD e2v1 = sol.value[d_index(1, 0)]->constant, e2v3 = sol.value[d_index(1, 2)]->constant;
    const auto [f_v3, f_v1] = case3_closed_forms(v1, v3);
    worst_forms = std::max({worst_forms, std::abs(e2v3 - f_v3), std::abs(e2v1 - f_v1)});
    if (!sol.value[d_index(1, 0)]->gradient_vanishes() || !sol.value[d_index(1, 2)]->gradient_vanishes())
      worst_forms = INFINITY;

    // Substituted (E1, E2, E3) component, against its closed form.
    auto r = sol.apply(sys(0, 1, 2, 2));
    for (int q : zeroed) r.grad[q] = 0;
    const LD a = v1 * v1, c = v3 * v3;
    const LD closed = 2 / s3 * v3 * std::pow(a + c, 3) / (8 * a * a + 6 * a * c + 3 * c * c);
    worst_contradiction = std::max(worst_contradiction, std::abs(r.constant - closed));
    if (!r.gradient_vanishes()) worst_contradiction = INFINITY;

    if (branch) {
      // With E_i(v2) = E_i(v3) = 0 the (E1, E2, E1) component is a multiple of v1^3.
      ++branch_samples;
      auto row = sys(0, 1, 0, 2);
      for (int i = 0; i < 3; ++i) row.grad[d_index(i, 1)] = row.grad[d_index(i, 2)] = 0;
      worst_branch = std::max(worst_branch, std::abs(row.evaluate({}) + s3 / 3 * v1 * v1 * v1));
    } else {
      min_contradiction = std::min(min_contradiction, std::abs(r.constant));
    }

    if (full_solve.is_null()) {
      const auto full = solve_rows<LD>(triple_rows(sys, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}), first_solve_unknowns());
      if (!full.anomaly)
        full_solve = {{"v1", static_cast<double>(v1)},
                      {"v3", static_cast<double>(v3)},
                      {"E2(v1)", static_cast<double>(full.value[d_index(1, 0)]->constant)},
                      {"E2(v3)", static_cast<double>(full.value[d_index(1, 2)]->constant)}};
    }
  }

  rec.samples = accepted;
  rec.max_residual = static_cast<double>(std::max({worst_forms, worst_contradiction, worst_branch}));
  rec.details["closed_form_residual"] = static_cast<double>(worst_forms);
  rec.details["eliminated_component_residual"] = static_cast<double>(worst_contradiction);
  rec.details["eliminated_component_min_abs_off_branch"] = static_cast<double>(min_contradiction);
  rec.details["branch_v3_zero_residual"] = static_cast<double>(worst_branch);
  rec.details["branch_v3_zero_samples"] = branch_samples;
  rec.details["constraint_residual"] = static_cast<double>(worst_constraint);
  rec.details["skipped_root_failures"] = skipped;
  rec.details["eliminated_component_form"] = "(2/sqrt3) v3 (v1^2+v3^2)^3 / (8 v1^4 + 6 v1^2 v3^2 + 3 v3^4)";
  rec.details["solve"] = "E_i(v2) = 0; (E1,E2,E1) JE1 and JE3 components for E2(v1), E2(v3)";
  if (!full_solve.is_null()) rec.details["five_unknown_solve_sample"] = full_solve;
  const auto [e1, e0] = case3_closed_forms(1.0L, 0.0L);
  rec.details["closed_forms_at_v1_1_v3_0"] = {static_cast<double>(e1), static_cast<double>(e0)};
  rec.judge();
  if (accepted < trials || !(min_contradiction > tol)) rec.status = Status::fail;
  return rec;
}

}  // namespace nkv::codazzi
