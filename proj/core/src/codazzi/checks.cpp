#include "nkverify/codazzi/checks.hpp"

#include <optional>

#include "nkverify/errors.hpp"

namespace nkv::codazzi {

namespace {

using exact::RationalSampler;

Rational dot(const Vec3Q& a, const Vec3Q& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3Q unit(int i) {
  Vec3Q e{Rational(0), Rational(0), Rational(0)};
  e[i] = Rational(1);
  return e;
}

Vec3Q random_vector(RationalSampler& rng) { return {rng.rational(kStateBound), rng.rational(kStateBound), rng.rational(kStateBound)}; }

Affine<QSqrt3> zero_columns(Affine<QSqrt3> e, const std::vector<int>& cols) {
  for (int q : cols) e.grad[q] = QSqrt3{};
  return e;
}

bool only_column(const Affine<QSqrt3>& e, int q) {
  for (int p = 0; p < 9; ++p)
    if (p != q && !e.grad[p].is_zero()) return false;
  return true;
}

// Keeps the first failing sample for the report.
struct FailureLog {
  std::int64_t count = 0;
  nlohmann::json first;

  void add(const std::string& what, nlohmann::json where) {
    if (count++ == 0) first = {{"check", what}, {"at", std::move(where)}};
  }
  void write(CheckRecord& rec) const {
    rec.max_residual = static_cast<double>(count);
    rec.details["failures"] = count;
    if (count > 0) rec.details["first_failure"] = first;
  }
};

CheckRecord make_record(std::string id, std::uint64_t seed, std::int64_t trials) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  CheckRecord rec;
  rec.id = std::move(id);
  rec.seed = seed;
  rec.samples = trials;
  rec.tolerance = 0.0;
  rec.details["residual_meaning"] = "number of exact identities that failed";
  return rec;
}

std::vector<int> all_columns_of(std::initializer_list<int> ms) {
  std::vector<int> out;
  for (int i = 0; i < 3; ++i)
    for (int m : ms) out.push_back(d_index(i, m));
  return out;
}

// Snapshot protocol: the first value is stored, later ones must agree.
struct Snapshot {
  std::optional<QSqrt3> value;
  bool consistent = true;
  void offer(const QSqrt3& x) {
    if (!value)
      value = x;
    else if (!(*value == x))
      consistent = false;
  }
};

}  // namespace

nlohmann::json qsqrt3_json(const QSqrt3& x) {
  return {{"a", x.rational_part().str()}, {"b", x.sqrt3_part().str()}};
}

Rational invariant_form_contraction(const Vec3Q& v, const Vec3Q& x, const Vec3Q& y, const Vec3Q& z) {
  const Rational vv = dot(v, v), xv = dot(x, v), yv = dot(y, v), zv = dot(z, v);
  return vv * (yv * dot(x, z) + xv * dot(y, z) + dot(x, y) * zv) - Rational(5) * xv * yv * zv;
}

std::array<std::array<Rational, 2>, 2> system2_coefficients(const Vec3Q& v) {
  const Rational a = v[0] * v[0], b = v[1] * v[1], c = v[2] * v[2];
  const Rational r4 = Rational(4);
  return {{{r4 * a * a + c * c + r4 * a * b + Rational(12) * a * c + b * c,
            -(r4 * a * a + r4 * b * b + Rational(3) * c * c + Rational(8) * a * b + Rational(7) * b * c)},
           {r4 * a * a + Rational(3) * b * b + r4 * c * c + Rational(8) * a * c + Rational(7) * b * c,
            -(r4 * a * a + b * b + Rational(12) * a * b + r4 * a * c + b * c)}}};
}

Rational determinant_product(const Vec3Q& v) {
  const Rational a = v[0] * v[0], b = v[1] * v[1], c = v[2] * v[2];
  return Rational(4) * (b + c) * (a + b + c) * (Rational(2) * a + b + c) * (Rational(4) * a - Rational(3) * (b + c));
}

Rational compatibility_f1(const FrameState& st) {
  const auto m = system2_coefficients(st.v());
  return m[0][0] * st.sin2(0, 1) + m[0][1] * st.sin2(0, 2);
}

Rational compatibility_f2(const FrameState& st) {
  const auto m = system2_coefficients(st.v());
  return m[1][0] * st.sin2(0, 1) + m[1][1] * st.sin2(0, 2);
}

std::vector<int> first_solve_unknowns() {
  return {d_index(1, 0), d_index(0, 1), d_index(1, 1), d_index(0, 2), d_index(1, 2)};
}

std::vector<int> second_solve_unknowns() {
  return {d_index(2, 0), d_index(0, 1), d_index(2, 1), d_index(0, 2), d_index(2, 2)};
}

CheckRecord hijk_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.h_from_v", seed, trials);
  FailureLog log;
  for (std::int64_t s = 0; s < trials; ++s) {
    RationalSampler rng(seed + static_cast<std::uint64_t>(s));
    const Vec3Q v = random_vector(rng);
    const Vec3Q x = random_vector(rng), y = random_vector(rng), z = random_vector(rng);
    const Tensor3<Rational> h = hijk_from_v<Rational>(v);
    const nlohmann::json where = {{"v", {v[0].str(), v[1].str(), v[2].str()}}};
    Rational multilinear(0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (!(h(i, j, k) == h(j, i, k) && h(i, j, k) == h(i, k, j))) log.add("symmetry", where);
          if (!(h(i, j, k) == invariant_form_contraction(v, unit(i), unit(j), unit(k)))) log.add("frame_contraction", where);
          multilinear += h(i, j, k) * x[i] * y[j] * z[k];
        }
    if (!(multilinear == invariant_form_contraction(v, x, y, z))) log.add("invariant_form", where);
    for (int k = 0; k < 3; ++k) {
      Rational trace(0);
      for (int i = 0; i < 3; ++i) trace += h(i, i, k);
      if (!trace.is_zero()) log.add("trace_free", where);
    }
  }
  const auto e1 = hijk_from_v<Rational>({Rational(1), Rational(0), Rational(0)});
  rec.details["v_e1"] = {{"h_11^1", e1(0, 0, 0).str()}, {"h_12^2", e1(0, 1, 1).str()},
                         {"h_22^1", e1(1, 1, 0).str()}, {"h_23^1", e1(1, 2, 0).str()}};
  log.write(rec);
  rec.judge();
  return rec;
}

CheckRecord angle_relation_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.angle_relation", seed, trials);
  FailureLog log;
  const QSqrt3 c0 = QSqrt3::sqrt3() / QSqrt3(6);
  for (std::int64_t s = 0; s < trials; ++s) {
    RationalSampler rng(seed + static_cast<std::uint64_t>(s));
    const FrameState st = sample_state(rng, false);
    const FrameData<QSqrt3> d = st.data();
    const auto h = hijk_from_v(d.v);
    const auto om = omega_from_data(d);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          if (!(om(i, j, k) == -om(i, k, j))) log.add("omega_antisymmetry", st.to_json());
          if (j == k) continue;
          const CirclePoint diff = st.difference(j, k);
          const QSqrt3 lhs = h(i, j, k) * QSqrt3(diff.cos());
          const QSqrt3 rhs = (QSqrt3(levi_civita(i, j, k)) * c0 - om(i, j, k)) * QSqrt3(diff.sin());
          if (!(lhs == rhs)) log.add("relation", st.to_json());
        }
  }
  RationalSampler rng(seed);
  const auto [t1, t2] = sample_angles(rng, {Rational(1), Rational(0), Rational(2)}, false);
  const FrameState axis({Rational(1), Rational(0), Rational(2)}, t1, t2, false);
  rec.details["omega_12^3_when_v1v2v3_zero"] = qsqrt3_json(omega_from_data(axis.data())(0, 1, 2));
  rec.details["note"] = "angle derivatives enter only through the relation E_i(theta_j) = -h_jj^i, which is an input here";
  log.write(rec);
  rec.judge();
  return rec;
}

CheckRecord affinity_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.codazzi_affinity", seed, trials);
  FailureLog log;
  for (std::int64_t s = 0; s < trials; ++s) {
    RationalSampler rng(seed + static_cast<std::uint64_t>(s));
    const FrameState st = sample_state(rng, false);
    std::array<QSqrt3, 9> d, d2, zero{};
    for (int q = 0; q < 9; ++q) {
      d[q] = rng.rational(kStateBound);
      d2[q] = d[q] * QSqrt3(2);
    }
    const CodazziSystem<QSqrt3> sys(st.data());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int m = 0; m < 3; ++m) {
            const auto& c = sys(i, j, k, m);
            if (!(c.evaluate(d2) - c.evaluate(d) == c.evaluate(d) - c.evaluate(zero))) log.add("collinearity", st.to_json());
            if (i == j && !(c.constant.is_zero() && c.gradient_vanishes())) log.add("equal_arguments", st.to_json());
            if (i != j) {
              Affine<QSqrt3> sum = c + sys(j, i, k, m);
              if (!(sum.constant.is_zero() && sum.gradient_vanishes())) log.add("antisymmetry", st.to_json());
            }
          }
  }
  log.write(rec);
  rec.judge();
  return rec;
}

CheckRecord system1_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.compatibility_system", seed, trials);
  FailureLog log;
  Snapshot kappa2, kappa3;
  std::int64_t zero_branch = 0;
  int rank1 = -1, rank2 = -1;
  for (std::int64_t s = 0; s < trials; ++s) {
    RationalSampler rng(seed + static_cast<std::uint64_t>(s));
    // Every tenth pattern lands on the branches v2 = 0, v3 = 0 and v1 = 0.
    const int pattern = static_cast<int>(s % 10);
    const FrameState st = pattern == 3 ? sample_state(rng, true, {1})
                          : pattern == 7 ? sample_state(rng, true, {2})
                          : pattern == 5 ? sample_state(rng, true, {0})
                                         : sample_state(rng, true);
    const CodazziSystem<QSqrt3> sys(st.data());
    const auto first = solve_triple_system(sys, {{0, 1, 0}, {0, 1, 1}, {0, 1, 2}}, first_solve_unknowns());
    const auto second = solve_triple_system(sys, {{0, 2, 0}, {0, 2, 1}, {0, 2, 2}}, second_solve_unknowns());
    rank1 = std::max(rank1, first.rank);
    rank2 = std::max(rank2, second.rank);
    if (first.anomaly || second.anomaly) {
      log.add("solvability", st.to_json());
      continue;
    }
    if (!first.leftover.empty() || !second.leftover.empty()) log.add("leftover_constraint", st.to_json());

    const auto& v = st.v();
    const Rational norm = pow(v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 3) * st.ec();
    auto compare = [&](int m, const Rational& target, Snapshot& kappa, const char* name) {
      const Affine<QSqrt3> delta = *first.value[d_index(0, m)] - *second.value[d_index(0, m)];
      if (!delta.gradient_vanishes()) log.add(std::string(name) + "_depends_on_free_parameter", st.to_json());
      const bool delta_zero = delta.constant.is_zero();
      if (delta_zero != target.is_zero()) {
        log.add(std::string(name) + "_zero_set", st.to_json());
        return;
      }
      if (delta_zero) {
        ++zero_branch;
        return;
      }
      kappa.offer(QSqrt3(target) / (delta.constant * QSqrt3(norm)));
      if (!kappa.consistent) log.add(std::string(name) + "_clearing_factor", st.to_json());
    };
    compare(1, v[0] * v[1] * compatibility_f1(st), kappa2, "delta2");
    compare(2, v[0] * v[2] * compatibility_f2(st), kappa3, "delta3");
  }
  if (!kappa2.value || !kappa3.value) log.add("no_generic_sample", nlohmann::json::object());
  rec.details["rank_first_solve"] = rank1;
  rec.details["rank_second_solve"] = rank2;
  rec.details["zero_branch_samples"] = zero_branch;
  rec.details["clearing_factor_normalizer"] = "(v1^2+v2^2+v3^2)^3 * (4 v1^2 - 3 (v2^2 + v3^2))";
  if (kappa2.value) rec.details["clearing_factor_delta2"] = qsqrt3_json(*kappa2.value);
  if (kappa3.value) rec.details["clearing_factor_delta3"] = qsqrt3_json(*kappa3.value);
  const auto m = system2_coefficients({Rational(1), Rational(1), Rational(1)});
  rec.details["f1_coefficients_at_ones"] = {m[0][0].str(), m[0][1].str()};
  log.write(rec);
  rec.judge();
  return rec;
}

CheckRecord case1_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.case_v2_v3_zero", seed, trials);
  FailureLog log;
  Snapshot cubic;
  const std::vector<int> zeroed = all_columns_of({1, 2});
  const std::vector<int> unknowns = {d_index(1, 0), d_index(0, 0)};
  for (std::int64_t s = 0; s < trials; ++s) {
    RationalSampler rng(seed + static_cast<std::uint64_t>(s));
    const auto [t1, t2] = sample_angles(rng, {Rational(1), Rational(0), Rational(0)}, true);
    nlohmann::json where = FrameState({Rational(1), Rational(0), Rational(0)}, t1, t2).to_json();

    // Eliminated constraint L(v1) at v1 = 1..5.
    std::array<QSqrt3, 6> value;
    bool ok = true;
    for (int x = 1; x <= 5; ++x) {
      const FrameState st({Rational(x), Rational(0), Rational(0)}, t1, t2, true);
      const auto sol = solve_triple_system(CodazziSystem<QSqrt3>(st.data()), {{0, 1, 0}}, unknowns, zeroed);
      if (sol.anomaly || sol.leftover.size() != 1 || !sol.leftover[0].gradient_vanishes()) {
        log.add("elimination", st.to_json());
        ok = false;
        break;
      }
      value[x] = sol.leftover[0].constant;
    }
    if (!ok) continue;

    // Cubic through v1 = 1..4: rows c0 + c1 x + c2 x^2 + c3 x^3 - L(x).
    std::vector<Affine<QSqrt3>> rows;
    for (int x = 1; x <= 4; ++x) {
      Affine<QSqrt3> r;
      r.constant = -value[x];
      for (int p = 0; p < 4; ++p) r.grad[p] = QSqrt3(pow(Rational(x), p));
      rows.push_back(r);
    }
    const auto fit = solve_rows(rows, {0, 1, 2, 3});
    std::array<QSqrt3, 4> c;
    for (int p = 0; p < 4; ++p) c[p] = fit.value[p]->constant;
    QSqrt3 predicted;
    for (int p = 0; p < 4; ++p) predicted += c[p] * QSqrt3(pow(Rational(5), p));
    if (!(predicted == value[5])) log.add("degree_at_most_three", where);
    if (!(c[0].is_zero() && c[2].is_zero())) log.add("odd", where);
    if (c[3].is_zero() || value[1].is_zero()) log.add("nonzero_constraint", where);
    cubic.offer(c[3]);

    // v1 = 0: the constraint row itself vanishes.
    const FrameState origin({Rational(0), Rational(0), Rational(0)}, t1, t2, false);
    const auto row = zero_columns(CodazziSystem<QSqrt3>(origin.data())(0, 1, 0, 2), zeroed);
    if (!(row.constant.is_zero() && row.gradient_vanishes())) log.add("vanishes_at_zero", where);
  }
  if (cubic.value) rec.details["cubic_coefficient"] = qsqrt3_json(*cubic.value);
  rec.details["cubic_coefficient_angle_independent"] = cubic.consistent;
  log.write(rec);
  rec.judge();
  return rec;
}

CheckRecord case2_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.case_v1_zero", seed, trials);
  FailureLog log;
  const std::vector<int> zeroed = all_columns_of({0});
  const std::vector<int> unknowns = {d_index(1, 2), d_index(0, 1), d_index(1, 1)};
  const int e = d_index(0, 2);
  const QSqrt3 r3 = QSqrt3::sqrt3();
  std::array<Snapshot, 2> factor;
  std::int64_t incompatible = 0;
  for (std::int64_t s = 0; s < trials; ++s) {
    RationalSampler rng(seed + static_cast<std::uint64_t>(s));
    const int pattern = static_cast<int>(s % 10);
    const FrameState st = pattern == 3 ? sample_state(rng, true, {0, 2})
                          : pattern == 7 ? sample_state(rng, true, {0, 1})
                                         : sample_state(rng, true, {0});
    const CodazziSystem<QSqrt3> sys(st.data());
    const auto sol = solve_triple_system(sys, {{0, 1, 0}}, unknowns, zeroed);
    if (sol.anomaly || !sol.leftover.empty()) {
      log.add("solve", st.to_json());
      continue;
    }
    std::array<Affine<QSqrt3>, 3> r;
    for (int m = 0; m < 3; ++m) {
      r[m] = zero_columns(sol.apply(sys(0, 1, 1, m)), zeroed);
      if (!only_column(r[m], e)) log.add("one_parameter_family", st.to_json());
    }
    if (!(r[0].constant.is_zero() && r[0].gradient_vanishes())) log.add("first_row_vanishes", st.to_json());

    const QSqrt3 v2 = st.v()[1], v3 = st.v()[2];
    const QSqrt3 a = v2 * v2, b = v3 * v3;
    // Displayed pair as (constant, coefficient of E1(v3)).
    const std::array<std::pair<QSqrt3, QSqrt3>, 2> pair = {{
        {v3 * (QSqrt3(3) * a * a - a * b + b * b), QSqrt3(15) * r3 * v2 * a * v3},
        {v2 * (QSqrt3(3) * a * a - QSqrt3(3) * a * b + QSqrt3(4) * b * b),
         QSqrt3(3) * r3 * (QSqrt3(4) * a * a - QSqrt3(7) * a * b - b * b)},
    }};
    const QSqrt3 scale = QSqrt3(3) * a + b;
    for (int t = 0; t < 2; ++t) {
      const auto& [pc, pe] = pair[t];
      const QSqrt3 rc = r[t + 1].constant, re = r[t + 1].grad[e];
      if (!(rc * pe - re * pc).is_zero()) log.add("proportional", st.to_json());
      if (pc.is_zero() && pe.is_zero()) {
        if (!(rc.is_zero() && re.is_zero())) log.add("vanishes_with_pair", st.to_json());
        continue;
      }
      const QSqrt3 f = pc.is_zero() ? re / pe : rc / pc;
      if (f.is_zero()) log.add("nonzero_factor", st.to_json());
      factor[t].offer(f * scale);
      if (!factor[t].consistent) log.add("factor_consistency", st.to_json());
    }
    // Eliminating E1(v3).
    const auto& p1 = r[1];
    const auto& p2 = r[2];
    bool contradiction;
    if (!v3.is_zero()) {
      contradiction = !(p1.constant * p2.grad[e] - p2.constant * p1.grad[e]).is_zero();
    } else {
      // v3 vanishes identically, so E1(v3) = 0 as well.
      contradiction = !p2.constant.is_zero();
    }
    if (contradiction)
      ++incompatible;
    else
      log.add("incompatibility", st.to_json());
  }
  rec.details["incompatible_states"] = incompatible;
  rec.details["factor_normalizer"] = "3 v2^2 + v3^2";
  if (factor[0].value) rec.details["factor_first"] = qsqrt3_json(*factor[0].value);
  if (factor[1].value) rec.details["factor_second"] = qsqrt3_json(*factor[1].value);
  rec.details["second_at_v2_1_v3_0"] = {qsqrt3_json(QSqrt3(3)), qsqrt3_json(QSqrt3(12) * r3)};
  log.write(rec);
  rec.judge();
  return rec;
}

CheckRecord det_factorization_check(std::uint64_t seed, std::int64_t trials) {
  CheckRecord rec = make_record("proof.determinant_factorization", seed, trials);
  FailureLog log;
  auto vec = [](std::span<const Rational> x) { return Vec3Q{x[0], x[1], x[2]}; };
  const exact::PolyEvaluator det = [&](std::span<const Rational> x) {
    const auto m = system2_coefficients(vec(x));
    return QSqrt3(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  };
  const exact::PolyEvaluator bracket_det = [&](std::span<const Rational> x) {
    const auto m = system2_coefficients(vec(x));
    return QSqrt3(-(m[0][0] * m[1][1]) + m[0][1] * m[1][0]);
  };
  const exact::PolyEvaluator product = [&](std::span<const Rational> x) { return QSqrt3(determinant_product(vec(x))); };
  const exact::PolyEvaluator negated = [&](std::span<const Rational> x) { return -product(x); };

  const auto size = static_cast<std::size_t>(trials);
  const auto signed_result = exact::poly_identity_check(det, negated, 3, size, seed);
  const auto bracket_result = exact::poly_identity_check(bracket_det, product, 3, size, seed);
  if (!signed_result) log.add("signed_determinant", nlohmann::json::object());
  if (!bracket_result) log.add("bracket_determinant", nlohmann::json::object());

  auto at = [&](long a, long b, long c) {
    const std::array<Rational, 3> v{Rational(a), Rational(b), Rational(c)};
    return nlohmann::json{{"det", det(v).rational_part().str()}, {"product", product(v).rational_part().str()}};
  };
  rec.details["signed_determinant_equals"] = "-product";
  rec.details["bracket_determinant_equals"] = "product";
  rec.details["at_1_0_0"] = at(1, 0, 0);
  rec.details["at_0_1_0"] = at(0, 1, 0);
  rec.details["at_1_1_1"] = at(1, 1, 1);
  log.write(rec);
  rec.judge();
  return rec;
}

}  // namespace nkv::codazzi
