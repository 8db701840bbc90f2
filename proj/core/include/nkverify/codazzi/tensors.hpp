#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nkverify/codazzi/field.hpp"

namespace nkv::codazzi {

/// Index of the derivative unknown D_im = E_i(v_m), zero-based.
constexpr int d_index(int i, int m) { return 3 * i + m; }

/// Affine expression c + sum_q grad[q] D_q in the nine derivative unknowns.
template <class F>
struct Affine {
  F constant{};
  std::array<F, 9> grad{};

  Affine& operator+=(const Affine& o) {
    constant += o.constant;
    for (int q = 0; q < 9; ++q) grad[q] += o.grad[q];
    return *this;
  }
  Affine& operator-=(const Affine& o) {
    constant -= o.constant;
    for (int q = 0; q < 9; ++q) grad[q] -= o.grad[q];
    return *this;
  }
  Affine& operator*=(const F& s) {
    constant *= s;
    for (auto& g : grad) g *= s;
    return *this;
  }
  friend Affine operator+(Affine a, const Affine& b) { return a += b; }
  friend Affine operator-(Affine a, const Affine& b) { return a -= b; }
  friend Affine operator*(Affine a, const F& s) { return a *= s; }
  friend Affine operator*(const F& s, Affine a) { return a *= s; }

  F evaluate(const std::array<F, 9>& d) const {
    F out = constant;
    for (int q = 0; q < 9; ++q) out += grad[q] * d[q];
    return out;
  }

  /// Replace D_q by an affine expression.
  Affine substitute(int q, const Affine& value) const {
    Affine out = *this;
    const F c = out.grad[q];
    out.grad[q] = F{};
    return out + value * c;
  }

  bool gradient_vanishes() const {
    for (const auto& g : grad)
      if (!Field<F>::negligible(g, 1.0)) return false;
    return true;
  }
};

/// Components T(i, j, k) on {0, 1, 2}.
template <class F>
struct Tensor3 {
  std::array<F, 27> data{};
  F& operator()(int i, int j, int k) { return data[9 * i + 3 * j + k]; }
  const F& operator()(int i, int j, int k) const { return data[9 * i + 3 * j + k]; }
};

/// Levi-Civita symbol on {0, 1, 2}.
constexpr int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

constexpr int kron(int a, int b) { return a == b ? 1 : 0; }

/// Frame-level input: the components v of V, cot(theta_a - theta_b) and
/// sin(2 theta_a - 2 theta_b). Diagonal entries are unused.
template <class F>
struct FrameData {
  std::array<F, 3> v{};
  std::array<std::array<F, 3>, 3> cot{};
  std::array<std::array<F, 3>, 3> sin2{};
};

/// h_ij^k = |v|^2 (v_i d_jk + v_j d_ki + v_k d_ij) - 5 v_i v_j v_k.
template <class F>
Tensor3<F> hijk_from_v(const std::array<F, 3>& v) {
  const F r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  Tensor3<F> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        F s{};
        if (j == k) s += v[i];
        if (k == i) s += v[j];
        if (i == j) s += v[k];
        h(i, j, k) = r2 * s - F(5) * v[i] * v[j] * v[k];
      }
  return h;
}

/// d h_jk^m / d v_n.
template <class F>
F dh_dv(const std::array<F, 3>& v, int j, int k, int m, int n) {
  const F r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  F lin{};
  if (k == m) lin += v[j];
  if (m == j) lin += v[k];
  if (j == k) lin += v[m];
  F out = F(2) * v[n] * lin;
  out += r2 * F(kron(j, n) * kron(k, m) + kron(k, n) * kron(m, j) + kron(m, n) * kron(j, k));
  F cubic{};
  if (j == n) cubic += v[k] * v[m];
  if (k == n) cubic += v[j] * v[m];
  if (m == n) cubic += v[j] * v[k];
  return out - F(5) * cubic;
}

/// omega_ij^k from the nine closed-form expressions, extended by
/// omega_ij^k = -omega_ik^j (so omega_ij^j = 0).
template <class F>
Tensor3<F> omega_from_data(const FrameData<F>& st) {
  const auto& v = st.v;
  const auto& cot = st.cot;
  const F c0 = Field<F>::sqrt3() / F(6);  // 1 / (2 sqrt3)
  const F v1s = v[0] * v[0], v2s = v[1] * v[1], v3s = v[2] * v[2];
  const F five_v = F(5) * v[0] * v[1] * v[2];

  Tensor3<F> om;
  auto set = [&](int i, int j, int k, const F& value) {
    om(i, j, k) = value;
    om(i, k, j) = -value;
  };
  set(0, 0, 1, -v[1] * (F(-4) * v1s + v2s + v3s) * cot[0][1]);
  set(0, 0, 2, -v[2] * (F(-4) * v1s + v2s + v3s) * cot[0][2]);
  set(1, 1, 0, -v[0] * (v1s - F(4) * v2s + v3s) * cot[1][0]);
  set(1, 1, 2, -v[2] * (v1s - F(4) * v2s + v3s) * cot[1][2]);
  set(2, 2, 0, -v[0] * (v1s + v2s - F(4) * v3s) * cot[2][0]);
  set(2, 2, 1, -v[1] * (v1s + v2s - F(4) * v3s) * cot[2][1]);
  set(0, 1, 2, c0 + five_v * cot[1][2]);
  set(1, 2, 0, c0 + five_v * cot[2][0]);
  set(2, 0, 1, c0 + five_v * cot[0][1]);
  return om;
}

/// The JE_m-components of (nabla-bar h)(E_i,E_j,E_k) - (nabla-bar h)(E_j,E_i,E_k)
/// minus the curvature term, with E_i(v_m) kept as the unknowns D_im, G(E_i,E_l)
/// given by the frame formula and the A, B operators diagonal in the frame.
template <class F>
class CodazziSystem {
 public:
  explicit CodazziSystem(const FrameData<F>& st) {
    const Tensor3<F> h = hijk_from_v(st.v);
    const Tensor3<F> om = omega_from_data(st);
    const F g0 = Field<F>::sqrt3() / F(3);  // 1 / sqrt3

    auto nabla_h = [&](int i, int j, int k, int m) {
      Affine<F> out;
      for (int n = 0; n < 3; ++n) out.grad[d_index(i, n)] += dh_dv(st.v, j, k, m, n);
      for (int l = 0; l < 3; ++l) out.constant += h(j, k, l) * (om(i, l, m) - F(levi_civita(i, l, m)) * g0);
      for (int p = 0; p < 3; ++p) out.constant -= om(i, j, p) * h(p, k, m) + om(i, k, p) * h(j, p, m);
      return out;
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int m = 0; m < 3; ++m) {
            Affine<F> c = nabla_h(i, j, k, m) - nabla_h(j, i, k, m);
            if (i != j) c.constant -= st.sin2[i][j] * F(kron(j, k) * kron(i, m) + kron(i, k) * kron(j, m)) / F(3);
            comp_[27 * i + 9 * j + 3 * k + m] = c;
          }
  }

  const Affine<F>& operator()(int i, int j, int k, int m) const { return comp_[27 * i + 9 * j + 3 * k + m]; }

 private:
  std::array<Affine<F>, 81> comp_;
};

/// Result of eliminating a set of unknowns from a list of affine rows.
template <class F>
struct TripleSolution {
  /// Pivoted unknowns expressed affinely in the remaining (parameter) unknowns.
  std::array<std::optional<Affine<F>>, 9> value;
  /// Requested unknowns left without a pivot.
  std::vector<int> free_unknowns;
  /// Rows reduced to constraints among the parameters; identically zero rows dropped.
  std::vector<Affine<F>> leftover;
  int rank = 0;
  int zero_rows = 0;
  /// Rank below the number of requested unknowns.
  bool anomaly = false;

  /// Substitute every solved unknown into an expression.
  Affine<F> apply(Affine<F> e) const {
    for (int q = 0; q < 9; ++q)
      if (value[q]) e = e.substitute(q, *value[q]);
    return e;
  }
};

/// Gauss-Jordan elimination of `unknowns` from `rows`. Columns listed in
/// `zeroed` are set to zero first; all other columns act as parameters.
template <class F>
TripleSolution<F> solve_rows(std::vector<Affine<F>> rows, const std::vector<int>& unknowns,
                             const std::vector<int>& zeroed = {}) {
  double scale = 0.0;
  for (auto& r : rows) {
    for (int q : zeroed) r.grad[q] = F{};
    for (const auto& g : r.grad) scale = std::max(scale, Field<F>::magnitude(g));
  }
  if (scale == 0.0) scale = 1.0;

  TripleSolution<F> out;
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<int, std::size_t>> pivots;
  for (int q : unknowns) {
    std::optional<std::size_t> best;
    double best_mag = 0.0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || Field<F>::negligible(rows[r].grad[q], scale)) continue;
      const double mag = Field<F>::magnitude(rows[r].grad[q]);
      if (!best || mag > best_mag) {
        best = r;
        best_mag = mag;
      }
    }
    if (!best) {
      out.free_unknowns.push_back(q);
      continue;
    }
    used[*best] = true;
    rows[*best] *= F(1) / rows[*best].grad[q];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == *best) continue;
      const F factor = rows[r].grad[q];
      if (Field<F>::negligible(factor, scale)) {
        rows[r].grad[q] = F{};
        continue;
      }
      rows[r] -= rows[*best] * factor;
      rows[r].grad[q] = F{};
    }
    pivots.emplace_back(q, *best);
  }
  out.rank = static_cast<int>(pivots.size());
  out.anomaly = out.rank < static_cast<int>(unknowns.size());
  for (const auto& [q, r] : pivots) {
    // D_q + (rest) = 0  =>  D_q = -(rest)
    Affine<F> rest = rows[r];
    rest.grad[q] = F{};
    out.value[q] = rest * F(-1);
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (used[r]) continue;
    bool zero = Field<F>::negligible(rows[r].constant, scale);
    for (const auto& g : rows[r].grad) zero = zero && Field<F>::negligible(g, scale);
    if (zero)
      ++out.zero_rows;
    else
      out.leftover.push_back(rows[r]);
  }
  return out;
}

/// Rows of the Codazzi system for (E_i, E_j, E_k) triples, all three m each.
template <class F>
std::vector<Affine<F>> triple_rows(const CodazziSystem<F>& sys, const std::vector<std::array<int, 3>>& triples) {
  std::vector<Affine<F>> rows;
  for (const auto& t : triples)
    for (int m = 0; m < 3; ++m) rows.push_back(sys(t[0], t[1], t[2], m));
  return rows;
}

template <class F>
TripleSolution<F> solve_triple_system(const CodazziSystem<F>& sys, const std::vector<std::array<int, 3>>& triples,
                                      const std::vector<int>& unknowns, const std::vector<int>& zeroed = {}) {
  return solve_rows(triple_rows(sys, triples), unknowns, zeroed);
}

}  // namespace nkv::codazzi
