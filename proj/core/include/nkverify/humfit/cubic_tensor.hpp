#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

namespace nkv::humfit {

using VecX = Eigen::VectorXd;

/// Fully symmetric trilinear form on R^n, e.g. c(X, Y, Z) = g(h(X, Y), J Z).
/// Every write updates the whole permutation class, so symmetry holds by
/// construction.
class CubicTensor {
 public:
  /// Zero tensor; 1 <= n <= 9 (keys use one digit per index).
  explicit CubicTensor(int n = 3);

  int dim() const { return n_; }
  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }
  void set(int a, int b, int c, double value);

  /// Frobenius norm over all n^3 entries.
  double norm() const;
  /// sum_a c(e_a, e_a, e_c)
  double trace(int c) const;
  double evaluate(const VecX& x, const VecX& y, const VecX& z) const;
  /// c(x, x, .)
  VecX contract(const VecX& x) const;

  CubicTensor& operator+=(const CubicTensor& o);
  CubicTensor& operator*=(double s);
  friend CubicTensor operator+(CubicTensor a, const CubicTensor& b) { return a += b; }
  friend CubicTensor operator-(CubicTensor a, const CubicTensor& b) { return a += b * -1.0; }
  friend CubicTensor operator*(CubicTensor a, double s) { return a *= s; }

  /// One-based sorted index string, e.g. (0, 1, 1) -> "122".
  static std::string key(int a, int b, int c);
  /// All sorted keys in lexicographic order ("111", "112", ..., "333" for n = 3).
  static std::vector<std::string> keys(int n);

  /// {"n": n, "components": {"111": x, ...}}
  nlohmann::json to_json() const;
  /// Requires exactly the sorted key set; throws DomainError naming the first
  /// missing or unexpected key.
  static CubicTensor from_json(const nlohmann::json& j);

 private:
  int index(int a, int b, int c) const { return (a * n_ + b) * n_ + c; }

  int n_;
  std::vector<double> data_;
};

/// c_abc = |v|^2 (v_a d_bc + v_b d_ca + v_c d_ab) - 5 v_a v_b v_c on R^3.
CubicTensor build_h_from_V(const Eigen::Vector3d& v);

/// H-umbilical pattern with unit direction u:
/// c = mu (d_ab u_c + d_bc u_a + d_ca u_b) + (lambda - 3 mu) u_a u_b u_c,
/// so h(U1, U1) = lambda J U1, h(U1, Ui) = mu J Ui, h(Ui, Uj) = mu d_ij J U1.
CubicTensor humbilical_pattern(const VecX& u, double lambda, double mu);

}  // namespace nkv::humfit
