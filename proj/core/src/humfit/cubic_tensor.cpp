#include "nkverify/humfit/cubic_tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "nkverify/errors.hpp"

namespace nkv::humfit {

CubicTensor::CubicTensor(int n) : n_(n) {
  if (n < 1 || n > 9) throw DomainError("cubic tensor dimension must be in [1, 9]");
  data_.assign(static_cast<std::size_t>(n * n * n), 0.0);
}

void CubicTensor::set(int a, int b, int c, double value) {
  std::array<int, 3> idx{a, b, c};
  std::sort(idx.begin(), idx.end());
  do {
    data_[index(idx[0], idx[1], idx[2])] = value;
  } while (std::next_permutation(idx.begin(), idx.end()));
}

double CubicTensor::norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double CubicTensor::trace(int c) const {
  double s = 0.0;
  for (int a = 0; a < n_; ++a) s += (*this)(a, a, c);
  return s;
}

double CubicTensor::evaluate(const VecX& x, const VecX& y, const VecX& z) const {
  double s = 0.0;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) s += (*this)(a, b, c) * x[a] * y[b] * z[c];
  return s;
}

VecX CubicTensor::contract(const VecX& x) const {
  VecX out = VecX::Zero(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c) out[c] += (*this)(a, b, c) * x[a] * x[b];
  return out;
}

CubicTensor& CubicTensor::operator+=(const CubicTensor& o) {
  if (o.n_ != n_) throw DomainError("cubic tensor dimensions differ");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CubicTensor& CubicTensor::operator*=(double s) {
  for (double& x : data_) x *= s;
  return *this;
}

std::string CubicTensor::key(int a, int b, int c) {
  std::array<int, 3> idx{a, b, c};
  std::sort(idx.begin(), idx.end());
  std::string k;
  for (int i : idx) k.push_back(static_cast<char>('1' + i));
  return k;
}

std::vector<std::string> CubicTensor::keys(int n) {
  std::vector<std::string> out;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) out.push_back(key(a, b, c));
  return out;
}

nlohmann::json CubicTensor::to_json() const {
  nlohmann::json comps = nlohmann::json::object();
  for (const auto& k : keys(n_)) comps[k] = (*this)(k[0] - '1', k[1] - '1', k[2] - '1');
  return {{"n", n_}, {"components", comps}};
}

CubicTensor CubicTensor::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DomainError("cubic tensor: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw DomainError("cubic tensor: missing integer field \"n\"");
  if (!j.contains("components") || !j["components"].is_object())
    throw DomainError("cubic tensor: missing object field \"components\"");
  for (const auto& [name, value] : j.items())
    if (name != "n" && name != "components") throw DomainError("cubic tensor: unexpected field \"" + name + "\"");

  CubicTensor t(j["n"].get<int>());
  const auto& comps = j["components"];
  const auto expected = keys(t.n_);
  const std::set<std::string> allowed(expected.begin(), expected.end());
  for (const auto& [name, value] : comps.items())
    if (!allowed.count(name)) throw DomainError("cubic tensor: unexpected key \"" + name + "\"");
  for (const auto& k : expected) {
    if (!comps.contains(k)) throw DomainError("cubic tensor: missing key \"" + k + "\"");
    if (!comps[k].is_number()) throw DomainError("cubic tensor: key \"" + k + "\" is not a number");
    t.set(k[0] - '1', k[1] - '1', k[2] - '1', comps[k].get<double>());
  }
  return t;
}

CubicTensor build_h_from_V(const Eigen::Vector3d& v) {
  const double r2 = v.squaredNorm();
  CubicTensor t(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b)
      for (int c = b; c < 3; ++c) {
        const double lin = v[a] * (b == c) + v[b] * (c == a) + v[c] * (a == b);
        t.set(a, b, c, r2 * lin - 5.0 * v[a] * v[b] * v[c]);
      }
  return t;
}

CubicTensor humbilical_pattern(const VecX& u, double lambda, double mu) {
  const int n = static_cast<int>(u.size());
  CubicTensor t(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        const double lin = u[a] * (b == c) + u[b] * (c == a) + u[c] * (a == b);
        t.set(a, b, c, mu * lin + (lambda - 3.0 * mu) * u[a] * u[b] * u[c]);
      }
  return t;
}

}  // namespace nkv::humfit
