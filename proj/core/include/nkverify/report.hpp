#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nkv {

enum class Status { pass, fail, skip };

std::string to_string(Status s);

/// One verification check. Residuals are finite by construction: a
/// non-finite value is replaced by the largest double and the record fails.
struct CheckRecord {
  std::string id;
  Status status = Status::pass;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> elapsed_ms;
  nlohmann::json details = nlohmann::json::object();

  /// Sets status from max_residual <= tolerance (and sanitizes the residual).
  void judge();
  nlohmann::json to_json(bool timings) const;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  void add(CheckRecord record);
  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }

  /// Fail if any record failed; skip-only reports still pass.
  Status overall() const;

  /// Records sorted by id (stable), so output is independent of evaluation order.
  nlohmann::json to_json(bool timings = false) const;
  std::string to_text(bool timings = false) const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
};

/// Largest finite stand-in for a non-finite residual.
double finite_residual(double r);

}  // namespace nkv
