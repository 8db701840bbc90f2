#include "nkverify/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace nkv {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "fail";
}

double finite_residual(double r) { return std::isfinite(r) ? r : std::numeric_limits<double>::max(); }

void CheckRecord::judge() {
  const bool finite = std::isfinite(max_residual);
  max_residual = finite_residual(max_residual);
  status = (finite && max_residual <= tolerance) ? Status::pass : Status::fail;
}

nlohmann::json CheckRecord::to_json(bool timings) const {
  nlohmann::json j;
  j["id"] = id;
  j["status"] = to_string(status);
  j["max_residual"] = finite_residual(max_residual);
  j["tolerance"] = tolerance;
  j["samples"] = samples;
  j["seed"] = seed;
  if (timings && elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  j["details"] = details;
  return j;
}

void VerificationReport::add(CheckRecord record) {
  if (!std::isfinite(record.max_residual)) record.status = Status::fail;
  record.max_residual = finite_residual(record.max_residual);
  records_.push_back(std::move(record));
}

Status VerificationReport::overall() const {
  const bool failed = std::any_of(records_.begin(), records_.end(), [](const auto& r) { return r.status == Status::fail; });
  return failed ? Status::fail : Status::pass;
}

namespace {

std::vector<const CheckRecord*> sorted(const std::vector<CheckRecord>& records) {
  std::vector<const CheckRecord*> out;
  for (const auto& r : records) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const auto* a, const auto* b) { return a->id < b->id; });
  return out;
}

}  // namespace

nlohmann::json VerificationReport::to_json(bool timings) const {
  nlohmann::json j;
  j["suite"] = suite_;
  j["status"] = to_string(overall());
  nlohmann::json recs = nlohmann::json::array();
  for (const auto* r : sorted(records_)) recs.push_back(r->to_json(timings));
  j["records"] = std::move(recs);
  return j;
}

std::string VerificationReport::to_text(bool timings) const {
  std::ostringstream os;
  os << "suite " << suite_ << ": " << to_string(overall()) << "\n";
  for (const auto* r : sorted(records_)) {
    os << "  [" << to_string(r->status) << "] " << r->id << "  residual=" << r->max_residual
       << " tol=" << r->tolerance << " samples=" << r->samples << " seed=" << r->seed;
    if (timings && r->elapsed_ms) os << " elapsed_ms=" << *r->elapsed_ms;
    os << "\n";
    if (!r->details.empty()) os << "      " << r->details.dump() << "\n";
  }
  return os.str();
}

}  // namespace nkv
