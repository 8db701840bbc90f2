#include <gtest/gtest.h>

#include <limits>

#include "nkverify/report.hpp"

using nkv::CheckRecord;
using nkv::Status;
using nkv::VerificationReport;

namespace {

CheckRecord record(std::string id, double residual, double tol) {
  CheckRecord r;
  r.id = std::move(id);
  r.max_residual = residual;
  r.tolerance = tol;
  r.samples = 1;
  r.judge();
  return r;
}

}  // namespace

TEST(Report, JudgeComparesAgainstTolerance) {
  EXPECT_EQ(record("a", 1e-9, 1e-8).status, Status::pass);
  EXPECT_EQ(record("a", 1e-8, 1e-8).status, Status::pass);
  EXPECT_EQ(record("a", 2e-8, 1e-8).status, Status::fail);
}

TEST(Report, NonFiniteResidualsFail) {
  for (double bad : {std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::infinity()}) {
    const CheckRecord r = record("a", bad, 1e300);
    EXPECT_EQ(r.status, Status::fail);
    EXPECT_EQ(r.max_residual, std::numeric_limits<double>::max());
  }
  CheckRecord raw;
  raw.id = "raw";
  raw.max_residual = std::numeric_limits<double>::quiet_NaN();
  VerificationReport rep("s");
  rep.add(raw);
  EXPECT_EQ(rep.records()[0].status, Status::fail);
  EXPECT_EQ(rep.overall(), Status::fail);
  EXPECT_FALSE(rep.to_json().dump().empty());
}

TEST(Report, RecordsSortedById) {
  VerificationReport rep("s");
  rep.add(record("b", 0, 0));
  rep.add(record("a", 0, 0));
  rep.add(record("c", 0, 0));
  const auto j = rep.to_json();
  ASSERT_EQ(j["records"].size(), 3u);
  EXPECT_EQ(j["records"][0]["id"], "a");
  EXPECT_EQ(j["records"][2]["id"], "c");
  EXPECT_EQ(j["suite"], "s");
}

TEST(Report, OverallStatus) {
  VerificationReport rep("s");
  EXPECT_EQ(rep.overall(), Status::pass);
  CheckRecord skipped;
  skipped.id = "skip";
  skipped.status = Status::skip;
  rep.add(skipped);
  EXPECT_EQ(rep.overall(), Status::pass);
  rep.add(record("bad", 1, 0));
  EXPECT_EQ(rep.overall(), Status::fail);
  EXPECT_EQ(rep.to_json()["status"], "fail");
}

TEST(Report, TimingsOnlyOnRequest) {
  CheckRecord r = record("t", 0, 0);
  r.elapsed_ms = 12.5;
  EXPECT_FALSE(r.to_json(false).contains("elapsed_ms"));
  EXPECT_EQ(r.to_json(true)["elapsed_ms"], 12.5);
  VerificationReport rep("s");
  rep.add(r);
  EXPECT_EQ(rep.to_text(false).find("elapsed_ms"), std::string::npos);
  EXPECT_NE(rep.to_text(true).find("elapsed_ms"), std::string::npos);
}

TEST(Report, RecordFields) {
  CheckRecord r = record("x.y", 0.5, 1.0);
  r.seed = 42;
  r.details["k"] = 1;
  const auto j = r.to_json(false);
  for (const char* key : {"id", "status", "max_residual", "tolerance", "samples", "seed", "details"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["seed"], 42);
}
