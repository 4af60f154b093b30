#include <gtest/gtest.h>

#include "topocheck/verify.hpp"

using namespace topocheck;

namespace {

std::vector<std::string> lines(const std::vector<CheckResult>& results) {
  std::vector<std::string> out;
  for (const CheckResult& r : results) out.push_back(r.to_string());
  return out;
}

TEST(VerifyTest, SuiteNames) {
  for (const char* name : {"all", "fixtures", "lemmas", "products", "maps", "e1", "r1"}) {
    EXPECT_TRUE(parse_suite(name).has_value()) << name;
  }
  EXPECT_FALSE(parse_suite("everything").has_value());
}

TEST(VerifyTest, EverySuitePasses) {
  const auto results = verify_suite(Suite::kAll, 2);
  EXPECT_GE(results.size(), 40U);
  for (const CheckResult& r : results) EXPECT_TRUE(r.passed) << r.to_string();
}

TEST(VerifyTest, ReportIndependentOfWorkers) {
  EXPECT_EQ(lines(verify_lemmas(1)), lines(verify_lemmas(4)));
  EXPECT_EQ(lines(verify_maps(1)), lines(verify_maps(3)));
}

TEST(VerifyTest, CheckLineFormat) {
  EXPECT_EQ((CheckResult{"x", true, ""}).to_string(), "CHECK x PASS");
  EXPECT_EQ((CheckResult{"x", false, "why"}).to_string(), "CHECK x FAIL why");
  const std::vector<CheckResult> mixed{{"a", true, ""}, {"b", false, ""}};
  EXPECT_FALSE(all_passed(mixed));
}

}  // namespace
