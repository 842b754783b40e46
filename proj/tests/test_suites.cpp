#include <gtest/gtest.h>

#include "postlie/suites.hpp"

using namespace postlie;

namespace {

EnumParams quick() {
  EnumParams p;
  p.max_edges = 2;
  p.max_total_edges = 1;
  p.samples = 20;
  return p;
}

}  // namespace

TEST(Suites, Registry) {
  auto names = suite_names();
  EXPECT_EQ(names.size(), 17u);
  EXPECT_THROW(run_suite("no-such-suite"), UnknownSuite);
}

class QuickSuite : public ::testing::TestWithParam<std::string> {};

TEST_P(QuickSuite, Passes) {
  SuiteReport r = run_suite(GetParam(), quick());
  EXPECT_TRUE(r.passed()) << r.name << " failed " << r.failed << " of " << r.cases
                          << (r.failures.empty() ? "" : ": " + r.failures[0].input + " -> " + r.failures[0].detail);
}

INSTANTIATE_TEST_SUITE_P(All, QuickSuite, ::testing::ValuesIn(suite_names()), [](const auto& info) {
  std::string s = info.param;
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
});

TEST(Suites, Deterministic) {
  auto a = run_suite("postlie-trees", quick()), b = run_suite("postlie-trees", quick());
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.counters, b.counters);
}
