#include "cyclecollide/verify.hpp"

#include <gtest/gtest.h>

namespace {

namespace vf = cyclecollide::verify;
namespace ex = cyclecollide::exact;

TEST(Verify, BruteForceHistogram) {
  EXPECT_EQ(vf::brute_force_cycle_histogram(3), (std::vector<std::uint64_t>{2, 3, 1}));
  EXPECT_EQ(vf::brute_force_cycle_histogram(1), (std::vector<std::uint64_t>{1}));
  EXPECT_THROW(vf::brute_force_cycle_histogram(0), std::domain_error);
}

TEST(Verify, ExactCriteriaPassOnCorrectRows) {
  vf::VerifyOptions opts;
  opts.only = {1, 2};
  const auto s = vf::run_verify(opts);
  ASSERT_EQ(s.results.size(), 2u);
  EXPECT_TRUE(s.all_passed());
}

TEST(Verify, CorruptedRecurrenceFailsRowSum) {
  vf::VerifyOptions opts;
  opts.only = {1, 2};
  opts.row_builder = [](std::uint32_t n) {
    auto row = ex::stirling_row(n);
    if (n >= 4) row.coeffs[1] += 1;  // off by one in [n 2]
    return row;
  };
  const auto s = vf::run_verify(opts);
  EXPECT_FALSE(s.all_passed());
  ASSERT_NE(s.find(2), nullptr);
  EXPECT_FALSE(s.find(2)->passed);
  EXPECT_NE(s.find(2)->measured.find("n = 4"), std::string::npos);
  EXPECT_FALSE(s.find(1)->passed);
}

TEST(Verify, StarvedQuadratureReportsConvergenceErrors) {
  vf::VerifyOptions opts;
  opts.only = {3, 5, 6};
  opts.quad_override = cyclecollide::analytic::QuadratureConfig{1e-15, 0.0, 2};
  const auto s = vf::run_verify(opts);
  ASSERT_EQ(s.results.size(), 3u);
  for (const auto& r : s.results) {
    EXPECT_FALSE(r.passed) << r.id;
    EXPECT_NE(r.measured.find("convergence error"), std::string::npos) << r.measured;
  }
}

}  // namespace
