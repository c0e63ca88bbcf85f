#include <solfold/search.hpp>

#include <gtest/gtest.h>

#include <cmath>

namespace solfold {
namespace {

TEST(GridCompass, FindsOffGridMinimumOfQuadratic) {
  const Objective f = [](std::span<const double> x) {
    return (x[0] - 0.37) * (x[0] - 0.37) + 2.0 * (x[1] + 1.21) * (x[1] + 1.21) + 0.5;
  };
  const SearchResult r = grid_compass_minimize(f, {{-3.0, -3.0}, {3.0, 3.0}, 5}, 1e-8, 100000);
  EXPECT_EQ(r.status, SearchStatus::Converged);
  ASSERT_EQ(r.argmin.size(), 2u);
  EXPECT_NEAR(r.argmin[0], 0.37, 1e-7);
  EXPECT_NEAR(r.argmin[1], -1.21, 1e-7);
  EXPECT_NEAR(r.value, 0.5, 1e-13);
  EXPECT_DOUBLE_EQ(f(r.argmin), r.value);
}

TEST(GridCompass, ReportsBudgetExhaustion) {
  const Objective f = [](std::span<const double> x) { return std::abs(x[0] - 0.123456789); };
  const SearchResult r = grid_compass_minimize(f, {{-1.0}, {1.0}, 5}, 1e-12, 12);
  EXPECT_EQ(r.status, SearchStatus::BudgetExhausted);
  EXPECT_LE(r.evaluations, 12u);
}

TEST(GridCompass, RejectsMalformedBoxes) {
  const Objective f = [](std::span<const double>) { return 0.0; };
  EXPECT_THROW(grid_compass_minimize(f, {{0.0}, {1.0, 2.0}, 5}, 1e-3, 100), std::invalid_argument);
  EXPECT_THROW(grid_compass_minimize(f, {{1.0}, {0.0}, 5}, 1e-3, 100), std::invalid_argument);
  EXPECT_THROW(grid_compass_minimize(f, {{0.0}, {1.0}, 1}, 1e-3, 100), std::invalid_argument);
  EXPECT_THROW(grid_compass_minimize(f, {{0.0}, {1.0}, 5}, 0.0, 100), std::invalid_argument);
}

}  // namespace
}  // namespace solfold
