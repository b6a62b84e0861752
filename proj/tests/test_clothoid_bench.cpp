#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "rspiral/analysis.hpp"
#include "rspiral/clothoid_bench.hpp"
#include "rspiral/errors.hpp"

using namespace rspiral;

TEST(ClothoidElement, Origin) {
  const auto e = clothoid_element(0.0);
  EXPECT_EQ(e.x, 0.0);
  EXPECT_EQ(e.y, 0.0);
  EXPECT_EQ(e.tau, 0.0);
  EXPECT_EQ(e.k, 0.0);
}

TEST(ClothoidElement, MatchesSeriesOracle) {
  for (double s : {0.1, 0.5, 1.0, 2.0, 3.0, 4.5, 6.0}) {
    const auto e = clothoid_element(s);
    const auto [x, y] = oracle::clothoid_series(s);
    EXPECT_NEAR(e.x, static_cast<double>(x), 1e-12) << s;
    EXPECT_NEAR(e.y, static_cast<double>(y), 1e-12) << s;
    EXPECT_EQ(e.tau, 0.5 * s * s);
    EXPECT_EQ(e.k, s);
  }
  const auto one = clothoid_element(1.0);
  EXPECT_NEAR(one.x, 0.9752876882, 1e-10);
  EXPECT_NEAR(one.y, 0.1637140474, 1e-10);
}

TEST(ClothoidElement, OddSymmetry) {
  for (double s : {0.3, 1.7, 4.2}) {
    const auto p = clothoid_element(s);
    const auto m = clothoid_element(-s);
    EXPECT_NEAR(m.x, -p.x, 1e-14);
    EXPECT_NEAR(m.y, -p.y, 1e-14);
    EXPECT_EQ(m.k, -p.k);
    EXPECT_EQ(m.tau, p.tau);
  }
}

class ClothoidPipeline : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { approx_ = new ClothoidApproximation(approximate_clothoid(0.0, 6.0)); }
  static void TearDownTestSuite() {
    delete approx_;
    approx_ = nullptr;
  }
  static ClothoidApproximation* approx_;
};

ClothoidApproximation* ClothoidPipeline::approx_ = nullptr;

TEST_F(ClothoidPipeline, FewSolvableSpans) {
  const auto& a = *approx_;
  ASSERT_GE(a.spans.size(), 1u);
  EXPECT_LE(a.spans.size(), 10u);
  EXPECT_EQ(a.breakpoints.size(), a.spans.size() + 1);
  EXPECT_EQ(a.breakpoints.front(), 0.0);
  EXPECT_EQ(a.breakpoints.back(), 6.0);
  for (std::size_t i = 0; i + 1 < a.breakpoints.size(); ++i) {
    EXPECT_LT(a.breakpoints[i], a.breakpoints[i + 1]);
  }
  for (const auto& span : a.spans) EXPECT_TRUE(span.solvable());
}

TEST_F(ClothoidPipeline, BreakpointCurvaturesAreExact) {
  const auto& a = *approx_;
  for (std::size_t i = 0; i < a.spans.size(); ++i) {
    const auto el0 = clothoid_element(a.breakpoints[i]);
    const auto el1 = clothoid_element(a.breakpoints[i + 1]);
    EXPECT_EQ(el0.k, a.breakpoints[i]);
    for (const auto& curve : a.spans[i].solutions) {
      EXPECT_NEAR(curve.curvature(0.0), el0.k, 1e-9 * std::max(1.0, el0.k));
      EXPECT_NEAR(curve.curvature(1.0), el1.k, 1e-9 * std::max(1.0, el1.k));
      const Point2 p0 = curve.point(0.0);
      const Point2 p1 = curve.point(1.0);
      EXPECT_LE(std::hypot(p0.x - el0.x, p0.y - el0.y), 1e-9);
      EXPECT_LE(std::hypot(p1.x - el1.x, p1.y - el1.y), 1e-9);
      EXPECT_LE(oracle::angle_error(curve.tangent_angle(0.0), el0.tau), 1e-9);
      EXPECT_LE(oracle::angle_error(curve.tangent_angle(1.0), el1.tau), 1e-9);
    }
  }
}

TEST_F(ClothoidPipeline, PiecewiseIncreasingCurvature) {
  for (const auto& span : approx_->spans) {
    for (const auto& curve : span.solutions) {
      EXPECT_EQ(curvature_profile(curve, 200).monotone_direction, 1);
    }
  }
}

TEST_F(ClothoidPipeline, SpansAreNearlyMaximal) {
  const auto& b = approx_->breakpoints;
  // Every span but the split tail uses the margin of its maximal span.
  for (std::size_t i = 0; i + 3 < b.size(); ++i) {
    EXPECT_NEAR(b[i + 1] - b[i], 0.99 * max_solvable_span(b[i], 64.0), 1e-12);
  }
}

TEST_F(ClothoidPipeline, RefinementReducesDeviation) {
  std::vector<double> breaks = approx_->breakpoints;
  double previous = approx_->report.overall;
  EXPECT_GT(previous, 0.0);
  for (int level = 0; level < 3; ++level) {
    breaks = refine_midpoints(breaks);
    const auto refined = approximate_clothoid_at(breaks);
    EXPECT_LT(refined.report.overall, previous) << level;
    previous = refined.report.overall;
  }
}

TEST_F(ClothoidPipeline, ReportMatchesSpans) {
  const auto& r = approx_->report;
  ASSERT_EQ(r.spans.size(), approx_->spans.size());
  double worst = 0.0;
  for (const auto& d : r.spans) worst = std::max({worst, d.max_deviation[0], d.max_deviation[1]});
  EXPECT_EQ(worst, r.overall);
}

TEST(ClothoidBench, RefineMidpoints) {
  const std::vector<double> b{0.0, 1.0, 3.0};
  const std::vector<double> expected{0.0, 0.5, 1.0, 2.0, 3.0};
  EXPECT_EQ(refine_midpoints(b), expected);
  EXPECT_TRUE(refine_midpoints(std::vector<double>{}).empty());
}

TEST(ClothoidBench, ArcLengthInversion) {
  const auto approx = approximate_clothoid_at(std::vector<double>{1.0, 2.0}, 50);
  const auto& curve = approx.spans[0].solutions[0];
  const auto table = cumulative_arc_length(curve, 256);
  for (double f : {0.1, 0.37, 0.8}) {
    const double s = f * table.back();
    const double t = t_at_arc_length(curve, table, s);
    EXPECT_NEAR(arc_length(curve, 0.0, t), s, 1e-10 * table.back());
  }
  EXPECT_EQ(t_at_arc_length(curve, table, -1.0), 0.0);
  EXPECT_EQ(t_at_arc_length(curve, table, 2.0 * table.back()), 1.0);
}

TEST(ClothoidBench, BadInputs) {
  EXPECT_THROW(approximate_clothoid(2.0, 1.0), DomainError);
  ClothoidPolicy bad;
  bad.margin = 1.5;
  EXPECT_THROW(approximate_clothoid(0.0, 1.0, bad), DomainError);
  EXPECT_THROW(approximate_clothoid_at(std::vector<double>{1.0}), DomainError);
}

TEST(ClothoidBench, SmallerMarginReducesDeviation) {
  const auto coarse = approximate_clothoid(0.0, 6.0);
  ClothoidPolicy half;
  half.margin = 0.495;
  const auto fine = approximate_clothoid(0.0, 6.0, half);
  EXPECT_GT(fine.spans.size(), coarse.spans.size());
  EXPECT_LT(fine.report.overall, coarse.report.overall);
}
