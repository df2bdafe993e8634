#include <gtest/gtest.h>

#include <numeric>

#include "kleinian/cartan.hpp"
#include "kleinian/youngwalls.hpp"

using namespace kleinian;

TEST(PatternD, LabelsAndSplitRows) {
  const PatternD p(4);
  EXPECT_EQ(p.period(), 4);
  EXPECT_TRUE(p.split_row(0));
  EXPECT_FALSE(p.split_row(1));
  EXPECT_TRUE(p.split_row(2));
  EXPECT_EQ(p.label({0, 0, CellPart::Upper}), 0);
  EXPECT_EQ(p.label({0, 0, CellPart::Lower}), 1);
  EXPECT_EQ(p.label({1, 0, CellPart::Upper}), 1);
  EXPECT_EQ(p.label({0, 1, CellPart::Full}), 2);
  EXPECT_EQ(p.label({0, 2, CellPart::Upper}), 3);
  EXPECT_EQ(p.label({0, 3, CellPart::Full}), 2);
  EXPECT_THROW(static_cast<void>(p.label({0, 1, CellPart::Lower})), std::invalid_argument);
}

TEST(PatternD, BarContentSumsToDualCoxeter) {
  for (int r = 4; r <= 8; ++r) {
    const auto c = PatternD(r).bar_content();
    EXPECT_EQ(std::accumulate(c.begin(), c.end(), 0), dual_coxeter(Family::D, r));
    EXPECT_EQ(c, affine_diagram(Family::D, r).marks);
  }
}

TEST(ValidateWall, EachRuleFires) {
  using C = WallColumn;
  EXPECT_TRUE(validate_wall({{2, TopHalf::Upper}, {1, TopHalf::None}}, 4).valid);
  EXPECT_EQ(validate_wall({{0, TopHalf::None}}, 4).rule, "YW1");
  EXPECT_EQ(validate_wall({C{1, TopHalf::Lower}}, 4).rule, "YW2");
  EXPECT_EQ(validate_wall({empty_column, C{1, TopHalf::None}}, 4).rule, "YW3");
  EXPECT_EQ(validate_wall({C{1, TopHalf::None}, C{1, TopHalf::None}}, 4).rule, "YW4");
}

TEST(Walls, EnumerationIsValidAndCounted) {
  const auto walls = enumerate_walls(4, 12);
  EXPECT_EQ(walls.size(), 151u);
  for (const auto& w : walls) {
    EXPECT_TRUE(validate_wall(w.columns, 4).valid);
    EXPECT_LE(wall_weight(w, 4), 12);
    const auto m = multiweight_wall(w, 4);
    EXPECT_EQ(std::accumulate(m.begin(), m.end(), 0), wall_weight(w, 4));
  }
  EXPECT_EQ(walls.front(), YoungWallD{});
}

TEST(Walls, BarsCarryBarContent) {
  const PatternD p(5);
  for (const auto& w : enumerate_walls(5, 12)) {
    const auto mw = multiweight_wall(w, 5);
    for (const auto& b : removable_bars(w, 5)) {
      const auto rest = multiweight_wall(b.remainder, 5);
      for (std::size_t i = 0; i < mw.size(); ++i) EXPECT_EQ(mw[i] - rest[i], p.bar_content()[i]);
      EXPECT_EQ(remove_bar(w, b, 5), b.remainder);
    }
  }
}

TEST(Walls, IdentitiesHold) {
  for (int r : {4, 5}) {
    const auto rep = check_wall_identities(r, 10);
    EXPECT_TRUE(rep.passed()) << r;
    EXPECT_GT(rep.bars_checked, 0u);
  }
}

TEST(Walls, CoreWallsMatchLatticeSum) {
  for (int r : {4, 5}) {
    const int d = 14;
    const IntSeries like = int_series(indexed_variables(r + 1), d);
    IntSeries cores = like;
    for (const auto& w : enumerate_walls(r, d))
      if (is_core_wall(w, r)) {
        const auto m = multiweight_wall(w, r);
        cores.add_term(Exponents(m.begin(), m.end()), 1);
      }
    EXPECT_EQ(cores, lattice_theta(cartan_matrix(Family::D, r), affine_diagram(Family::D, r).marks, like)) << r;
  }
}

TEST(ZDr, BruteForceMatchesClosedForm) {
  EXPECT_EQ(brute_force_ZDr(4, 12), formula_ZDr(4, 12));
  EXPECT_EQ(brute_force_ZDr(5, 10), formula_ZDr(5, 10));
  EXPECT_THROW(formula_ZDr(3, 4), std::invalid_argument);
}

TEST(QuotD, FrozenSeriesForJZero) {
  const IntSeries s = quot_euler_series_D(4, {0}, 8);
  const std::vector<long> expect{1, 1, 3, 5, 11, 18, 32, 50, 83};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(s.coefficient({n}), Integer(expect[static_cast<std::size_t>(n)])) << n;
}

TEST(QuotD, PointCountsNeedAGoodPrime) {
  const auto counts = graded_quot_point_counts(4, {0}, 4, 3);
  EXPECT_EQ(counts.at({0}), 1);
  EXPECT_EQ(counts.at({1}), 1);
  EXPECT_THROW(graded_quot_point_counts(4, {0}, 4, 2), std::invalid_argument);
  EXPECT_THROW(graded_quot_point_counts(4, {0}, 4, 9), std::invalid_argument);
}

TEST(QuotD, QuasiPolynomialCaseRefuses) {
  EXPECT_THROW(quot_euler_series_D(5, {0}, 8), std::runtime_error);
}

TEST(SubstitutionD, PassesOnSupportedCases) {
  for (const auto& j : std::vector<std::vector<int>>{{0}, {0, 1}}) {
    const auto rep = verify_substitution_D(4, j, 8);
    EXPECT_TRUE(rep.passed()) << j.size();
    ASSERT_TRUE(rep.c_order.has_value());
  }
}

TEST(TypeE, NormalizedSubstitutionIsNonNegative) {
  const auto e = substitute_E(6, {0}, 8);
  EXPECT_TRUE(e.nonnegative_integral);
  const std::vector<long> expect{1, 1, 3, 5, 9, 15, 26, 40, 64};
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(e.normalized.coefficient({n}), CycInt(e.normalized.coefficient({0}).order(), Integer(expect[static_cast<std::size_t>(n)])));
}
