#include <gtest/gtest.h>

#include "kleinian/json_io.hpp"

using namespace kleinian;

TEST(Json, IntegerAndRational) {
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890")).get<std::string>(), "123456789012345678901234567890");
  EXPECT_EQ(to_json(Rational(-3) / 6).get<std::string>(), "-1/2");
  EXPECT_EQ(to_json(Rational(4)).get<std::string>(), "4");
}

TEST(Json, SeriesRoundTrip) {
  const IntSeries z = formula_Zr(2, 8);
  const Json j = to_json(z);
  EXPECT_EQ(j["variables"].size(), 3u);
  EXPECT_EQ(j["truncation"], 8);
  EXPECT_FALSE(j.contains("grading"));
  EXPECT_EQ(int_series_from_json(j), z);
  EXPECT_EQ(int_series_from_json(Json::parse(j.dump())), z);
}

TEST(Json, GradedSeriesKeepsGrading) {
  const IntSeries z = formula_Zr(1, 5, {1, 0});
  const Json j = to_json(z);
  ASSERT_TRUE(j.contains("grading"));
  EXPECT_EQ(int_series_from_json(j), z);
}

TEST(Json, CycIntRoundTrip) {
  const CycInt z = root_of_unity(14, 9) + CycInt(14, 3);
  const Json j = to_json(z);
  EXPECT_EQ(j["order"], 14);
  EXPECT_EQ(cycint_from_json(j), z);
}

TEST(Json, LittlewoodShape) {
  const Json j = to_json(littlewood_decompose(Partition({4, 2, 2, 1}), 3), 3);
  EXPECT_EQ(j["core"], Json::parse("[4,2]"));
  EXPECT_EQ(j["core_weight"], 6);
  EXPECT_EQ(j["quotient_total"], 1);
}

TEST(Json, WallShape) {
  const auto walls = enumerate_walls(4, 3);
  for (const auto& w : walls) {
    const Json j = wall_to_json(w, 4);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), w.columns.size());
    for (const auto& col : j) {
      EXPECT_TRUE(col.contains("complete_rows"));
      EXPECT_TRUE(col.contains("labels"));
      const auto top = col["top"].get<std::string>();
      EXPECT_TRUE(top == "lower" || top == "upper" || top == "both" || top == "full") << top;
    }
  }
}

TEST(Json, SubstitutionReportKeys) {
  const Json j = to_json(verify_substitution_A(1, {0}, 6));
  for (const char* k : {"r", "J", "truncation", "c", "matched", "first_mismatch"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j["first_mismatch"].is_null());
  EXPECT_TRUE(j["matched"].get<bool>());
}
