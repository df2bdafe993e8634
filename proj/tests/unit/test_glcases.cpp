#include <gtest/gtest.h>

#include "kleinian/glcases.hpp"
#include "oracles.hpp"

using namespace kleinian;

TEST(Boulet, LowDegree) {
  const IntSeries s = boulet_brute(2);
  EXPECT_EQ(s.coefficient({0, 0, 0, 0}), 1);
  EXPECT_EQ(s.coefficient({1, 0, 0, 0}), 1);
  // (2) and (1, 1)
  EXPECT_EQ(s.coefficient({1, 0, 1, 0}), 1);
  EXPECT_EQ(s.coefficient({1, 1, 0, 0}), 1);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(PairLabelling{}.variables(), (std::vector<std::string>{"q_00", "q_01", "q_10", "q_11"}));
}

TEST(Boulet, ProductMatchesBruteForce) {
  EXPECT_EQ(boulet_brute(12), boulet_product(12));
}

TEST(Boulet, SpecializesToCheckerboard) {
  const IntSeries s = boulet_specialize(boulet_product(16));
  for (const auto& [e, c] : oracle::checkerboard_product(16))
    EXPECT_EQ(s.coefficient({e.first, e.second}), Integer(static_cast<long>(c)));
  EXPECT_EQ(s, jacobi_product(16));
  const auto rep = verify_boulet(12, 16);
  EXPECT_TRUE(rep.passed());
}

TEST(Zrr, SpecializesToZr) {
  for (int r = 1; r <= 2; ++r) EXPECT_EQ(zrr_specialize(zrr_brute(r, 10), r), brute_force_Zr(r, 10)) << r;
  EXPECT_EQ(zrr_brute(1, 6).variables().size(), 4u);
}

TEST(Glqa, ANegativeOneIsSL2) {
  // a = r labels (i - j) mod (r + 1)
  for (int r = 1; r <= 4; ++r) EXPECT_EQ(glqa_brute(r, r, 10), brute_force_Zr(r, 10)) << r;
}

TEST(Glqa, LabelsAndRange) {
  const CyclicWeightedLabelling l{6, 2};
  EXPECT_EQ(l.label({1, 3}), 0);
  EXPECT_EQ(l.label({3, 1}), 5);
  EXPECT_TRUE(l.in_stated_range());
  EXPECT_FALSE((CyclicWeightedLabelling{4, 2}.in_stated_range()));
}

TEST(Glqa, TotalCountIsPartitionNumbers) {
  const auto p = oracle::partition_numbers(10);
  const IntSeries s = glqa_brute(4, 2, 10);
  std::vector<Integer> by_degree(11);
  for (const auto& [e, c] : s.terms()) by_degree[static_cast<std::size_t>(s.degree(e))] += c;
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(by_degree[static_cast<std::size_t>(n)], Integer(static_cast<long>(p[static_cast<std::size_t>(n)])));
}
