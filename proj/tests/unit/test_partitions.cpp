#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "kleinian/partitions.hpp"
#include "oracles.hpp"

using namespace kleinian;

namespace {

Partition random_partition(std::mt19937& rng, int max_weight) {
  std::uniform_int_distribution<int> w(0, max_weight);
  return Partition(oracle::random_partition(rng, w(rng)));
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  const Partition p = Partition::parse("4, 2,2,1");
  EXPECT_EQ(p.parts(), (std::vector<int>{4, 2, 2, 1}));
  EXPECT_EQ(p.weight(), 9);
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_THROW(Partition::parse("2,3"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
  EXPECT_EQ(Partition::parse("2,0"), Partition({2}));
  EXPECT_THROW(Partition::parse("0,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("-1"), std::invalid_argument);
}

TEST(Partition, ConjugateAndCells) {
  const Partition p({4, 2, 2, 1});
  EXPECT_EQ(p.conjugate(), Partition({4, 3, 1, 1}));
  EXPECT_EQ(p.conjugate().conjugate(), p);
  EXPECT_EQ(Partition::from_cells(p.cells()), p);
  EXPECT_TRUE(p.contains({3, 0}));
  EXPECT_FALSE(p.contains({2, 1}));
}

TEST(Partition, AddableAndRemovable) {
  const Partition p({4, 2, 2, 1});
  EXPECT_EQ(p.removable_cells().size(), 3u);
  EXPECT_EQ(p.addable_cells().size(), 4u);
  for (const auto& c : p.addable_cells()) EXPECT_EQ(p.with_cell(c).without_cell(c), p);
}

TEST(Enumeration, CountsArePartitionNumbers) {
  const auto p = oracle::partition_numbers(20);
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(static_cast<long long>(partitions_of(n).size()), p[static_cast<std::size_t>(n)]);
  std::size_t total = 0;
  for (int n = 0; n <= 12; ++n) total += static_cast<std::size_t>(p[static_cast<std::size_t>(n)]);
  EXPECT_EQ(partitions_up_to(12).size(), total);
}

TEST(Enumeration, MatchesOracleList) {
  const auto mine = partitions_of(9);
  const auto theirs = oracle::all_partitions(9);
  ASSERT_EQ(mine.size(), theirs.size());
  for (std::size_t i = 0; i < mine.size(); ++i) EXPECT_EQ(mine[i].parts(), theirs[i]);
}

TEST(Multiweight, FigureExample) {
  EXPECT_EQ(multiweight(Partition({4, 2, 2, 1}), 2), (std::vector<int>{4, 2, 3}));
  EXPECT_EQ(cell_label({0, 1}, 2), 2);
}

TEST(MonomialIdeal, FigureExample) {
  // x^4, x^2 y, x y^3, y^4
  EXPECT_EQ(monomial_ideal_generators(Partition({4, 2, 2, 1})),
            (std::vector<Cell>{{4, 0}, {2, 1}, {1, 3}, {0, 4}}));
  EXPECT_EQ(monomial_ideal_generators(Partition()), (std::vector<Cell>{{0, 0}}));
}

TEST(BorderStrips, UniqueThreeStripOfExample) {
  const Partition p({4, 2, 2, 1});
  const auto strips = removable_border_strips(p, 3);
  ASSERT_EQ(strips.size(), 1u);
  const Partition q = remove_border_strip(p, strips[0]);
  EXPECT_EQ(q.weight(), 6);
  EXPECT_EQ(add_border_strip(q, strips[0]), p);
}

TEST(BorderStrips, RejectsForeignStrip) {
  EXPECT_THROW(remove_border_strip(Partition({2}), BorderStrip{{{0, 0}, {1, 0}, {2, 0}}}), std::invalid_argument);
}

TEST(Cores, AgreeWithHookCriterion) {
  for (int t : {2, 3, 4}) {
    for (int n = 0; n <= 12; ++n)
      for (const auto& p : partitions_of(n)) EXPECT_EQ(is_core(p, t), oracle::is_core_by_hooks(p.parts(), t)) << p.to_string();
  }
}

TEST(Cores, CountMatchesProductFormula) {
  for (int t : {2, 3, 4, 5}) {
    const auto expect = oracle::core_counts(t, 16);
    std::vector<long long> got(17, 0);
    for (const auto& p : partitions_up_to(16))
      if (is_core(p, t)) ++got[static_cast<std::size_t>(p.weight())];
    for (int n = 0; n <= 16; ++n) EXPECT_EQ(got[static_cast<std::size_t>(n)], expect[static_cast<std::size_t>(n)]) << t << " " << n;
  }
}

TEST(Cores, TwoCoresAreStaircases) {
  for (const auto& p : partitions_up_to(15)) {
    if (!is_core(p, 2)) continue;
    const int k = p.length();
    std::vector<int> stair(static_cast<std::size_t>(k));
    std::iota(stair.rbegin(), stair.rend(), 1);
    EXPECT_EQ(p.parts(), stair);
  }
}

TEST(Cores, RemovalIsConfluent) {
  for (int m : {2, 3, 4})
    for (const auto& p : partitions_up_to(11)) {
      const auto cs = all_cores(p, m);
      ASSERT_EQ(cs.size(), 1u) << p.to_string();
      EXPECT_EQ(*cs.begin(), core(p, m));
    }
}

TEST(Littlewood, ExampleDecomposition) {
  const auto d = littlewood_decompose(Partition({4, 2, 2, 1}), 3);
  EXPECT_EQ(d.core, Partition({4, 2}));
  EXPECT_EQ(d.quotients.size(), 3u);
  const auto h = hilbert_component(Partition({4, 2, 2, 1}), 2);
  EXPECT_EQ(h.core, Partition({4, 2}));
  EXPECT_EQ(h.n, 1);
}

TEST(LittlewoodProperty, RoundTripAndWeight) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const Partition p = random_partition(rng, 30);
    for (int m : {1, 2, 3, 5}) {
      const auto d = littlewood_decompose(p, m);
      EXPECT_TRUE(is_core(d.core, m));
      EXPECT_EQ(d.core, core(p, m));
      int q = 0;
      for (const auto& x : d.quotients) q += x.weight();
      EXPECT_EQ(p.weight(), d.core.weight() + m * q) << p.to_string();
      EXPECT_EQ(littlewood_compose(d, m), p) << p.to_string();
    }
  }
}

TEST(Zr, BruteForceMatchesClosedForm) {
  for (int r = 0; r <= 4; ++r) EXPECT_EQ(brute_force_Zr(r, 12), formula_Zr(r, 12)) << r;
}

TEST(Zr, TotalDegreeGivesPartitionNumbers) {
  const auto p = oracle::partition_numbers(14);
  const IntSeries z = formula_Zr(2, 14);
  std::vector<Integer> by_degree(15);
  for (const auto& [e, c] : z.terms()) by_degree[static_cast<std::size_t>(z.degree(e))] += c;
  for (int n = 0; n <= 14; ++n) EXPECT_EQ(by_degree[static_cast<std::size_t>(n)], Integer(static_cast<long>(p[static_cast<std::size_t>(n)])));
}

TEST(Zr, JacobiProductMatchesCheckerboardOracle) {
  const IntSeries j = jacobi_product(20);
  const auto expect = oracle::checkerboard_product(20);
  std::size_t nonzero = 0;
  for (const auto& [e, c] : expect) {
    EXPECT_EQ(j.coefficient({e.first, e.second}), Integer(static_cast<long>(c))) << e.first << "," << e.second;
    ++nonzero;
  }
  EXPECT_EQ(j.size(), nonzero);
  EXPECT_EQ(j, formula_Zr(1, 20));
}

TEST(QBinomial, MatchesQPascalOracle) {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const auto expect = oracle::gaussian_binomial(a, b);
      const IntPoly got = q_binomial(a, b);
      ASSERT_EQ(got.degree(), a * b);
      for (int k = 0; k <= a * b; ++k) EXPECT_EQ(got.coefficient(k), Integer(static_cast<long>(expect[static_cast<std::size_t>(k)])));
      EXPECT_EQ(rectangle_partitions(a, b), got);
    }
}

TEST(QBinomial, RootValuesMatchComplexEvaluation) {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const int n = a + b + 1;
      const auto poly = oracle::gaussian_binomial(a, b);
      for (int j = 1; j < n; ++j) {
        if (std::gcd(j, n) != 1) continue;
        const CycInt v = q_binomial_at_root(a, b, root_of_unity(n, j));
        std::complex<double> num = 0;
        for (std::size_t k = 0; k < v.coeffs().size(); ++k) num += v.coeffs()[k].get_d() * oracle::root(n, static_cast<long>(k));
        EXPECT_LT(std::abs(num - oracle::evaluate(poly, oracle::root(n, j))), 1e-6) << a << " " << b << " " << j;
      }
    }
}

TEST(QBinomial, SignRuleAtRoots) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) EXPECT_EQ(q_binomial_root_sign(a, b), a % 2) << a << " " << b;
  const auto rep = check_q_binomial_roots(6);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.sign_rule, "k = a mod 2");
  EXPECT_EQ(rep.pairs_checked, 36u);
}
