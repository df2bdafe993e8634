#include <gtest/gtest.h>

#include <complex>
#include <numeric>
#include <random>

#include "kleinian/exact.hpp"
#include "oracles.hpp"

using namespace kleinian;

namespace {

std::complex<double> numeric(const CycInt& z) {
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < z.coeffs().size(); ++k)
    s += z.coeffs()[k].get_d() * oracle::root(z.order(), static_cast<long>(k));
  return s;
}

CycInt random_cyc(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Integer> powers;
  for (int i = 0; i < order; ++i) powers.emplace_back(coeff(rng));
  return CycInt::from_powers(order, powers);
}

}  // namespace

TEST(IntPoly, ArithmeticAndTrim) {
  const IntPoly a({1, 2});
  const IntPoly b({-1, 0, 3});
  EXPECT_EQ(a * b, IntPoly({-1, -2, 3, 6}));
  EXPECT_EQ(a - a, IntPoly());
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a + b).degree(), 2);
}

TEST(IntPoly, MonicDivision) {
  const IntPoly num({-1, 0, 0, 1});  // x^3 - 1
  const auto d = divide_monic(num, IntPoly({-1, 1}));
  EXPECT_EQ(d.quotient, IntPoly({1, 1, 1}));
  EXPECT_TRUE(d.remainder.is_zero());
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), IntPoly({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), IntPoly({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), IntPoly({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(15), IntPoly({1, -1, 0, 1, -1, 1, 0, -1, 1}));
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (int n = 1; n <= 60; ++n) {
    int phi = 0;
    for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1 ? 1 : 0;
    EXPECT_EQ(euler_phi(n), phi) << n;
    EXPECT_EQ(cyclotomic_polynomial(n).degree(), phi) << n;
  }
}

TEST(CycInt, RootsOfUnityMultiply) {
  for (int n : {1, 2, 3, 5, 7, 12, 14, 30}) {
    const CycInt z = root_of_unity(n, 1);
    EXPECT_EQ(z.pow(n), CycInt(n, 1)) << n;
    for (long k = -2 * n; k <= 2 * n; ++k) {
      EXPECT_EQ(root_of_unity(n, k) * root_of_unity(n, 3), root_of_unity(n, k + 3));
      EXPECT_EQ(*is_root_of_unity(root_of_unity(n, k)), n / std::gcd(n, static_cast<int>(((k % n) + n) % n)));
    }
  }
}

TEST(CycInt, NegativeRootsNeedDoubledOrder) {
  // -zeta_5 has order 10 but lives in Q(zeta_5)
  const CycInt z = -root_of_unity(5, 1);
  EXPECT_EQ(is_root_of_unity(z), 10);
  EXPECT_FALSE(root_of_unity_exponent(z).has_value());
  EXPECT_EQ(root_of_unity_exponent(root_of_unity(5, 3)), 3);
}

TEST(CycInt, NotARoot) {
  EXPECT_FALSE(is_root_of_unity(CycInt(7, 2)).has_value());
  EXPECT_FALSE(is_root_of_unity(root_of_unity(7, 1) + CycInt(7, 1)).has_value());
  EXPECT_THROW(is_root_of_unity(CycInt(7)), std::invalid_argument);
}

TEST(CycInt, IntegerRoundTrip) {
  EXPECT_EQ(CycInt(9, 42).to_integer(), Integer(42));
  EXPECT_FALSE(root_of_unity(9, 1).to_integer().has_value());
  // 1 + zeta_3 + zeta_3^2 = 0
  EXPECT_TRUE((CycInt(3, 1) + root_of_unity(3, 1) + root_of_unity(3, 2)).is_zero());
}

TEST(CycInt, DivideExact) {
  const CycInt a = root_of_unity(7, 2) + CycInt(7, 3);
  const CycInt b = root_of_unity(7, 5);
  const auto q = divide_exact(a * b, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, a);
  EXPECT_FALSE(divide_exact(CycInt(1, 3), CycInt(1, 2)).has_value());
  EXPECT_FALSE(divide_exact(CycInt(7, 1), CycInt(7)).has_value());
}

TEST(CycInt, MixedOrdersThrow) {
  EXPECT_THROW(root_of_unity(5, 1) + root_of_unity(7, 1), std::invalid_argument);
}

TEST(CycIntProperty, RingAxiomsMatchComplexEvaluation) {
  std::mt19937 rng(20240611);
  for (int n : {3, 4, 5, 8, 9, 12, 15}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CycInt a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_LT(std::abs(numeric(a * b) - numeric(a) * numeric(b)), 1e-6);
      EXPECT_LT(std::abs(numeric(a + b) - numeric(a) - numeric(b)), 1e-9);
      if (!b.is_zero()) {
        const auto q = divide_exact(a * b, b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
      }
    }
  }
}

TEST(LinearAlgebra, SolveAndInverse) {
  const RatMatrix a = to_rational(IntMatrix{{2, -1}, {-1, 2}});
  const auto x = solve_exact(a, {Rational(1), Rational(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(1));
  const auto inv = inverse_exact(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)[0][0], Rational(2, 3));
  EXPECT_EQ((*inv)[0][1], Rational(1, 3));
  EXPECT_FALSE(solve_exact(to_rational(IntMatrix{{1, 2}, {2, 4}}), {Rational(1), Rational(0)}).has_value());
}

TEST(LinearAlgebra, Lcm) {
  EXPECT_EQ(lcm_long(4, 6), 12);
  EXPECT_EQ(lcm_long(1, 7), 7);
}
