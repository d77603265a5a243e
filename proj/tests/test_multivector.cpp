#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace excalc;

namespace {

template <std::size_t N>
Multivector<double, N> random_mv(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  Multivector<double, N> m;
  for (auto& c : m.coeffs()) c = u(rng);
  return m;
}

}  // namespace

TEST(Multivector, CliffordMatchesSortedIndexOracleForAllBladePairs) {
  constexpr std::size_t N = 4;
  using MV = Multivector<double, N>;
  for (unsigned a = 0; a < MV::size; ++a)
    for (unsigned b = 0; b < MV::size; ++b) {
      const auto [sign, mask] = oracle::blade_product(a, b);
      const auto p = clifford(MV::blade(a), MV::blade(b));
      for (unsigned c = 0; c < MV::size; ++c) EXPECT_EQ(p[c], c == mask ? sign : 0.0) << a << " " << b;
    }
}

TEST(Multivector, WedgeAndContractionsAreGradeProjectionsOfBladeProducts) {
  constexpr std::size_t N = 4;
  using MV = Multivector<double, N>;
  for (unsigned a = 0; a < MV::size; ++a)
    for (unsigned b = 0; b < MV::size; ++b) {
      const int ga = grade_of(a), gb = grade_of(b);
      const auto p = clifford(MV::blade(a), MV::blade(b));
      EXPECT_TRUE(approx_equal(wedge(MV::blade(a), MV::blade(b)), p.grade(ga + gb), 0.0));
      EXPECT_TRUE(approx_equal(lcontract(MV::blade(a), MV::blade(b)), gb >= ga ? p.grade(gb - ga) : MV{}, 0.0));
      EXPECT_TRUE(approx_equal(rcontract(MV::blade(a), MV::blade(b)), ga >= gb ? p.grade(ga - gb) : MV{}, 0.0));
    }
}

TEST(Multivector, VectorHelpersAgreeWithGeneralProducts) {
  constexpr std::size_t N = 3;
  using MV = Multivector<double, N>;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto y = random_mv<N>(rng);
    const Vector<double, N> v{0.3 * t, -1.0, 0.5};
    EXPECT_TRUE(approx_equal(wedge(v, y), wedge(MV::vector(v), y), 1e-14));
    EXPECT_TRUE(approx_equal(lcontract(v, y), lcontract(MV::vector(v), y), 1e-14));
    for (std::size_t mu = 0; mu < N; ++mu) {
      EXPECT_TRUE(approx_equal(wedge_basis(mu, y), wedge(MV::basis_vector(mu), y), 1e-14));
      EXPECT_TRUE(approx_equal(lcontract_basis(mu, y), lcontract(MV::basis_vector(mu), y), 1e-14));
    }
  }
}

TEST(Multivector, InvolutionSignsByGrade) {
  const int rev[] = {1, 1, -1, -1, 1};
  const int hat[] = {1, -1, 1, -1, 1};
  const int bar[] = {1, -1, -1, 1, 1};
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(involution_sign(Involution::reversion, k), rev[k]);
    EXPECT_EQ(involution_sign(Involution::grade_involution, k), hat[k]);
    EXPECT_EQ(involution_sign(Involution::conjugation, k), bar[k]);
  }
}

TEST(Multivector, ReversionReversesProducts) {
  constexpr std::size_t N = 4;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_mv<N>(rng), b = random_mv<N>(rng);
    EXPECT_TRUE(approx_equal(reverse(clifford(a, b)), clifford(reverse(b), reverse(a)), 1e-12));
  }
}

TEST(Multivector, ScalarProductIsEuclideanOnBlades) {
  constexpr std::size_t N = 3;
  using MV = Multivector<double, N>;
  std::mt19937_64 rng(5);
  const auto a = random_mv<N>(rng), b = random_mv<N>(rng);
  double expected = 0;
  for (unsigned k = 0; k < MV::size; ++k) expected += a[k] * b[k];
  EXPECT_NEAR(scalar_product(a, b), expected, 1e-14);
  EXPECT_NEAR(scalar_product(a, b), clifford(reverse(a), b)[0], 1e-14);
}

TEST(Multivector, TextRenderingOrdersByBitmask) {
  using MV = Multivector<double, 3>;
  MV m = MV::blade(0b101, 2.5);
  EXPECT_EQ(to_string(m), "2.5*e13");
  m[0] = 1;
  m[0b010] = -3;
  EXPECT_EQ(to_string(m), "1 - 3*e2 + 2.5*e13");
  EXPECT_EQ(to_string(MV{}), "0");
}

TEST(Multivector, ZeroComparisonUsesAbsoluteTolerance) {
  using MV = Multivector<double, 2>;
  MV m = MV::scalar(5e-11);
  EXPECT_TRUE(is_zero(m));
  EXPECT_FALSE(is_zero(m, 1e-12));
  EXPECT_TRUE(approx_equal(MV::scalar(1.0), MV::scalar(1.0 + 1e-11)));
}
