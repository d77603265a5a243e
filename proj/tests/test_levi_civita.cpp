#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace excalc;

namespace {

template <std::size_t N>
auto constant_vec(std::size_t mu) {
  return [mu](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    return unit_vector<U, N>(mu);
  };
}

// g = diag(1, x1^2)
auto polar_like = [](const auto& y) {
  using U = std::remove_cvref_t<decltype(y[0])>;
  Matrix<U, 2> m;
  m(0, 0) = U(1.0);
  m(1, 1) = y[0] * y[0];
  return m;
};

// non-diagonal Lorentzian metric in three dimensions, q = 1
auto lorentz3 = [](const auto& y) {
  using U = std::remove_cvref_t<decltype(y[0])>;
  Matrix<U, 3> m;
  m(0, 0) = 2.0 + sin(y[1]);
  m(1, 1) = 1.0 + y[0] * y[0];
  m(2, 2) = -1.5 - 0.2 * y[1] * y[2];
  m(0, 1) = m(1, 0) = 0.3 * y[2];
  m(1, 2) = m(2, 1) = 0.1 * y[0] * y[1];
  return m;
};

/// Gamma^s_{mu nu} by central differences of the metric.
Eigen::Matrix3d christoffel_fd(std::size_t s, const Vector<double, 3>& x) {
  const double h = 1e-5;
  std::array<Eigen::Matrix3d, 3> dg;
  for (std::size_t i = 0; i < 3; ++i) {
    auto xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    dg[i] = (oracle::to_eigen(lorentz3(xp)) - oracle::to_eigen(lorentz3(xm))) / (2 * h);
  }
  const Eigen::Matrix3d gi = oracle::to_eigen(lorentz3(x)).inverse();
  Eigen::Matrix3d r = Eigen::Matrix3d::Zero();
  for (std::size_t mu = 0; mu < 3; ++mu)
    for (std::size_t nu = 0; nu < 3; ++nu)
      for (std::size_t k = 0; k < 3; ++k)
        r(mu, nu) += 0.5 * gi(s, k) * (dg[mu](nu, k) + dg[nu](mu, k) - dg[k](mu, nu));
  return r;
}

}  // namespace

TEST(LeviCivita, ChristoffelSymbolsOfPolarLikeMetric) {
  const MetricField<2> g(Extensor11Field<2>(polar_like), 0);
  for (double x1 : {0.5, 1.0, 2.0}) {
    const Vector<double, 2> x{x1, 0.3};
    EXPECT_NEAR(christoffel_first(g, constant_vec<2>(1), constant_vec<2>(1), constant_vec<2>(0), x), -x1, 1e-14);
    EXPECT_NEAR(christoffel_first(g, constant_vec<2>(0), constant_vec<2>(1), constant_vec<2>(1), x), x1, 1e-14);
    EXPECT_NEAR(christoffel_second(g, constant_vec<2>(1), constant_vec<2>(1), constant_vec<2>(0), x), -x1, 1e-14);
    EXPECT_NEAR(christoffel_second(g, constant_vec<2>(0), constant_vec<2>(1), constant_vec<2>(1), x), 1.0 / x1,
                1e-14);
  }
}

TEST(LeviCivita, ConnectionCoefficientsMatchClassicalChristoffelSymbols) {
  const MetricField<3> g(Extensor11Field<3>(lorentz3), 1);
  const LeviCivita<3> lc(g);
  for (const Vector<double, 3>& x : {Vector<double, 3>{0.2, -0.4, 0.6}, Vector<double, 3>{-0.7, 0.1, 0.3}}) {
    const auto c = levi_civita_coefficients(g, x);
    for (std::size_t s = 0; s < 3; ++s) {
      const auto gamma = christoffel_fd(s, x);
      for (std::size_t mu = 0; mu < 3; ++mu)
        for (std::size_t nu = 0; nu < 3; ++nu) {
          EXPECT_NEAR(c(mu, nu, s), gamma(mu, nu), 1e-8);
          EXPECT_NEAR(lc.lambda(unit_vector<double, 3>(mu), unit_vector<double, 3>(nu), x)[s], gamma(mu, nu), 1e-8);
        }
    }
  }
}

TEST(LeviCivita, CovariantDerivativeOfConstantFrameIsLambda) {
  const MetricField<3> g(Extensor11Field<3>(lorentz3), 1);
  const LeviCivita<3> lc(g);
  const Vector<double, 3> x{0.1, 0.5, -0.2};
  for (std::size_t mu = 0; mu < 3; ++mu)
    for (std::size_t nu = 0; nu < 3; ++nu) {
      auto b = [nu](const auto& y) {
        using U = std::remove_cvref_t<decltype(y[0])>;
        return Multivector<U, 3>::basis_vector(nu);
      };
      const auto d = lc.D_plus(unit_vector<double, 3>(mu), b, x);
      const auto expected = christoffel_fd(0, x)(mu, nu) * Multivector<double, 3>::basis_vector(0) +
                            christoffel_fd(1, x)(mu, nu) * Multivector<double, 3>::basis_vector(1) +
                            christoffel_fd(2, x)(mu, nu) * Multivector<double, 3>::basis_vector(2);
      EXPECT_TRUE(approx_equal(d, expected, 1e-8));
    }
}

TEST(LeviCivita, OmegaZeroOfPolarLikeMetric) {
  using MV = Multivector<double, 2>;
  const LeviCivita<2> lc(MetricField<2>(Extensor11Field<2>(polar_like), 0));
  const Vector<double, 2> x{2.0, 0.0};
  EXPECT_TRUE(approx_equal(lc.omega0(unit_vector<double, 2>(1), x), -0.5 * MV::blade(0b11), 1e-14));
  EXPECT_TRUE(is_zero(lc.omega0(unit_vector<double, 2>(0), x), 1e-14));
}

TEST(LeviCivita, CovariantDivergenceOfRadialFrameVector) {
  using MV = Multivector<double, 2>;
  const LeviCivita<2> lc(MetricField<2>(Extensor11Field<2>(polar_like), 0));
  auto e1 = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    return Multivector<U, 2>::basis_vector(0);
  };
  const Vector<double, 2> x{2.0, 0.7};
  EXPECT_TRUE(approx_equal(lc.cov_div_plus(e1, x), MV::scalar(0.5), 1e-14));
  EXPECT_TRUE(approx_equal(lc.cov_div_plus_closed(e1, x), MV::scalar(0.5), 1e-14));
}

TEST(LeviCivita, ConstantMetricReducesToDirectionalDerivative) {
  Matrix<double, 3> gm = oracle::diag<3>({2.0, 3.0, -1.0});
  gm(0, 2) = gm(2, 0) = 0.5;
  const LeviCivita<3> lc(oracle::constant_metric<3>(gm, 1));
  auto f = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    Multivector<U, 3> m;
    m[0b001] = y[1] * y[2];
    m[0b110] = sin(y[0]);
    m[0b111] = y[0] * y[0];
    return m;
  };
  const Vector<double, 3> x{0.3, 0.2, -0.5}, a{1.0, -2.0, 0.5};
  EXPECT_TRUE(approx_equal(lc.D_plus(a, f, x), dir_deriv(a, f, x), 1e-14));
  EXPECT_TRUE(approx_equal(lc.D_minus(a, f, x), dir_deriv(a, f, x), 1e-14));
  EXPECT_TRUE(is_zero(lc.omega0(a, x), 1e-14));
}

TEST(LeviCivita, GradientPairingIsSumOfCurlAndDivergencePairings) {
  const LeviCivita<3> lc(MetricField<3>(Extensor11Field<3>(lorentz3), 1));
  auto xf = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    Multivector<U, 3> m;
    m[0] = y[0];
    m[0b001] = y[1] * y[2];
    m[0b011] = cos(y[0]);
    m[0b100] = y[2] * y[2];
    return m;
  };
  auto yf = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    Multivector<U, 3> m;
    m[0b010] = y[0] * y[1];
    m[0b101] = U(1.0) + y[2];
    m[0b111] = sin(y[1]);
    m[0] = y[2];
    return m;
  };
  const Vector<double, 3> x{0.4, -0.3, 0.2};
  const auto a = lagrangian_sides(lc, LagrangianIdentity::curl_div, xf, yf, x);
  const auto b = lagrangian_sides(lc, LagrangianIdentity::div_curl, xf, yf, x);
  const auto c = lagrangian_sides(lc, LagrangianIdentity::grad_grad, xf, yf, x);
  EXPECT_NEAR(c.lhs, a.lhs + b.lhs, 1e-12);
  EXPECT_NEAR(a.lhs, a.rhs, 1e-10);
  EXPECT_NEAR(b.lhs, b.rhs, 1e-10);
  EXPECT_NEAR(c.lhs, c.rhs, 1e-10);
}
