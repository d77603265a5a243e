#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace excalc;

TEST(Hodge, StandardStarOnThePlane) {
  using MV = Multivector<double, 2>;
  const auto tau = standard_tau<double, 2>();
  EXPECT_TRUE(approx_equal(star(MV::scalar(1.0), tau), MV::blade(0b11), 0.0));
  EXPECT_TRUE(approx_equal(star(MV::basis_vector(0), tau), MV::basis_vector(1), 0.0));
  EXPECT_TRUE(approx_equal(star(MV::basis_vector(1), tau), -MV::basis_vector(0), 0.0));
  EXPECT_TRUE(approx_equal(star(MV::blade(0b11), tau), MV::scalar(1.0), 0.0));
}

TEST(Hodge, StandardStarInverseUndoesStarOnAllBlades) {
  using MV = Multivector<double, 4>;
  for (int s : {1, -1}) {
    const auto tau = standard_tau<double, 4>(s);
    for (BladeMask a = 0; a < MV::size; ++a)
      EXPECT_TRUE(approx_equal(star_inv(star(MV::blade(a), tau), tau), MV::blade(a), 1e-15)) << a;
  }
}

TEST(Hodge, OrientationFollowsFrameDeterminant) {
  using MV = Multivector<double, 2>;
  const auto v = volume_standard(oracle::diag<2>({-1.0, 1.0}));
  EXPECT_EQ(v.sign, -1);
  EXPECT_TRUE(approx_equal(v.tau, -MV::blade(0b11), 0.0));
  EXPECT_TRUE(approx_equal(star(MV::basis_vector(0), v.tau), -MV::basis_vector(1), 0.0));
  EXPECT_EQ(volume_standard(oracle::diag<2>({2.0, 0.5})).sign, 1);
}

TEST(Hodge, MetricStarOnDiagonalMetric) {
  using MV = Multivector<double, 2>;
  const MetricHodge<2> hodge(oracle::constant_metric<2>(oracle::diag<2>({4.0, 9.0}), 0));
  const Vector<double, 2> x{0.1, 0.2};
  EXPECT_TRUE(approx_equal(hodge.tau_g(x), 6.0 * MV::blade(0b11), 1e-14));
  EXPECT_TRUE(approx_equal(hodge.star(MV::basis_vector(0), x), 1.5 * MV::basis_vector(1), 1e-14));
  EXPECT_TRUE(approx_equal(hodge.star(MV::scalar(1.0), x), 6.0 * MV::blade(0b11), 1e-14));
}

TEST(Hodge, VolumeSelfContractionCarriesSignatureSign) {
  for (int q = 0; q <= 3; ++q) {
    Matrix<double, 3> g;
    for (int i = 0; i < 3; ++i) g(i, i) = (i < 3 - q ? 1.0 : -1.0) * (1.0 + i);
    const auto mf = oracle::constant_metric<3>(g, q);
    const MetricHodge<3> hodge(mf);
    const Vector<double, 3> x{};
    const auto tau = hodge.tau_g(x);
    const MetricAlgebra<double, 3> alg(mf.g_inv(x));
    EXPECT_NEAR(alg.lcontract(tau, reverse(tau))[0], q % 2 ? -1.0 : 1.0, 1e-13) << q;
  }
}

TEST(Hodge, MetricStarInverseUndoesStarAndFaultFlagBreaksIt) {
  using MV = Multivector<double, 3>;
  Matrix<double, 3> g = oracle::diag<3>({2.0, -1.0, -3.0});
  g(0, 1) = g(1, 0) = 0.4;
  MetricHodge<3> hodge(oracle::constant_metric<3>(g, 2));
  const Vector<double, 3> x{};
  for (BladeMask a = 0; a < MV::size; ++a)
    EXPECT_TRUE(approx_equal(hodge.star_inv(hodge.star(MV::blade(a), x), x), MV::blade(a), 1e-13)) << a;
  hodge.set_inverse_sign_flipped(true);
  EXPECT_TRUE(hodge.inverse_sign_flipped());
  EXPECT_TRUE(approx_equal(hodge.star_inv(hodge.star(MV::blade(0b011), x), x), -MV::blade(0b011), 1e-13));
}

TEST(Hodge, StandardCoderivativeExamples) {
  using MV = Multivector<double, 2>;
  auto x1e1 = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    return Multivector<U, 2>::blade(0b01, y[0]);
  };
  auto x2e12 = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    return Multivector<U, 2>::blade(0b11, y[1]);
  };
  const Vector<double, 2> x{0.3, -0.6};
  EXPECT_TRUE(approx_equal(delta_standard(x1e1, x), MV::scalar(-1.0), 1e-14));
  EXPECT_TRUE(approx_equal(delta_standard(x2e12, x), MV::basis_vector(0), 1e-14));
  EXPECT_TRUE(approx_equal(delta_standard_closed(x2e12, x), MV::basis_vector(0), 1e-14));
  EXPECT_TRUE(approx_equal(delta_standard(x2e12, x, -1), MV::basis_vector(0), 1e-14));
}

TEST(Hodge, MetricCoderivativeOfOneFormMatchesCoordinateFormula) {
  // delta w = -(1/sqrt|g|) d_i (sqrt|g| g^ij w_j)
  constexpr std::size_t N = 2;
  auto gfn = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    Matrix<U, N> m;
    m(0, 0) = 2.0 + y[1] * y[1];
    m(1, 1) = -(1.0 + y[0] * y[0]);
    m(0, 1) = m(1, 0) = 0.3 * y[0];
    return m;
  };
  auto wfn = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    Multivector<U, N> m;
    m[0b01] = sin(y[0]) * y[1];
    m[0b10] = y[0] * y[0] - y[1];
    return m;
  };
  const MetricField<N> g(Extensor11Field<N>(gfn), 1);
  const Vector<double, N> x{0.4, 0.2};

  auto flux = [&](std::size_t i) {
    return [&, i](const Vector<double, N>& y) {
      const auto e = oracle::to_eigen(gfn(y));
      const auto gi = e.inverse();
      const double s = std::sqrt(std::abs(e.determinant()));
      const auto w = wfn(y);
      return s * (gi(i, 0) * w[0b01] + gi(i, 1) * w[0b10]);
    };
  };
  const double s = std::sqrt(std::abs(oracle::to_eigen(gfn(x)).determinant()));
  double div = 0;
  for (std::size_t i = 0; i < N; ++i) div += oracle::central<N>(flux(i), x, i, 1e-5);
  const double expected = -div / s;

  const auto closed = delta_metric(g, wfn, x);
  const auto definitional = delta_metric_definitional(MetricHodge<N>(g), wfn, x);
  EXPECT_NEAR(closed[0], expected, 1e-8);
  EXPECT_NEAR(definitional[0], expected, 1e-8);
  EXPECT_TRUE(is_zero(closed.grade(1) + closed.grade(2), 1e-13));
}

TEST(Hodge, ConstantDiagonalMetricCoderivative) {
  using MV = Multivector<double, 2>;
  const auto g = oracle::constant_metric<2>(oracle::diag<2>({4.0, 9.0}), 0);
  auto x1e1 = [](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    return Multivector<U, 2>::blade(0b01, y[0]);
  };
  EXPECT_TRUE(approx_equal(delta_metric(g, x1e1, Vector<double, 2>{0.5, 0.5}), MV::scalar(-0.25), 1e-14));
}
