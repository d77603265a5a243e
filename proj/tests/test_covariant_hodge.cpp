#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace excalc;

namespace {

auto metric3 = [](const auto& y) {
  using U = std::remove_cvref_t<decltype(y[0])>;
  Matrix<U, 3> m;
  m(0, 0) = 1.5 + y[1] * y[1];
  m(1, 1) = -1.0 - 0.3 * y[0];
  m(2, 2) = 2.0 + sin(y[2]);
  m(0, 2) = m(2, 0) = 0.2 * y[1];
  return m;
};

auto mv_field = [](const auto& y) {
  using U = std::remove_cvref_t<decltype(y[0])>;
  Multivector<U, 3> m;
  m[0] = y[1];
  m[0b001] = y[0] * y[2];
  m[0b100] = cos(y[1]);
  m[0b011] = y[2] * y[2];
  m[0b101] = sin(y[0]) * y[1];
  m[0b111] = y[0] - y[2];
  return m;
};

// antisymmetric in (nu, sigma)
auto skew = [](const auto& y) {
  using U = std::remove_cvref_t<decltype(y[0])>;
  ConnectionCoefficients<U, 3> c;
  for (std::size_t mu = 0; mu < 3; ++mu) {
    const U k = 0.2 * (mu + 1.0) + 0.1 * y[mu];
    c(mu, 0, 1) = k;
    c(mu, 1, 0) = -k;
    c(mu, 1, 2) = 0.5 * k * y[0];
    c(mu, 2, 1) = -0.5 * k * y[0];
  }
  return c;
};

// symmetric in (nu, sigma), so not g-compatible once added
auto symmetric = [](const auto& y) {
  using U = std::remove_cvref_t<decltype(y[0])>;
  ConnectionCoefficients<U, 3> c;
  c(0, 0, 0) = U(0.3) + y[1];
  c(1, 0, 2) = c(1, 2, 0) = U(0.2);
  return c;
};

const std::vector<Vector<double, 3>> kProbes{{0.1, 0.2, 0.3}, {-0.5, 0.4, 0.0}, {0.6, -0.3, -0.2}};

}  // namespace

TEST(CovariantHodge, NonSkewConnectionIsRejected) {
  const MetricField<3> g(Extensor11Field<3>(metric3), 1);
  const auto bad = add_skew_part(g, levi_civita_connection(g), ConnectionField<3>(symmetric));
  EXPECT_THROW(GeometricStructure<3>(g, bad, kProbes), IncompatibleConnection);
  const auto good = add_skew_part(g, levi_civita_connection(g), ConnectionField<3>(skew));
  EXPECT_NO_THROW(GeometricStructure<3>(g, good, kProbes));
  EXPECT_LT(GeometricStructure<3>(g, good, kProbes).compatibility_residual(kProbes), 1e-10);
}

TEST(CovariantHodge, FlatCoderivativeIsMinusDivergence) {
  const GeometricStructure<3> gs(oracle::constant_metric<3>(oracle::diag<3>({1.0, 1.0, 1.0}), 0));
  const Vector<double, 3> x{0.2, -0.3, 0.5};
  EXPECT_TRUE(approx_equal(gs.delta_covariant(mv_field, x), -div_contract(mv_field, x), 1e-13));
  EXPECT_TRUE(approx_equal(gs.delta_covariant_closed(mv_field, x), -div_contract(mv_field, x), 1e-13));
}

TEST(CovariantHodge, LeviCivitaCoderivativeMatchesMetricCoderivative) {
  const MetricField<3> g(Extensor11Field<3>(metric3), 1);
  const GeometricStructure<3> gs(g);
  for (const Vector<double, 3>& x : kProbes) {
    const auto expected = delta_metric(g, mv_field, x);
    EXPECT_TRUE(approx_equal(gs.delta_covariant(mv_field, x), expected, 1e-10));
    EXPECT_TRUE(approx_equal(gs.delta_covariant_closed(mv_field, x), expected, 1e-10));
  }
}

TEST(CovariantHodge, CoderivativeWithTorsionAgreesWithDivergenceForm) {
  const MetricField<3> g(Extensor11Field<3>(metric3), 1);
  const GeometricStructure<3> gs(g, add_skew_part(g, levi_civita_connection(g), ConnectionField<3>(skew)), kProbes);
  const GeometricStructure<3> lc(g);
  for (const Vector<double, 3>& x : kProbes) {
    EXPECT_TRUE(approx_equal(gs.delta_covariant(mv_field, x), gs.delta_covariant_closed(mv_field, x), 1e-10));
  }
  // torsion changes the operator itself
  const Vector<double, 3> x = kProbes[0];
  EXPECT_FALSE(approx_equal(gs.delta_covariant(mv_field, x), lc.delta_covariant(mv_field, x), 1e-6));
}

TEST(CovariantHodge, FlippedInverseBreaksTheDefinition) {
  const MetricField<3> g(Extensor11Field<3>(metric3), 1);
  GeometricStructure<3> gs(g);
  const Vector<double, 3> x = kProbes[1];
  gs.hodge().set_inverse_sign_flipped(true);
  EXPECT_TRUE(approx_equal(gs.delta_covariant(mv_field, x), -gs.delta_covariant_closed(mv_field, x), 1e-10));
}
