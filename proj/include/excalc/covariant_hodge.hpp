#pragma once

/**
 * @file covariant_hodge.hpp
 * @brief Geometric structures (U, gamma, g) and the covariant Hodge coderivative.
 */

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "excalc/errors.hpp"
#include "excalc/hodge.hpp"
#include "excalc/levi_civita.hpp"

namespace excalc {

/**
 * gamma(a, b) = base(a, b) + g^{-1}(S_a(b)), where skew(mu, nu, sigma) holds
 * the components of S_{b_mu}(b_nu) and must be antisymmetric in (nu, sigma).
 * The result stays g-compatible when base is.
 */
template <std::size_t N>
ConnectionField<N> add_skew_part(const MetricField<N>& g, ConnectionField<N> base, ConnectionField<N> skew) {
  return ConnectionField<N>::derived([g, base, skew](const auto& x) {
    auto c = base(x);
    const auto s = skew(x);
    const auto gi = g.g_inv(x);
    for (std::size_t mu = 0; mu < N; ++mu)
      for (std::size_t nu = 0; nu < N; ++nu)
        for (std::size_t r = 0; r < N; ++r)
          for (std::size_t t = 0; t < N; ++t) c(mu, nu, r) += gi(r, t) * s(mu, nu, t);
    return c;
  });
}

/// (U, gamma, g) with the g-compatible pair built from gamma.
template <std::size_t N>
class GeometricStructure {
 public:
  GeometricStructure() = default;

  /// Levi-Civita structure.
  explicit GeometricStructure(const MetricField<N>& g, int tau_sign = 1)
      : pair_(g, levi_civita_connection(g)), hodge_(g, tau_sign) {}

  /// General connection, probed for g-compatibility at the given points.
  GeometricStructure(const MetricField<N>& g, ConnectionField<N> gamma, const std::vector<Vector<double, N>>& probes,
                     double tol = 1e-8, int tau_sign = 1)
      : pair_(g, std::move(gamma)), hodge_(g, tau_sign) {
    const double r = compatibility_residual(probes);
    if (!(r <= tol)) throw IncompatibleConnection(r, tol);
  }

  const DcdoPair<N>& pair() const { return pair_; }
  const MetricField<N>& metric() const { return pair_.metric(); }
  const MetricHodge<N>& hodge() const { return hodge_; }
  MetricHodge<N>& hodge() { return hodge_; }

  /// max over probes, fiducial directions and basis blades X of
  /// |D_a^- g(X) - g(D_a^+ X)| relative to max(1, |g|).
  double compatibility_residual(const std::vector<Vector<double, N>>& probes) const {
    double worst = 0.0;
    const auto& g = metric();
    for (const auto& p : probes) {
      const auto gp = g.g(p);
      for (BladeMask blade = 1; blade < Multivector<double, N>::size; ++blade) {
        auto lowered = [&](const auto& y) {
          using U = std::remove_cvref_t<decltype(y[0])>;
          Multivector<U, N> c;
          c[blade] = U(1.0);
          return outermorphism(g.g(y), c);
        };
        auto constant = [&](const auto& y) {
          using U = std::remove_cvref_t<decltype(y[0])>;
          return Multivector<U, N>::blade(blade, U(1.0));
        };
        const auto lhs = pair_.D_minus_frame(lowered, p);
        const auto rhs = pair_.D_plus_frame(constant, p);
        for (std::size_t mu = 0; mu < N; ++mu)
          worst = std::max(worst, max_abs(lhs[mu] - outermorphism(gp, rhs[mu])) / std::max(1.0, max_abs(gp)));
      }
    }
    return worst;
  }

  template <class T, class F>
  Multivector<T, N> cov_div(const F& x_field, const Vector<T, N>& x) const {
    return pair_.cov_div_minus(x_field, x);
  }
  template <class T, class F>
  Multivector<T, N> cov_curl(const F& x_field, const Vector<T, N>& x) const {
    return pair_.cov_curl_minus(x_field, x);
  }
  template <class T, class F>
  Multivector<T, N> cov_grad(const F& x_field, const Vector<T, N>& x) const {
    return pair_.cov_grad_minus(x_field, x);
  }

  /// Delta_g X = star_g^{-1}(D^- ^ (star_g hat(X))), by the definition.
  template <class T, class F>
  Multivector<T, N> delta_covariant(const F& x_field, const Vector<T, N>& x) const {
    auto starred = [&](const auto& y) { return hodge_.star(grade_involution(x_field(y)), y); };
    return hodge_.star_inv(pair_.cov_curl_minus(starred, x), x);
  }

  /// -D^- _|_{g^-1} X
  template <class T, class F>
  Multivector<T, N> delta_covariant_closed(const F& x_field, const Vector<T, N>& x) const {
    return -pair_.cov_div_minus(x_field, x);
  }

 private:
  DcdoPair<N> pair_;
  MetricHodge<N> hodge_;
};

}  // namespace excalc
