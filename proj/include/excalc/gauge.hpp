#pragma once

/**
 * @file gauge.hpp
 * @brief Gauge covariant derivatives, Omega_0 and the gauge divergence, curl
 *        and gradient operators.
 *
 * With g = h^T eta h, the gauge pair is the h-deformation of the Levi-Civita pair:
 *
 * @code
 * Dj+_{h a}   X = h(D_a^+ h^{-1}(X))
 * Dj-_{h* a}  X = h*(D_a^- h^T(X))
 * @endcode
 *
 * Public operators take the direction d on the deformed side and solve for
 * a (a = h^{-1} d for Dj+, a = h^T d for Dj-).
 */

#include <cstddef>
#include <utility>

#include "excalc/extensor.hpp"
#include "excalc/levi_civita.hpp"

namespace excalc {

template <std::size_t N>
class GaugeStructure {
 public:
  GaugeStructure() = default;
  explicit GaugeStructure(LeviCivita<N> lc) : lc_(std::move(lc)) {}
  explicit GaugeStructure(const MetricField<N>& g) : lc_(g) {}

  const LeviCivita<N>& levi_civita() const { return lc_; }
  const MetricField<N>& metric() const { return lc_.metric(); }
  const EtaLayout<N>& layout() const { return metric().layout(); }

  template <class T>
  GaugeFactorization<T, N> factorization(const Vector<T, N>& x) const {
    try {
      return gauge_factorize(metric().g(x), layout(), metric().det_floor());
    } catch (const SignatureChange& e) {
      throw SignatureChange(e.declared_q(), e.found_q(), MetricField<N>::point(x));
    } catch (const SingularExtensor& e) {
      throw SingularExtensor("g (eigenvalue)", e.det(), MetricField<N>::point(x));
    }
  }
  template <class T>
  Matrix<T, N> h(const Vector<T, N>& x) const {
    return factorization(x).h;
  }
  template <class T>
  Matrix<T, N> eta() const {
    return eta_matrix<T, N>(layout());
  }

  /// Relative residual of h^T eta h = g at x.
  double factorization_residual(const Vector<double, N>& x) const {
    const auto g = metric().g(x);
    const auto h = this->h(x);
    return max_abs(transpose(h) * eta<double>() * h - g) / std::max(1.0, max_abs(g));
  }

  /// Dj+_{d} X with d = h a.
  template <class T, class D, class F>
  Multivector<T, N> gauge_D_plus(const Vector<D, N>& d, const F& x_field, const Vector<T, N>& x) const {
    const auto hx = h(x);
    Vector<T, N> dt;
    for (std::size_t i = 0; i < N; ++i) dt[i] = T(d[i]);
    const Vector<T, N> a = inverse(hx) * dt;
    auto pulled = [&](const auto& y) { return outermorphism(inverse(h(y)), x_field(y)); };
    return outermorphism(hx, lc_.D_plus(a, pulled, x));
  }

  /// Dj-_{d} X with d = h* a.
  template <class T, class D, class F>
  Multivector<T, N> gauge_D_minus(const Vector<D, N>& d, const F& x_field, const Vector<T, N>& x) const {
    const auto hx = h(x);
    Vector<T, N> dt;
    for (std::size_t i = 0; i < N; ++i) dt[i] = T(d[i]);
    const Vector<T, N> a = transpose(hx) * dt;
    auto pulled = [&](const auto& y) { return outermorphism(transpose(h(y)), x_field(y)); };
    return outermorphism(transpose(inverse(hx)), lc_.D_minus(a, pulled, x));
  }

  /// Dj-_{h*(b_mu)} X for every mu, with h*(b_mu).
  template <class T, class F>
  std::pair<std::array<Multivector<T, N>, N>, Matrix<T, N>> gauge_D_minus_frame(const F& x_field,
                                                                                const Vector<T, N>& x) const {
    const auto hstar = transpose(inverse(h(x)));
    auto pulled = [&](const auto& y) { return outermorphism(transpose(h(y)), x_field(y)); };
    auto d = lc_.D_minus_frame(pulled, x);
    const Outermorphism<T, N> push(hstar);
    for (auto& v : d) v = push(v);
    return {d, hstar};
  }

  /// Dj- _|_eta X = sum_mu h*(b_mu) _|_eta Dj-_{h*(b_mu)} X
  template <class T, class F>
  Multivector<T, N> gauge_div(const F& x_field, const Vector<T, N>& x) const {
    const auto [d, hstar] = gauge_D_minus_frame(x_field, x);
    const auto e = eta<T>();
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += lcontract(e * detail::col(hstar, mu), d[mu]);
    return r;
  }

  /// Dj- ^ X = sum_mu h*(b_mu) ^ Dj-_{h*(b_mu)} X
  template <class T, class F>
  Multivector<T, N> gauge_curl(const F& x_field, const Vector<T, N>& x) const {
    const auto [d, hstar] = gauge_D_minus_frame(x_field, x);
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += wedge(detail::col(hstar, mu), d[mu]);
    return r;
  }

  /// Dj-_eta X = sum_mu h*(b_mu) *_eta Dj-_{h*(b_mu)} X, in the eta Clifford algebra.
  template <class T, class F>
  Multivector<T, N> gauge_grad(const F& x_field, const Vector<T, N>& x) const {
    const auto [d, hstar] = gauge_D_minus_frame(x_field, x);
    const MetricAlgebra<T, N> alg(eta<T>());
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu)
      r += alg.clifford(Multivector<T, N>::vector(detail::col(hstar, mu)), d[mu]);
    return r;
  }

  /// Omega_0(a) = -1/2 sum_{mu,nu} eta(b_mu ^ b_nu) [a, h^{-1}(b_mu), h^{-1}(b_nu)]
  template <class T, class A>
  Multivector<T, N> Omega0(const Vector<A, N>& a, const Vector<T, N>& x) const {
    const auto gj = jet(metric().field(), x);
    const auto hj = jet([&](const auto& y) { return inverse(h(y)); }, x);
    Jet1<Vector<T, N>, N> aj{};
    for (std::size_t i = 0; i < N; ++i) aj.value[i] = T(a[i]);
    std::array<Jet1<Vector<T, N>, N>, N> cols;
    for (std::size_t mu = 0; mu < N; ++mu) {
      cols[mu].value = detail::col(hj.value, mu);
      for (std::size_t i = 0; i < N; ++i) cols[mu].d[i] = detail::col(hj.d[i], mu);
    }
    Multivector<T, N> r;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const T k = christoffel_first(gj, aj, cols[p], cols[q]) - christoffel_first(gj, aj, cols[q], cols[p]);
        r[(BladeMask{1} << p) | (BladeMask{1} << q)] = k * (-0.5 * layout()[p] * layout()[q]);
      }
    return r;
  }

  /// a . d_o X + Omega_0(a) x_eta X
  template <class T, class A, class F>
  Multivector<T, N> gauge_D_plus_omega(const Vector<A, N>& a, const F& x_field, const Vector<T, N>& x) const {
    const auto j = jet(x_field, x);
    const MetricAlgebra<T, N> alg(eta<T>());
    return directional(j, a) + alg.commutator(Omega0(a, x), j.value);
  }

  /// (1/det h) (eta h)(d_o _| (det h (h^{-1} eta)(X)))
  template <class T, class F>
  Multivector<T, N> gauge_div_closed(const F& x_field, const Vector<T, N>& x) const {
    auto inner = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      const auto hy = h(y);
      return outermorphism(inverse(hy) * eta<U>(), x_field(y)) * determinant(hy);
    };
    const auto hx = h(x);
    return outermorphism(eta<T>() * hx, div_contract(inner, x)) * (1.0 / determinant(hx));
  }

  /// h*(d_o ^ h^T(X))
  template <class T, class F>
  Multivector<T, N> gauge_curl_closed(const F& x_field, const Vector<T, N>& x) const {
    auto inner = [&](const auto& y) { return outermorphism(transpose(h(y)), x_field(y)); };
    return outermorphism(transpose(inverse(h(x))), curl(inner, x));
  }

 private:
  LeviCivita<N> lc_;
};

}  // namespace excalc
