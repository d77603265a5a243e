#pragma once

/**
 * @file levi_civita.hpp
 * @brief Christoffel operators, the Levi-Civita connection field lambda and
 *        omega_0, generalized connection maps, DCDO pairs and the Levi-Civita
 *        derivative operators.
 *
 * A connection is carried as ConnectionCoefficients, c(mu, nu) = gamma(b_mu, b_nu).
 * DcdoPair builds D_a^+ and D_a^- from any connection; LeviCivita is the
 * pair built from lambda together with the closed-form operators.
 */

#include <cstddef>
#include <optional>
#include <utility>

#include "excalc/calculus.hpp"
#include "excalc/extensor.hpp"
#include "excalc/hodge.hpp"
#include "excalc/metric.hpp"

namespace excalc {

/// g, g^{-1} and the partials d_mu g at one point.
template <class T, std::size_t N>
struct MetricJet {
  MetricAt<T, N> m;
  std::array<Matrix<T, N>, N> dg;

  /// (a . d_o g)
  template <class A>
  Matrix<T, N> along(const Vector<A, N>& a) const {
    Matrix<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += dg[mu] * T(a[mu]);
    return r;
  }
};

template <class T, std::size_t N>
MetricJet<T, N> metric_jet(const MetricField<N>& g, const Vector<T, N>& x) {
  const auto j = jet(g.field(), x);
  return {g.at_matrix(j.value, x), j.d};
}

namespace detail {
template <class T, std::size_t N>
Vector<T, N> col(const Matrix<T, N>& m, std::size_t j) {
  Vector<T, N> c;
  for (std::size_t i = 0; i < N; ++i) c[i] = m(i, j);
  return c;
}
template <class T, std::size_t N>
T bilinear(const Vector<T, N>& u, const Matrix<T, N>& m, const Vector<T, N>& v) {
  return dot(u, m * v);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Christoffel operators

/**
 * [a, b, c] in Koszul form from first-order jets of a, b, c and g:
 *
 * 1/2 ( a.d(b._g c) + b.d(a._g c) - c.d(a._g b) + [a,b]._g c - [a,c]._g b - [b,c]._g a )
 */
template <class T, std::size_t N>
T christoffel_first(const Jet1<Matrix<T, N>, N>& g, const Jet1<Vector<T, N>, N>& a,
                    const Jet1<Vector<T, N>, N>& b, const Jet1<Vector<T, N>, N>& c) {
  // d_i (u ._g v)
  auto d_dot = [&](const Jet1<Vector<T, N>, N>& u, const Jet1<Vector<T, N>, N>& v, const Vector<T, N>& w) {
    T r(0.0);
    for (std::size_t i = 0; i < N; ++i) {
      const T di = detail::bilinear(u.d[i], g.value, v.value) + detail::bilinear(u.value, g.d[i], v.value) +
                   detail::bilinear(u.value, g.value, v.d[i]);
      r += w[i] * di;
    }
    return r;
  };
  auto bracket = [&](const Jet1<Vector<T, N>, N>& u, const Jet1<Vector<T, N>, N>& v) {
    return directional(v, u.value) - directional(u, v.value);
  };
  const auto& G = g.value;
  const T s = d_dot(b, c, a.value) + d_dot(a, c, b.value) - d_dot(a, b, c.value) +
              detail::bilinear(bracket(a, b), G, c.value) - detail::bilinear(bracket(a, c), G, b.value) -
              detail::bilinear(bracket(b, c), G, a.value);
  return s * 0.5;
}

/// [a, b, c] for vector fields given as callables.
template <class T, std::size_t N, class A, class B, class C>
T christoffel_first(const MetricField<N>& g, const A& a, const B& b, const C& c, const Vector<T, N>& x) {
  return christoffel_first(jet(g.field(), x), jet(a, x), jet(b, x), jet(c, x));
}

/// {c; a, b} = [a, b, g^{-1}(c)]
template <class T, std::size_t N, class A, class B, class C>
T christoffel_second(const MetricField<N>& g, const A& a, const B& b, const C& c, const Vector<T, N>& x) {
  auto raised = [&](const auto& y) { return g.g_inv(y) * c(y); };
  return christoffel_first(g, a, b, raised, x);
}

// ---------------------------------------------------------------------------
// connection field

/// omega_0(a) = -1/4 sum_{mu,nu} g^{-1}(b_mu ^ b_nu) a.((b_mu.d g)(b_nu) - (b_nu.d g)(b_mu))
template <class T, std::size_t N, class A>
Multivector<T, N> omega0(const MetricJet<T, N>& j, const Vector<A, N>& a) {
  const auto& gi = j.m.g_inv;
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu)
    for (std::size_t nu = 0; nu < N; ++nu) {
      if (mu == nu) continue;
      T k(0.0);
      for (std::size_t i = 0; i < N; ++i) k += a[i] * (j.dg[mu](i, nu) - j.dg[nu](i, mu));
      k = k * -0.25;
      for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = p + 1; q < N; ++q)
          r[(BladeMask{1} << p) | (BladeMask{1} << q)] += k * (gi(p, mu) * gi(q, nu) - gi(q, mu) * gi(p, nu));
    }
  return r;
}

/// B x_g b for a bivector B, i.e. -g(b) _| B.
template <class T, std::size_t N>
Vector<T, N> bivector_commutator(const Multivector<T, N>& bivector, const Matrix<T, N>& g, const Vector<T, N>& b) {
  return (-lcontract(g * b, bivector)).vector_part();
}

/// lambda(a, b) = 1/2 g^{-1}((a.d g)(b)) + omega_0(a) x_g b
template <class T, std::size_t N, class A, class B>
Vector<T, N> connection_lambda(const MetricJet<T, N>& j, const Vector<A, N>& a, const Vector<B, N>& b) {
  Vector<T, N> bt;
  for (std::size_t i = 0; i < N; ++i) bt[i] = T(b[i]);
  return scaled(j.m.g_inv * (j.along(a) * bt), T(0.5)) + bivector_commutator(omega0(j, a), j.m.g, bt);
}

/// Levi-Civita coefficients lambda(b_mu, b_nu) at x.
template <class T, std::size_t N>
ConnectionCoefficients<T, N> levi_civita_coefficients(const MetricField<N>& g, const Vector<T, N>& x) {
  const auto j = metric_jet(g, x);
  ConnectionCoefficients<T, N> c;
  for (std::size_t mu = 0; mu < N; ++mu) {
    const auto bmu = unit_vector<T, N>(mu);
    const auto w = omega0(j, bmu);
    const Matrix<T, N> half = j.m.g_inv * j.dg[mu] * T(0.5);
    for (std::size_t nu = 0; nu < N; ++nu) {
      const auto v = detail::col(half, nu) + bivector_commutator(w, j.m.g, unit_vector<T, N>(nu));
      for (std::size_t s = 0; s < N; ++s) c(mu, nu, s) = v[s];
    }
  }
  return c;
}

template <std::size_t N>
ConnectionField<N> levi_civita_connection(const MetricField<N>& g) {
  return ConnectionField<N>::derived([g](const auto& x) { return levi_civita_coefficients(g, x); });
}

/// Generalized of a linear map L (column mu = L(b_mu)): sum_mu L(b_mu) ^ (b_mu _| X).
template <class T, std::size_t N>
Multivector<T, N> generalized(const Matrix<T, N>& l, const Multivector<T, N>& x) {
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu) r += wedge(detail::col(l, mu), lcontract_basis(mu, x));
  return r;
}

template <class T, std::size_t N>
Multivector<T, N> generalized_adjoint(const Matrix<T, N>& l, const Multivector<T, N>& x) {
  return generalized(transpose(l), x);
}

// ---------------------------------------------------------------------------
// DCDO pairs

/// D_a^+ X = a.d_o X + Gamma_a(X),  D_a^- X = a.d_o X - Gamma_a^T(X).
template <std::size_t N>
class DcdoPair {
 public:
  DcdoPair() = default;
  DcdoPair(MetricField<N> g, ConnectionField<N> gamma) : g_(std::move(g)), gamma_(std::move(gamma)) {}

  const MetricField<N>& metric() const { return g_; }
  const ConnectionField<N>& connection() const { return gamma_; }

  template <class T, class A, class F>
  Multivector<T, N> D_plus(const Vector<A, N>& a, const F& x_field, const Vector<T, N>& x) const {
    const auto j = jet(x_field, x);
    return directional(j, a) + generalized(gamma_(x).along(a), j.value);
  }

  template <class T, class A, class F>
  Multivector<T, N> D_minus(const Vector<A, N>& a, const F& x_field, const Vector<T, N>& x) const {
    const auto j = jet(x_field, x);
    return directional(j, a) - generalized_adjoint(gamma_(x).along(a), j.value);
  }

  /// D_{b_mu}^+ X for every fiducial direction.
  template <class T, class F>
  std::array<Multivector<T, N>, N> D_plus_frame(const F& x_field, const Vector<T, N>& x) const {
    const auto j = jet(x_field, x);
    const auto c = gamma_(x);
    std::array<Multivector<T, N>, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r[mu] = j.d[mu] + generalized(c.along_basis(mu), j.value);
    return r;
  }

  template <class T, class F>
  std::array<Multivector<T, N>, N> D_minus_frame(const F& x_field, const Vector<T, N>& x) const {
    const auto j = jet(x_field, x);
    const auto c = gamma_(x);
    std::array<Multivector<T, N>, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r[mu] = j.d[mu] - generalized_adjoint(c.along_basis(mu), j.value);
    return r;
  }

  /// D^+ _| X = sum_mu b_mu _| D_{b_mu}^+ X
  template <class T, class F>
  Multivector<T, N> cov_div_plus(const F& x_field, const Vector<T, N>& x) const {
    const auto d = D_plus_frame(x_field, x);
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += lcontract_basis(mu, d[mu]);
    return r;
  }

  /// D^- _|_{g^-1} X = sum_mu g^{-1}(b_mu) _| D_{b_mu}^- X
  template <class T, class F>
  Multivector<T, N> cov_div_minus(const F& x_field, const Vector<T, N>& x) const {
    const auto d = D_minus_frame(x_field, x);
    const auto gi = g_.g_inv(x);
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += lcontract(detail::col(gi, mu), d[mu]);
    return r;
  }

  /// D^- ^ X = sum_mu b_mu ^ D_{b_mu}^- X
  template <class T, class F>
  Multivector<T, N> cov_curl_minus(const F& x_field, const Vector<T, N>& x) const {
    const auto d = D_minus_frame(x_field, x);
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += wedge_basis(mu, d[mu]);
    return r;
  }

  /// D^-_{g^-1} X = sum_mu b_mu *_{g^-1} D_{b_mu}^- X, in the g^{-1} Clifford algebra.
  template <class T, class F>
  Multivector<T, N> cov_grad_minus(const F& x_field, const Vector<T, N>& x) const {
    const auto d = D_minus_frame(x_field, x);
    const MetricAlgebra<T, N> alg(g_.g_inv(x));
    Multivector<T, N> r;
    for (std::size_t mu = 0; mu < N; ++mu) r += alg.clifford(Multivector<T, N>::basis_vector(mu), d[mu]);
    return r;
  }

 protected:
  MetricField<N> g_;
  ConnectionField<N> gamma_;
};

/// The Levi-Civita geometric structure (U, lambda, g).
template <std::size_t N>
class LeviCivita : public DcdoPair<N> {
 public:
  LeviCivita() = default;
  explicit LeviCivita(MetricField<N> g) : DcdoPair<N>(g, levi_civita_connection(g)) {}

  template <class T, class A>
  Multivector<T, N> omega0(const Vector<A, N>& a, const Vector<T, N>& x) const {
    return excalc::omega0(metric_jet(this->g_, x), a);
  }

  template <class T, class A, class B>
  Vector<T, N> lambda(const Vector<A, N>& a, const Vector<B, N>& b, const Vector<T, N>& x) const {
    return connection_lambda(metric_jet(this->g_, x), a, b);
  }

  /// (1/sqrt|det g|) d_o _| (sqrt|det g| X)
  template <class T, class F>
  Multivector<T, N> cov_div_plus_closed(const F& x_field, const Vector<T, N>& x) const {
    auto weighted = [&](const auto& y) { return x_field(y) * this->g_.sqrt_abs_det(y); };
    return div_contract(weighted, x) * (1.0 / this->g_.sqrt_abs_det(x));
  }

  /// (1/sqrt|det g|) g(d_o _| (sqrt|det g| g^{-1}(X)))
  template <class T, class F>
  Multivector<T, N> cov_div_minus_closed(const F& x_field, const Vector<T, N>& x) const {
    auto inner = [&](const auto& y) {
      const auto m = this->g_.at(y);
      return outermorphism(m.g_inv, x_field(y)) * m.sqrt_abs_det;
    };
    const auto m = this->g_.at(x);
    return outermorphism(m.g, div_contract(inner, x)) * (1.0 / m.sqrt_abs_det);
  }
};

// ---------------------------------------------------------------------------
// Lagrangian identities

enum class LagrangianIdentity { curl_div, div_curl, grad_grad };

template <class T>
struct IdentitySides {
  T lhs;
  T rhs;
};

/**
 * Both sides of the three Lagrangian identities at x:
 *
 * curl_div:  (d^X)._{g^-1}Y + X._{g^-1}(D^-_|Y)     = (1/s) d_o . (s d_n (n ^ X)._{g^-1} Y)
 * div_curl:  (D^-_|X)._{g^-1}Y + X._{g^-1}(d^Y)     = (1/s) d_o . (s d_n (n _|_{g^-1} X)._{g^-1} Y)
 * grad_grad: (D^-X)._{g^-1}Y + X._{g^-1}(D^-Y)      = (1/s) d_o . (s d_n (n *_{g^-1} X)._{g^-1} Y)
 *
 * with s = sqrt|det g|.
 */
template <class T, std::size_t N, class FX, class FY>
IdentitySides<T> lagrangian_sides(const LeviCivita<N>& lc, LagrangianIdentity which, const FX& xf, const FY& yf,
                                  const Vector<T, N>& x) {
  const MetricField<N>& g = lc.metric();
  const auto m = g.at(x);
  auto gdot = [](const auto& gi, const auto& u, const auto& v) { return scalar_product(outermorphism(gi, u), v); };
  const auto X = xf(x);
  const auto Y = yf(x);

  T lhs(0.0);
  switch (which) {
    case LagrangianIdentity::curl_div:
      lhs = gdot(m.g_inv, curl(xf, x), Y) + gdot(m.g_inv, X, lc.cov_div_minus(yf, x));
      break;
    case LagrangianIdentity::div_curl:
      lhs = gdot(m.g_inv, lc.cov_div_minus(xf, x), Y) + gdot(m.g_inv, X, curl(yf, x));
      break;
    case LagrangianIdentity::grad_grad:
      lhs = gdot(m.g_inv, lc.cov_grad_minus(xf, x), Y) + gdot(m.g_inv, X, lc.cov_grad_minus(yf, x));
      break;
  }

  auto v_field = [&](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    const auto my = g.at(y);
    const auto xv = xf(y);
    const auto yv = yf(y);
    std::optional<MetricAlgebra<U, N>> alg;
    if (which == LagrangianIdentity::grad_grad) alg.emplace(my.g_inv);
    Vector<U, N> v;
    for (std::size_t mu = 0; mu < N; ++mu) {
      Multivector<U, N> nx;
      switch (which) {
        case LagrangianIdentity::curl_div:
          nx = wedge_basis(mu, xv);
          break;
        case LagrangianIdentity::div_curl:
          nx = lcontract(detail::col(my.g_inv, mu), xv);
          break;
        case LagrangianIdentity::grad_grad:
          nx = alg->clifford(Multivector<U, N>::basis_vector(mu), xv);
          break;
      }
      v[mu] = gdot(my.g_inv, nx, yv) * my.sqrt_abs_det;
    }
    return v;
  };
  const T rhs = divergence(v_field, x) / m.sqrt_abs_det;
  return {lhs, rhs};
}

template <std::size_t N, class FX, class FY>
double lagrangian_identity_residual(const LeviCivita<N>& lc, LagrangianIdentity which, const FX& xf, const FY& yf,
                                   const Vector<double, N>& x) {
  const auto s = lagrangian_sides(lc, which, xf, yf, x);
  return std::abs(s.lhs - s.rhs) / std::max({1.0, std::abs(s.lhs), std::abs(s.rhs)});
}

}  // namespace excalc
