#pragma once

/**
 * @file calculus.hpp
 * @brief Ordinary derivative operators on multivector fields.
 *
 * Every operator takes a field (any callable accepting a point at the next
 * tower level, Field objects included) and a point x at scalar level T, and
 * returns its value at level T. The frame used for all vector-derivative
 * expansions is the fiducial one, which is self-reciprocal.
 */

#include <cstddef>

#include "excalc/field.hpp"
#include "excalc/multivector.hpp"

namespace excalc {

/// a . d_o X at x
template <class T, std::size_t N, class F, class A>
auto dir_deriv(const Vector<A, N>& a, const F& x_field, const Vector<T, N>& x) {
  return directional(jet(x_field, x), a);
}

/// d_o ^ X = sum_mu b_mu ^ (b_mu . d_o X)
template <class T, std::size_t N, class F>
Multivector<T, N> curl(const F& x_field, const Vector<T, N>& x) {
  const auto j = jet(x_field, x);
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu) r += wedge_basis(mu, j.d[mu]);
  return r;
}

/// d_o _| X
template <class T, std::size_t N, class F>
Multivector<T, N> div_contract(const F& x_field, const Vector<T, N>& x) {
  const auto j = jet(x_field, x);
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu) r += lcontract_basis(mu, j.d[mu]);
  return r;
}

/// d_o X = sum_mu b_mu (b_mu . d_o X), Euclidean Clifford product.
template <class T, std::size_t N, class F>
Multivector<T, N> gradient(const F& x_field, const Vector<T, N>& x) {
  const auto j = jet(x_field, x);
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu) r += clifford(Multivector<T, N>::basis_vector(mu), j.d[mu]);
  return r;
}

/// Divergence of a vector field, d_o . V.
template <class T, std::size_t N, class F>
T divergence(const F& v_field, const Vector<T, N>& x) {
  const auto j = jet(v_field, x);
  T r(0.0);
  for (std::size_t mu = 0; mu < N; ++mu) r += j.d[mu][mu];
  return r;
}

enum class Combine { wedge, lcontract, dot, clifford };

/**
 * d_a * T(a) for T linear in a: sum_mu b_mu * T(b_mu).
 *
 * t is called with Vector<T, N> arguments and must return a Multivector.
 */
template <class T, std::size_t N, class Lin>
Multivector<T, N> multivector_deriv_linear(const Lin& t, Combine combine) {
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu) {
    const Multivector<T, N> y = t(unit_vector<T, N>(mu));
    switch (combine) {
      case Combine::wedge:
        r += wedge_basis(mu, y);
        break;
      case Combine::lcontract:
        r += lcontract_basis(mu, y);
        break;
      case Combine::dot:
        r[0] += y[BladeMask{1} << mu];
        break;
      case Combine::clifford:
        r += clifford(Multivector<T, N>::basis_vector(mu), y);
        break;
    }
  }
  return r;
}

/// d_a _|_m T(a) = sum_mu m(b_mu) _| T(b_mu).
template <class T, std::size_t N, class Lin>
Multivector<T, N> multivector_deriv_linear(const Lin& t, const Matrix<T, N>& m) {
  Multivector<T, N> r;
  for (std::size_t mu = 0; mu < N; ++mu) {
    Vector<T, N> mb;
    for (std::size_t i = 0; i < N; ++i) mb[i] = m(i, mu);
    r += lcontract(mb, t(unit_vector<T, N>(mu)));
  }
  return r;
}

}  // namespace excalc
