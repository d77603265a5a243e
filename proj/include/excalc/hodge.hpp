#pragma once

/**
 * @file hodge.hpp
 * @brief Volume pseudoscalars, the standard and metric Hodge extensors and the
 *        ordinary Hodge coderivatives.
 *
 * The standard volume pseudoscalar is tau = sign * b_^ with sign = +-1; the
 * metric one is tau_g = sqrt|det g| tau.
 *
 * @code
 * star X       = reverse(X) _| tau
 * star^{-1} X  = tau |_ reverse(X)
 * star_g X     = sqrt|det g| g^{-1}(reverse(X)) _| tau
 * star_g^{-1}X = (-1)^q sqrt|det g| tau |_ g^{-1}(reverse(X))
 * @endcode
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "excalc/calculus.hpp"
#include "excalc/extensor.hpp"
#include "excalc/metric.hpp"

namespace excalc {

enum class VolumeKind { standard, metric };

template <class T, std::size_t N>
struct VolumeElement {
  Multivector<T, N> tau;
  VolumeKind kind = VolumeKind::standard;
  int sign = 1;
  T sqrt_abs_det = T(1.0);  ///< 1 for the standard kind
};

/**
 * Standard volume pseudoscalar of the frame e_mu = eps(b_mu).
 *
 * Computed from the frame as sqrt(e_^ . e_^) e^^ and compared with
 * sgn(det eps) b_^.
 */
template <class T, std::size_t N>
VolumeElement<T, N> volume_standard(const Matrix<T, N>& eps, double det_floor = kDefaultDetFloor) {
  const auto b = Multivector<T, N>::pseudoscalar();
  const auto e_low = outermorphism(eps, b);
  const auto e_up = outermorphism(dual_extensor(eps, det_floor), b);
  const auto from_frame = e_up * sqrt(scalar_product(e_low, e_low));

  VolumeElement<T, N> v;
  v.sign = value_of(det_extensor(eps)) < 0 ? -1 : 1;
  v.tau = b * T(static_cast<double>(v.sign));
  if (max_abs(value_of(from_frame - v.tau)) > 1e-9)
    throw std::logic_error("frame volume pseudoscalar disagrees with sgn(det) b_^");
  return v;
}

template <class T, std::size_t N>
VolumeElement<T, N> volume_metric(const MetricAt<T, N>& m, int tau_sign = 1) {
  VolumeElement<T, N> v;
  v.kind = VolumeKind::metric;
  v.sign = tau_sign;
  v.sqrt_abs_det = m.sqrt_abs_det;
  v.tau = Multivector<T, N>::pseudoscalar(m.sqrt_abs_det * static_cast<double>(tau_sign));
  return v;
}

template <class T, std::size_t N>
Multivector<T, N> star(const Multivector<T, N>& x, const Multivector<T, N>& tau) {
  return lcontract(reverse(x), tau);
}

template <class T, std::size_t N>
Multivector<T, N> star_inv(const Multivector<T, N>& x, const Multivector<T, N>& tau) {
  return rcontract(tau, reverse(x));
}

template <class T, std::size_t N>
Multivector<T, N> standard_tau(int sign = 1) {
  return Multivector<T, N>::pseudoscalar(T(static_cast<double>(sign)));
}

/// Metric Hodge extensor field of (U, g).
template <std::size_t N>
class MetricHodge {
 public:
  MetricHodge() = default;
  explicit MetricHodge(MetricField<N> g, int tau_sign = 1) : g_(std::move(g)), tau_sign_(tau_sign) {}

  const MetricField<N>& metric() const { return g_; }
  int tau_sign() const { return tau_sign_; }

  /// Fault injection: negates star_g^{-1}. Used only by the harness self-check.
  void set_inverse_sign_flipped(bool flipped) { flip_inverse_ = flipped; }
  bool inverse_sign_flipped() const { return flip_inverse_; }

  template <class T>
  Multivector<T, N> tau_g(const Vector<T, N>& x) const {
    return volume_metric(g_.at(x), tau_sign_).tau;
  }

  template <class T>
  Multivector<T, N> star(const Multivector<T, N>& x, const MetricAt<T, N>& m) const {
    return lcontract(outermorphism(m.g_inv, reverse(x)), standard_tau<T, N>(tau_sign_)) * m.sqrt_abs_det;
  }
  template <class T>
  Multivector<T, N> star_inv(const Multivector<T, N>& x, const MetricAt<T, N>& m) const {
    const double s = g_.sign_q() * (flip_inverse_ ? -1.0 : 1.0);
    return rcontract(standard_tau<T, N>(tau_sign_), outermorphism(m.g_inv, reverse(x))) * (m.sqrt_abs_det * s);
  }
  template <class T>
  Multivector<T, N> star(const Multivector<T, N>& x, const Vector<T, N>& p) const {
    return star(x, g_.at(p));
  }
  template <class T>
  Multivector<T, N> star_inv(const Multivector<T, N>& x, const Vector<T, N>& p) const {
    return star_inv(x, g_.at(p));
  }

 private:
  MetricField<N> g_;
  int tau_sign_ = 1;
  bool flip_inverse_ = false;
};

// ---------------------------------------------------------------------------
// coderivatives

/// delta X = star^{-1}(d_o ^ (star hat(X))), by the definition.
template <class T, std::size_t N, class F>
Multivector<T, N> delta_standard(const F& x_field, const Vector<T, N>& x, int tau_sign = 1) {
  auto starred = [&](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    return star(grade_involution(x_field(y)), standard_tau<U, N>(tau_sign));
  };
  return star_inv(curl(starred, x), standard_tau<T, N>(tau_sign));
}

/// -d_o _| X
template <class T, std::size_t N, class F>
Multivector<T, N> delta_standard_closed(const F& x_field, const Vector<T, N>& x) {
  return -div_contract(x_field, x);
}

/// delta_g X = -(1/sqrt|det g|) g(d_o _| (sqrt|det g| g^{-1}(X))).
template <class T, std::size_t N, class F>
Multivector<T, N> delta_metric(const MetricField<N>& g, const F& x_field, const Vector<T, N>& x) {
  auto inner = [&](const auto& y) {
    const auto m = g.at(y);
    return outermorphism(m.g_inv, x_field(y)) * m.sqrt_abs_det;
  };
  const auto m = g.at(x);
  return -outermorphism(m.g, div_contract(inner, x)) * (1.0 / m.sqrt_abs_det);
}

/// delta_g X = star_g^{-1}(d_o ^ (star_g hat(X))), by the definition.
template <class T, std::size_t N, class F>
Multivector<T, N> delta_metric_definitional(const MetricHodge<N>& hodge, const F& x_field,
                                            const Vector<T, N>& x) {
  auto starred = [&](const auto& y) { return hodge.star(grade_involution(x_field(y)), y); };
  return hodge.star_inv(curl(starred, x), x);
}

}  // namespace excalc
