#pragma once

/**
 * @file metric.hpp
 * @brief Metric fields: a symmetric non-singular Extensor11Field together with
 *        its declared signature and the orthogonal metric layout used by gauges.
 */

#include <cmath>
#include <cstddef>
#include <vector>

#include "excalc/errors.hpp"
#include "excalc/extensor.hpp"
#include "excalc/field.hpp"

namespace excalc {

/// g, g^{-1} and det[g] at one point.
template <class T, std::size_t N>
struct MetricAt {
  Matrix<T, N> g;
  Matrix<T, N> g_inv;
  T det;
  T sqrt_abs_det;
};

template <std::size_t N>
class MetricField {
 public:
  MetricField() = default;
  MetricField(Extensor11Field<N> g, EtaLayout<N> layout, double det_floor = kDefaultDetFloor)
      : g_(std::move(g)), layout_(layout), q_(negative_count(layout)), det_floor_(det_floor) {}
  MetricField(Extensor11Field<N> g, int q, double det_floor = kDefaultDetFloor)
      : MetricField(std::move(g), negatives_last<N>(q), det_floor) {}

  int q() const { return q_; }
  int p() const { return static_cast<int>(N) - q_; }
  /// (-1)^q
  double sign_q() const { return (q_ & 1) ? -1.0 : 1.0; }
  const EtaLayout<N>& layout() const { return layout_; }
  double det_floor() const { return det_floor_; }
  const Extensor11Field<N>& field() const { return g_; }

  template <class T>
  Matrix<T, N> g(const Vector<T, N>& x) const {
    return g_(x);
  }

  template <class T>
  MetricAt<T, N> at(const Vector<T, N>& x) const {
    return at_matrix(g_(x), x);
  }

  /// MetricAt from an already evaluated g; x is only used for diagnostics.
  template <class T>
  MetricAt<T, N> at_matrix(const Matrix<T, N>& g, const Vector<T, N>& x) const {
    MetricAt<T, N> m;
    m.g = g;
    m.det = determinant(m.g);
    const double d = value_of(m.det);
    if (!(std::abs(d) >= det_floor_)) throw SingularExtensor("g", d, point(x));
    m.g_inv = inverse(m.g);
    m.sqrt_abs_det = sqrt(abs_smooth(m.det));
    return m;
  }

  template <class T>
  Matrix<T, N> g_inv(const Vector<T, N>& x) const {
    return at(x).g_inv;
  }

  template <class T>
  T sqrt_abs_det(const Vector<T, N>& x) const {
    return at(x).sqrt_abs_det;
  }

  /// Symmetry, determinant floor and signature at a sample point.
  void check(const Vector<double, N>& x, double symmetry_tol = 1e-10) const {
    const Matrix<double, N> m = g_(x);
    if (max_abs(m - transpose(m)) > symmetry_tol * std::max(1.0, max_abs(m)))
      throw std::domain_error("metric is not symmetric at " + detail::format_point(point(x)));
    const double d = determinant(m);
    if (!(std::abs(d) >= det_floor_)) throw SingularExtensor("g", d, point(x));
    int found = 0;
    try {
      found = count_negative_eigenvalues(m, det_floor_);
    } catch (const SingularExtensor& e) {
      throw SingularExtensor("g (eigenvalue)", e.det(), point(x));
    }
    if (found != q_) throw SignatureChange(q_, found, point(x));
    if ((d < 0) != ((q_ & 1) == 1)) throw SignatureChange(q_, found, point(x));
  }

  template <class T>
  static std::vector<double> point(const Vector<T, N>& x) {
    const auto p = value_of(x);
    return {p.begin(), p.end()};
  }

 private:
  Extensor11Field<N> g_;
  EtaLayout<N> layout_{};
  int q_ = 0;
  double det_floor_ = kDefaultDetFloor;
};

/// eta as a constant matrix at scalar level T.
template <class T, std::size_t N>
Matrix<T, N> eta_matrix(const EtaLayout<N>& layout) {
  Matrix<T, N> e;
  for (std::size_t i = 0; i < N; ++i) e(i, i) = T(static_cast<double>(layout[i]));
  return e;
}

}  // namespace excalc
