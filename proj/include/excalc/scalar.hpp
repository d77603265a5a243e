#pragma once

/**
 * @file scalar.hpp
 * @brief Forward-mode dual numbers with an N-dimensional tangent.
 *
 * Dual<T, N> carries a value and N partial derivatives of type T. Nesting
 * (Dual<Dual<double, N>, N>) gives exact second derivatives, and every
 * algorithm in the library is written against the generic scalar so that
 * the same code evaluates values, gradients and Hessians.
 *
 * The library fixes a three-level tower per dimension:
 * @code
 * Level0<N> = double
 * Level1<N> = Dual<double, N>          // value + gradient
 * Level2<N> = Dual<Dual<double, N>, N> // value + gradient + Hessian
 * @endcode
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <type_traits>

namespace excalc {

template <class T, std::size_t N>
struct Dual {
  T v{};
  std::array<T, N> d{};

  constexpr Dual() = default;
  constexpr Dual(double x) : v(x) {}  // NOLINT: implicit lift of constants
  constexpr Dual(T value, const std::array<T, N>& tangent) : v(value), d(tangent) {}

  template <class U = T>
    requires(!std::same_as<U, double>)
  constexpr Dual(const T& value) : v(value) {}  // NOLINT: lift of inner level

  Dual& operator+=(const Dual& o) {
    v += o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (std::size_t i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (std::size_t i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  Dual& operator*=(double s) {
    v *= s;
    for (auto& x : d) x *= s;
    return *this;
  }
  Dual& operator/=(const Dual& o) { return *this *= reciprocal(o); }
  Dual& operator/=(double s) { return *this *= (1.0 / s); }

  friend Dual reciprocal(const Dual& x) {
    Dual r;
    r.v = 1.0 / x.v;
    T dr = -(r.v * r.v);
    for (std::size_t i = 0; i < N; ++i) r.d[i] = dr * x.d[i];
    return r;
  }
};

template <class>
struct is_dual : std::false_type {};
template <class T, std::size_t N>
struct is_dual<Dual<T, N>> : std::true_type {};

template <class T>
concept Scalar = std::same_as<T, double> || is_dual<T>::value;

template <std::size_t N>
using Level0 = double;
template <std::size_t N>
using Level1 = Dual<double, N>;
template <std::size_t N>
using Level2 = Dual<Level1<N>, N>;

// ---------------------------------------------------------------------------
// arithmetic

template <class T, std::size_t N>
Dual<T, N> operator-(const Dual<T, N>& x) {
  Dual<T, N> r;
  r.v = -x.v;
  for (std::size_t i = 0; i < N; ++i) r.d[i] = -x.d[i];
  return r;
}
template <class T, std::size_t N>
Dual<T, N> operator+(Dual<T, N> a, const Dual<T, N>& b) { return a += b; }
template <class T, std::size_t N>
Dual<T, N> operator-(Dual<T, N> a, const Dual<T, N>& b) { return a -= b; }
template <class T, std::size_t N>
Dual<T, N> operator*(Dual<T, N> a, const Dual<T, N>& b) { return a *= b; }
template <class T, std::size_t N>
Dual<T, N> operator/(Dual<T, N> a, const Dual<T, N>& b) { return a /= b; }

template <class T, std::size_t N>
Dual<T, N> operator+(Dual<T, N> a, double s) { a.v += s; return a; }
template <class T, std::size_t N>
Dual<T, N> operator+(double s, Dual<T, N> a) { a.v += s; return a; }
template <class T, std::size_t N>
Dual<T, N> operator-(Dual<T, N> a, double s) { a.v -= s; return a; }
template <class T, std::size_t N>
Dual<T, N> operator-(double s, const Dual<T, N>& a) { return (-a) + s; }
template <class T, std::size_t N>
Dual<T, N> operator*(Dual<T, N> a, double s) { return a *= s; }
template <class T, std::size_t N>
Dual<T, N> operator*(double s, Dual<T, N> a) { return a *= s; }
template <class T, std::size_t N>
Dual<T, N> operator/(Dual<T, N> a, double s) { return a /= s; }
template <class T, std::size_t N>
Dual<T, N> operator/(double s, const Dual<T, N>& a) { return reciprocal(a) * s; }

// ---------------------------------------------------------------------------
// inspection

inline double value_of(double x) { return x; }
template <class T, std::size_t N>
double value_of(const Dual<T, N>& x) { return value_of(x.v); }

/// Largest magnitude over the value and every derivative component.
inline double max_abs(double x) { return std::abs(x); }
template <class T, std::size_t N>
double max_abs(const Dual<T, N>& x) {
  double m = max_abs(x.v);
  for (const auto& t : x.d) m = std::max(m, max_abs(t));
  return m;
}

inline bool all_finite(double x) { return std::isfinite(x); }
template <class T, std::size_t N>
bool all_finite(const Dual<T, N>& x) {
  if (!all_finite(x.v)) return false;
  for (const auto& t : x.d)
    if (!all_finite(t)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// elementary functions, chain rule applied at each nesting level

using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

namespace detail {
template <class T, std::size_t N, class F, class DF>
Dual<T, N> chain(const Dual<T, N>& x, F f, DF df) {
  Dual<T, N> r;
  r.v = f(x.v);
  T s = df(x.v, r.v);
  for (std::size_t i = 0; i < N; ++i) r.d[i] = s * x.d[i];
  return r;
}
}  // namespace detail

template <class T, std::size_t N>
Dual<T, N> sqrt(const Dual<T, N>& x) {
  return detail::chain(x, [](const T& a) { return sqrt(a); },
                       [](const T&, const T& r) { return 0.5 / r; });
}
template <class T, std::size_t N>
Dual<T, N> exp(const Dual<T, N>& x) {
  return detail::chain(x, [](const T& a) { return exp(a); },
                       [](const T&, const T& r) { return r; });
}
template <class T, std::size_t N>
Dual<T, N> log(const Dual<T, N>& x) {
  return detail::chain(x, [](const T& a) { return log(a); },
                       [](const T& a, const T&) { return 1.0 / a; });
}
template <class T, std::size_t N>
Dual<T, N> sin(const Dual<T, N>& x) {
  return detail::chain(x, [](const T& a) { return sin(a); },
                       [](const T& a, const T&) { return cos(a); });
}
template <class T, std::size_t N>
Dual<T, N> cos(const Dual<T, N>& x) {
  return detail::chain(x, [](const T& a) { return cos(a); },
                       [](const T& a, const T&) { return -sin(a); });
}

/// |x| with the derivative of the branch selected by the sign of the value.
inline double abs_smooth(double x) { return std::abs(x); }
template <class T, std::size_t N>
Dual<T, N> abs_smooth(const Dual<T, N>& x) {
  return value_of(x) < 0.0 ? -x : x;
}

template <Scalar T>
T square(const T& x) { return x * x; }

template <Scalar T>
T ipow(T x, int k) {
  T r(1.0);
  if (k < 0) {
    x = 1.0 / x;
    k = -k;
  }
  while (k > 0) {
    if (k & 1) r = r * x;
    x = x * x;
    k >>= 1;
  }
  return r;
}

// ---------------------------------------------------------------------------
// second-order jets

/// Value, gradient and symmetrized Hessian of a scalar at a point.
template <std::size_t N>
struct Jet2Scalar {
  double value = 0.0;
  std::array<double, N> grad{};
  std::array<std::array<double, N>, N> hess{};
};

template <std::size_t N>
Jet2Scalar<N> to_jet2(const Level2<N>& x) {
  Jet2Scalar<N> j;
  j.value = x.v.v;
  for (std::size_t i = 0; i < N; ++i) j.grad[i] = 0.5 * (x.v.d[i] + x.d[i].v);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) j.hess[i][k] = 0.5 * (x.d[i].d[k] + x.d[k].d[i]);
  return j;
}

}  // namespace excalc
