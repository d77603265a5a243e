#pragma once

// Small fixed-size dense vectors and matrices over any tower scalar.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "excalc/scalar.hpp"

namespace excalc {

template <class T, std::size_t N>
using Vector = std::array<T, N>;

/// Component matrix of a (1,1)-extensor: column j holds the image of b_j.
template <class T, std::size_t N>
struct Matrix {
  std::array<T, N * N> a{};

  T& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1.0);
    return m;
  }
  static Matrix diagonal(const Vector<T, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a[k] += o.a[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) a[k] -= o.a[k];
    return *this;
  }
  template <class S>
  Matrix& operator*=(const S& s) {
    for (auto& x : a) x = x * s;
    return *this;
  }
};

template <class T, std::size_t N>
Matrix<T, N> operator+(Matrix<T, N> x, const Matrix<T, N>& y) { return x += y; }
template <class T, std::size_t N>
Matrix<T, N> operator-(Matrix<T, N> x, const Matrix<T, N>& y) { return x -= y; }
template <class T, std::size_t N, class S>
Matrix<T, N> operator*(Matrix<T, N> x, const S& s) { return x *= s; }

template <class T, std::size_t N>
Matrix<T, N> operator*(const Matrix<T, N>& x, const Matrix<T, N>& y) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const T& xik = x(i, k);
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

template <class T, std::size_t N>
Vector<T, N> operator*(const Matrix<T, N>& m, const Vector<T, N>& v) {
  Vector<T, N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
  return r;
}

template <class T, std::size_t N>
Matrix<T, N> transpose(const Matrix<T, N>& m) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = m(j, i);
  return r;
}

template <class T, std::size_t N>
T dot(const Vector<T, N>& x, const Vector<T, N>& y) {
  T r(0.0);
  for (std::size_t i = 0; i < N; ++i) r += x[i] * y[i];
  return r;
}

template <class T, std::size_t N>
Vector<T, N> unit_vector(std::size_t mu) {
  Vector<T, N> e{};
  e[mu] = T(1.0);
  return e;
}

template <class T, std::size_t N, class S>
Vector<T, N> scaled(Vector<T, N> v, const S& s) {
  for (auto& x : v) x = x * s;
  return v;
}

template <class T, std::size_t N>
Vector<T, N> operator+(Vector<T, N> x, const Vector<T, N>& y) {
  for (std::size_t i = 0; i < N; ++i) x[i] += y[i];
  return x;
}
template <class T, std::size_t N>
Vector<T, N> operator-(Vector<T, N> x, const Vector<T, N>& y) {
  for (std::size_t i = 0; i < N; ++i) x[i] -= y[i];
  return x;
}

/// Largest |component| over every entry and every derivative level.
template <class T, std::size_t N>
double max_abs(const Matrix<T, N>& m) {
  double r = 0.0;
  for (const auto& x : m.a) r = std::max(r, max_abs(x));
  return r;
}

template <class T, std::size_t N>
Matrix<double, N> value_of(const Matrix<T, N>& m) {
  Matrix<double, N> r;
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = value_of(m.a[k]);
  return r;
}

/// Determinant by partial-pivot elimination; exact under dual arithmetic.
template <class T, std::size_t N>
T determinant(Matrix<T, N> m) {
  T det(1.0);
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(value_of(m(r, c))) > std::abs(value_of(m(piv, c)))) piv = r;
    if (value_of(m(piv, c)) == 0.0) return T(0.0);
    if (piv != c) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det = det * m(c, c);
    T inv = 1.0 / m(c, c);
    for (std::size_t r = c + 1; r < N; ++r) {
      T f = m(r, c) * inv;
      for (std::size_t j = c; j < N; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. The caller is responsible for rejecting singular input.
template <class T, std::size_t N>
Matrix<T, N> inverse(Matrix<T, N> m) {
  Matrix<T, N> inv = Matrix<T, N>::identity();
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(value_of(m(r, c))) > std::abs(value_of(m(piv, c)))) piv = r;
    if (piv != c)
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(m(c, j), m(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    T s = 1.0 / m(c, c);
    for (std::size_t j = 0; j < N; ++j) {
      m(c, j) = m(c, j) * s;
      inv(c, j) = inv(c, j) * s;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      T f = m(r, c);
      for (std::size_t j = 0; j < N; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T, std::size_t N>
T trace(const Matrix<T, N>& m) {
  T r(0.0);
  for (std::size_t i = 0; i < N; ++i) r += m(i, i);
  return r;
}

}  // namespace excalc
