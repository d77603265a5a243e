#pragma once

/**
 * @file multivector.hpp
 * @brief Dense Grassmann/Clifford algebra of R^N over the Euclidean fiducial frame.
 *
 * Coefficients are indexed by basis-blade bitmask: bit mu set means b_{mu+1}
 * is a factor, and every basis blade is stored in ascending index order.
 * All products here use the canonical (Euclidean) scalar product
 * b_mu . b_nu = delta_{mu nu}; metric products live in extensor.hpp.
 */

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "excalc/linalg.hpp"
#include "excalc/scalar.hpp"

namespace excalc {

using BladeMask = std::uint32_t;

inline constexpr std::size_t kMaxDimension = 8;

namespace detail {

/// Sign of e_a e_b = sign * e_{a^b} in a Euclidean algebra.
constexpr int reorder_sign(BladeMask a, BladeMask b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

template <std::size_t N>
const std::vector<std::int8_t>& sign_table() {
  static const std::vector<std::int8_t> table = [] {
    constexpr std::size_t size = std::size_t{1} << N;
    std::vector<std::int8_t> t(size * size);
    for (BladeMask a = 0; a < size; ++a)
      for (BladeMask b = 0; b < size; ++b)
        t[a * size + b] = static_cast<std::int8_t>(reorder_sign(a, b));
    return t;
  }();
  return table;
}

template <class T>
inline void accumulate(T& acc, int sign, const T& x, const T& y) {
  if (sign > 0)
    acc += x * y;
  else
    acc -= x * y;
}

}  // namespace detail

inline int grade_of(BladeMask m) { return std::popcount(m); }

template <class T, std::size_t N>
class Multivector {
  static_assert(N >= 1 && N <= kMaxDimension, "dimension must lie in [1, 8]");

 public:
  using scalar_type = T;
  static constexpr std::size_t dimension = N;
  static constexpr std::size_t size = std::size_t{1} << N;
  static constexpr BladeMask pseudoscalar_mask = static_cast<BladeMask>(size - 1);

  Multivector() = default;

  static Multivector scalar(const T& s) {
    Multivector m;
    m.c_[0] = s;
    return m;
  }
  static Multivector blade(BladeMask mask, const T& coeff = T(1.0)) {
    Multivector m;
    m.c_[mask] = coeff;
    return m;
  }
  /// b_{mu+1} for a zero-based axis index.
  static Multivector basis_vector(std::size_t mu) { return blade(BladeMask{1} << mu); }
  static Multivector vector(const Vector<T, N>& v) {
    Multivector m;
    for (std::size_t mu = 0; mu < N; ++mu) m.c_[BladeMask{1} << mu] = v[mu];
    return m;
  }
  /// Canonical pseudoscalar b_1 ^ ... ^ b_N.
  static Multivector pseudoscalar(const T& coeff = T(1.0)) { return blade(pseudoscalar_mask, coeff); }

  T& operator[](BladeMask m) { return c_[m]; }
  const T& operator[](BladeMask m) const { return c_[m]; }
  const std::array<T, size>& coeffs() const { return c_; }
  std::array<T, size>& coeffs() { return c_; }

  /// <X>_k
  Multivector grade(int k) const {
    Multivector r;
    for (BladeMask m = 0; m < size; ++m)
      if (grade_of(m) == k) r.c_[m] = c_[m];
    return r;
  }
  T scalar_part() const { return c_[0]; }
  Vector<T, N> vector_part() const {
    Vector<T, N> v;
    for (std::size_t mu = 0; mu < N; ++mu) v[mu] = c_[BladeMask{1} << mu];
    return v;
  }

  Multivector& operator+=(const Multivector& o) {
    for (std::size_t k = 0; k < size; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (std::size_t k = 0; k < size; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Multivector& operator*=(const T& s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }
  template <class U = T>
    requires(!std::same_as<U, double>)
  Multivector& operator*=(double s) {
    for (auto& x : c_) x = x * s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
  friend Multivector operator*(const T& s, Multivector a) { return a *= s; }
  template <class U = T>
    requires(!std::same_as<U, double>)
  friend Multivector operator*(Multivector a, double s) {
    return a *= s;
  }
  template <class U = T>
    requires(!std::same_as<U, double>)
  friend Multivector operator*(double s, Multivector a) {
    return a *= s;
  }

 private:
  std::array<T, size> c_{};
};

// ---------------------------------------------------------------------------
// canonical products

template <class T, std::size_t N>
Multivector<T, N> wedge(const Multivector<T, N>& x, const Multivector<T, N>& y) {
  constexpr std::size_t S = Multivector<T, N>::size;
  const auto& sign = detail::sign_table<N>();
  Multivector<T, N> r;
  for (BladeMask a = 0; a < S; ++a)
    for (BladeMask b = 0; b < S; ++b)
      if ((a & b) == 0) detail::accumulate(r[a | b], sign[a * S + b], x[a], y[b]);
  return r;
}

/// Euclidean geometric product.
template <class T, std::size_t N>
Multivector<T, N> clifford(const Multivector<T, N>& x, const Multivector<T, N>& y) {
  constexpr std::size_t S = Multivector<T, N>::size;
  const auto& sign = detail::sign_table<N>();
  Multivector<T, N> r;
  for (BladeMask a = 0; a < S; ++a)
    for (BladeMask b = 0; b < S; ++b) detail::accumulate(r[a ^ b], sign[a * S + b], x[a], y[b]);
  return r;
}

/// X _| Y: the grade |B|-|A| part of each blade product, nonzero only for A subset of B.
template <class T, std::size_t N>
Multivector<T, N> lcontract(const Multivector<T, N>& x, const Multivector<T, N>& y) {
  constexpr std::size_t S = Multivector<T, N>::size;
  const auto& sign = detail::sign_table<N>();
  Multivector<T, N> r;
  for (BladeMask a = 0; a < S; ++a)
    for (BladeMask b = 0; b < S; ++b)
      if ((a & b) == a) detail::accumulate(r[a ^ b], sign[a * S + b], x[a], y[b]);
  return r;
}

template <class T, std::size_t N>
Multivector<T, N> rcontract(const Multivector<T, N>& x, const Multivector<T, N>& y) {
  constexpr std::size_t S = Multivector<T, N>::size;
  const auto& sign = detail::sign_table<N>();
  Multivector<T, N> r;
  for (BladeMask a = 0; a < S; ++a)
    for (BladeMask b = 0; b < S; ++b)
      if ((a & b) == b) detail::accumulate(r[a ^ b], sign[a * S + b], x[a], y[b]);
  return r;
}

/// v ^ Y for a grade-1 v given by its components.
template <class T, std::size_t N>
Multivector<T, N> wedge(const Vector<T, N>& v, const Multivector<T, N>& y) {
  constexpr std::size_t S = Multivector<T, N>::size;
  Multivector<T, N> r;
  for (std::size_t j = 0; j < N; ++j) {
    const BladeMask a = BladeMask{1} << j;
    const BladeMask below = a - 1;
    for (BladeMask b = 0; b < S; ++b)
      if ((a & b) == 0) detail::accumulate(r[a | b], (std::popcount(b & below) & 1) ? -1 : 1, v[j], y[b]);
  }
  return r;
}

/// v _| Y for a grade-1 v given by its components.
template <class T, std::size_t N>
Multivector<T, N> lcontract(const Vector<T, N>& v, const Multivector<T, N>& y) {
  constexpr std::size_t S = Multivector<T, N>::size;
  Multivector<T, N> r;
  for (std::size_t j = 0; j < N; ++j) {
    const BladeMask a = BladeMask{1} << j;
    const BladeMask below = a - 1;
    for (BladeMask b = 0; b < S; ++b)
      if (a & b) detail::accumulate(r[a ^ b], (std::popcount(b & below) & 1) ? -1 : 1, v[j], y[b]);
  }
  return r;
}

/// b_mu ^ Y
template <class T, std::size_t N>
Multivector<T, N> wedge_basis(std::size_t mu, const Multivector<T, N>& y) {
  const BladeMask a = BladeMask{1} << mu;
  const BladeMask below = a - 1;
  Multivector<T, N> r;
  for (BladeMask b = 0; b < Multivector<T, N>::size; ++b)
    if ((a & b) == 0) r[a | b] = (std::popcount(b & below) & 1) ? -y[b] : y[b];
  return r;
}

/// b_mu _| Y
template <class T, std::size_t N>
Multivector<T, N> lcontract_basis(std::size_t mu, const Multivector<T, N>& y) {
  const BladeMask a = BladeMask{1} << mu;
  const BladeMask below = a - 1;
  Multivector<T, N> r;
  for (BladeMask b = 0; b < Multivector<T, N>::size; ++b)
    if (a & b) r[a ^ b] = (std::popcount(b & below) & 1) ? -y[b] : y[b];
  return r;
}

/// X . Y = <reverse(X) Y>_0; blades of different grade are orthogonal.
template <class T, std::size_t N>
T scalar_product(const Multivector<T, N>& x, const Multivector<T, N>& y) {
  T r(0.0);
  for (BladeMask a = 0; a < Multivector<T, N>::size; ++a) r += x[a] * y[a];
  return r;
}

// ---------------------------------------------------------------------------
// involutions

enum class Involution { reversion, grade_involution, conjugation };

inline int involution_sign(Involution kind, int k) {
  switch (kind) {
    case Involution::reversion:
      return ((k * (k - 1) / 2) & 1) ? -1 : 1;
    case Involution::grade_involution:
      return (k & 1) ? -1 : 1;
    case Involution::conjugation:
      return ((k * (k + 1) / 2) & 1) ? -1 : 1;
  }
  return 1;
}

template <class T, std::size_t N>
Multivector<T, N> involution(Multivector<T, N> x, Involution kind) {
  for (BladeMask a = 0; a < Multivector<T, N>::size; ++a)
    if (involution_sign(kind, grade_of(a)) < 0) x[a] = -x[a];
  return x;
}
template <class T, std::size_t N>
Multivector<T, N> reverse(const Multivector<T, N>& x) { return involution(x, Involution::reversion); }
template <class T, std::size_t N>
Multivector<T, N> grade_involution(const Multivector<T, N>& x) {
  return involution(x, Involution::grade_involution);
}
template <class T, std::size_t N>
Multivector<T, N> conjugate(const Multivector<T, N>& x) { return involution(x, Involution::conjugation); }

// ---------------------------------------------------------------------------
// comparison, conversion, rendering

/// Largest |coefficient| including every derivative component.
template <class T, std::size_t N>
double max_abs(const Multivector<T, N>& x) {
  double m = 0.0;
  for (const auto& c : x.coeffs()) m = std::max(m, max_abs(c));
  return m;
}

template <class T, std::size_t N>
Multivector<double, N> value_of(const Multivector<T, N>& x) {
  Multivector<double, N> r;
  for (BladeMask a = 0; a < Multivector<T, N>::size; ++a) r[a] = value_of(x[a]);
  return r;
}

inline constexpr double kDefaultAtol = 1e-10;

template <std::size_t N>
bool is_zero(const Multivector<double, N>& x, double atol = kDefaultAtol) {
  return max_abs(x) <= atol;
}
template <std::size_t N>
bool approx_equal(const Multivector<double, N>& x, const Multivector<double, N>& y,
                  double atol = kDefaultAtol) {
  return is_zero(x - y, atol);
}

/// Renders as `c*e{i}{j}...` terms in bitmask order, e.g. `1 + 2.5*e13`.
template <std::size_t N>
std::string to_string(const Multivector<double, N>& x, double atol = 0.0, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision);
  bool first = true;
  for (BladeMask a = 0; a < Multivector<double, N>::size; ++a) {
    double c = x[a];
    if (std::abs(c) <= atol) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    os << std::abs(c);
    if (a != 0) {
      os << "*e";
      for (std::size_t mu = 0; mu < N; ++mu)
        if (a & (BladeMask{1} << mu)) os << (mu + 1);
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace excalc
