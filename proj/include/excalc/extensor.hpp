#pragma once

/**
 * @file extensor.hpp
 * @brief Pointwise (1,1)-extensor algebra: outermorphisms, adjoints,
 *        determinants, metric Clifford algebras and the gauge factorization
 *        g = h^T eta h.
 *
 * Everything in this header acts on the value of an extensor at one point,
 * expressed as its component matrix over the fiducial frame. The scalar type
 * is generic, so the same code propagates first and second derivatives when
 * handed dual-valued matrices.
 */

#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "excalc/errors.hpp"
#include "excalc/linalg.hpp"
#include "excalc/multivector.hpp"
#include "excalc/scalar.hpp"

namespace excalc {

inline constexpr double kDefaultDetFloor = 1e-8;

// ---------------------------------------------------------------------------
// outermorphism

namespace detail {
template <class T, std::size_t N>
Vector<T, N> column(const Matrix<T, N>& t, std::size_t j) {
  Vector<T, N> c;
  for (std::size_t i = 0; i < N; ++i) c[i] = t(i, j);
  return c;
}
}  // namespace detail

/// Extension of a linear map to the exterior algebra, t(v1 ^ ... ^ vk) = t(v1) ^ ... ^ t(vk).
template <class T, std::size_t N>
class Outermorphism {
 public:
  explicit Outermorphism(const Matrix<T, N>& t) : images_(Multivector<T, N>::size) {
    images_[0] = Multivector<T, N>::scalar(T(1.0));
    for (BladeMask a = 1; a < Multivector<T, N>::size; ++a) {
      const int i = std::countr_zero(a);
      images_[a] = wedge(detail::column(t, i), images_[a ^ (BladeMask{1} << i)]);
    }
  }

  Multivector<T, N> operator()(const Multivector<T, N>& x) const {
    Multivector<T, N> r;
    for (BladeMask a = 0; a < Multivector<T, N>::size; ++a) {
      const auto& img = images_[a];
      for (BladeMask b = 0; b < Multivector<T, N>::size; ++b) r[b] += x[a] * img[b];
    }
    return r;
  }

  const Multivector<T, N>& image_of_blade(BladeMask a) const { return images_[a]; }

 private:
  std::vector<Multivector<T, N>> images_;
};

template <class T, std::size_t N>
Multivector<T, N> outermorphism(const Matrix<T, N>& t, const Multivector<T, N>& x) {
  return Outermorphism<T, N>(t)(x);
}

/// Metric-free adjoint, t^T(u) . v = u . t(v).
template <class T, std::size_t N>
Matrix<T, N> adjoint(const Matrix<T, N>& t) {
  return transpose(t);
}

/// The scalar with t(b_1 ^ ... ^ b_N) = det[t] b_1 ^ ... ^ b_N.
template <class T, std::size_t N>
T det_extensor(const Matrix<T, N>& t) {
  auto top = Multivector<T, N>::scalar(T(1.0));
  for (std::size_t j = N; j-- > 0;) top = wedge(detail::column(t, j), top);
  return top[Multivector<T, N>::pseudoscalar_mask];
}

/// t^{-1}, rejecting |det[t]| below the floor.
template <class T, std::size_t N>
Matrix<T, N> inverse_extensor(const Matrix<T, N>& t, double det_floor = kDefaultDetFloor,
                              const char* name = "t") {
  const double det = value_of(determinant(t));
  if (!(std::abs(det) >= det_floor)) throw SingularExtensor(name, det);
  return inverse(t);
}

/// t* = (t^T)^{-1} = (t^{-1})^T.
template <class T, std::size_t N>
Matrix<T, N> dual_extensor(const Matrix<T, N>& t, double det_floor = kDefaultDetFloor) {
  return transpose(inverse_extensor(t, det_floor, "t*"));
}

// ---------------------------------------------------------------------------
// metric Clifford algebra

enum class ProductKind { dot, contract_left, contract_right, clifford, commutator };

/**
 * Clifford algebra of the bilinear form a ._m b = m(a) . b, on the same
 * Grassmann basis as Multivector.
 *
 * The table e_A *_m e_B is built by factoring each basis blade into vectors,
 * e_i ^ R = e_i *_m R - e_i _|_m R, and recursing on the lower-grade factor.
 */
template <class T, std::size_t N>
class MetricAlgebra {
  static constexpr std::size_t S = Multivector<T, N>::size;

 public:
  explicit MetricAlgebra(const Matrix<T, N>& m) : m_(m), table_(S * S) { build(); }

  const Matrix<T, N>& metric() const { return m_; }

  /// e_A *_m e_B
  const Multivector<T, N>& blade_product(BladeMask a, BladeMask b) const { return table_[a * S + b]; }

  Multivector<T, N> clifford(const Multivector<T, N>& x, const Multivector<T, N>& y) const {
    Multivector<T, N> r;
    for (BladeMask a = 0; a < S; ++a)
      for (BladeMask b = 0; b < S; ++b) {
        const T w = x[a] * y[b];
        const auto& p = table_[a * S + b];
        for (BladeMask c = 0; c < S; ++c) r[c] += w * p[c];
      }
    return r;
  }

  Multivector<T, N> lcontract(const Multivector<T, N>& x, const Multivector<T, N>& y) const {
    Multivector<T, N> r;
    for (BladeMask a = 0; a < S; ++a)
      for (BladeMask b = 0; b < S; ++b) {
        const int k = grade_of(b) - grade_of(a);
        if (k < 0) continue;
        const T w = x[a] * y[b];
        const auto& p = table_[a * S + b];
        for (BladeMask c = 0; c < S; ++c)
          if (grade_of(c) == k) r[c] += w * p[c];
      }
    return r;
  }

  Multivector<T, N> rcontract(const Multivector<T, N>& x, const Multivector<T, N>& y) const {
    Multivector<T, N> r;
    for (BladeMask a = 0; a < S; ++a)
      for (BladeMask b = 0; b < S; ++b) {
        const int k = grade_of(a) - grade_of(b);
        if (k < 0) continue;
        const T w = x[a] * y[b];
        const auto& p = table_[a * S + b];
        for (BladeMask c = 0; c < S; ++c)
          if (grade_of(c) == k) r[c] += w * p[c];
      }
    return r;
  }

  /// X ._m Y = <reverse(X) *_m Y>_0
  T dot(const Multivector<T, N>& x, const Multivector<T, N>& y) const {
    T r(0.0);
    for (BladeMask a = 0; a < S; ++a)
      for (BladeMask b = 0; b < S; ++b) {
        if (grade_of(a) != grade_of(b)) continue;
        const T w = x[a] * y[b] * table_[a * S + b][0];
        if (involution_sign(Involution::reversion, grade_of(a)) > 0)
          r += w;
        else
          r -= w;
      }
    return r;
  }

  /// A x_m B = (A *_m B - B *_m A) / 2
  Multivector<T, N> commutator(const Multivector<T, N>& x, const Multivector<T, N>& y) const {
    return (clifford(x, y) - clifford(y, x)) * T(0.5);
  }

  Multivector<T, N> product(ProductKind kind, const Multivector<T, N>& x, const Multivector<T, N>& y) const {
    switch (kind) {
      case ProductKind::dot:
        return Multivector<T, N>::scalar(dot(x, y));
      case ProductKind::contract_left:
        return lcontract(x, y);
      case ProductKind::contract_right:
        return rcontract(x, y);
      case ProductKind::clifford:
        return clifford(x, y);
      case ProductKind::commutator:
        return commutator(x, y);
    }
    return {};
  }

 private:
  void build() {
    for (BladeMask b = 0; b < S; ++b) table_[b] = Multivector<T, N>::blade(b);
    for (BladeMask a = 1; a < S; ++a) {
      const int i = std::countr_zero(a);
      const BladeMask rest = a ^ (BladeMask{1} << i);
      // m(e_i) as a vector
      Vector<T, N> mi;
      for (std::size_t j = 0; j < N; ++j) mi[j] = m_(j, i);
      // e_i _|_m e_rest, a combination of grade |rest|-1 blades
      const auto w = excalc::lcontract(mi, Multivector<T, N>::blade(rest));
      const auto ei = unit_vector<T, N>(i);
      for (BladeMask b = 0; b < S; ++b) {
        const auto& z = table_[rest * S + b];
        auto r = excalc::lcontract(mi, z) + excalc::wedge(ei, z);
        for (BladeMask c = 0; c < S; ++c) {
          if (grade_of(c) + 1 != grade_of(rest)) continue;
          const auto& pc = table_[c * S + b];
          for (BladeMask k = 0; k < S; ++k) r[k] -= w[c] * pc[k];
        }
        table_[a * S + b] = r;
      }
    }
  }

  Matrix<T, N> m_;
  std::vector<Multivector<T, N>> table_;
};

template <class T, std::size_t N>
Multivector<T, N> metric_product(const Multivector<T, N>& x, const Multivector<T, N>& y,
                                 const Matrix<T, N>& m, ProductKind kind,
                                 double det_floor = kDefaultDetFloor) {
  const double det = value_of(determinant(m));
  if (!(std::abs(det) >= det_floor)) throw SingularExtensor("metric", det);
  return MetricAlgebra<T, N>(m).product(kind, x, y);
}

// ---------------------------------------------------------------------------
// symmetric eigenvalues (double only; used for signature and floor checks)

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
template <std::size_t N>
std::array<double, N> symmetric_eigenvalues(Matrix<double, N> a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::array<double, N> ev;
  for (std::size_t i = 0; i < N; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

// ---------------------------------------------------------------------------
// matrix functions by Newton-type iterations, exact under dual arithmetic

namespace detail {
template <class T, std::size_t N, class Step>
Matrix<T, N> iterate_to_fixed_point(Matrix<T, N> x, Step step, const char* what) {
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    Matrix<T, N> next = step(x);
    const double change = max_abs(next - x);
    const double scale = std::max(1.0, max_abs(next));
    x = next;
    if (change <= 1e-15 * scale) return x;
    if (change < 1e-9 * scale && change >= prev) return x;  // rounding floor reached
    prev = change;
  }
  throw std::runtime_error(std::string("matrix iteration did not converge: ") + what);
}

template <class T, std::size_t N>
Matrix<T, N> symmetrize(const Matrix<T, N>& m) {
  return (m + transpose(m)) * 0.5;
}
}  // namespace detail

/// sign(g) = g |g|^{-1} for a non-singular symmetric g (Newton sign iteration).
template <class T, std::size_t N>
Matrix<T, N> matrix_sign(const Matrix<T, N>& g) {
  return detail::iterate_to_fixed_point(
      g, [](const Matrix<T, N>& x) { return detail::symmetrize((x + inverse(x)) * 0.5); }, "sign");
}

/// Principal square root of a symmetric positive definite matrix (Denman-Beavers).
template <class T, std::size_t N>
Matrix<T, N> spd_sqrt(const Matrix<T, N>& a) {
  Matrix<T, N> y = a;
  Matrix<T, N> z = Matrix<T, N>::identity();
  double prev = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    Matrix<T, N> yn = (y + inverse(z)) * 0.5;
    Matrix<T, N> zn = (z + inverse(y)) * 0.5;
    const double change = max_abs(yn - y);
    const double scale = std::max(1.0, max_abs(yn));
    y = detail::symmetrize(yn);
    z = detail::symmetrize(zn);
    if (change <= 1e-15 * scale) return y;
    if (change < 1e-9 * scale && change >= prev) return y;
    prev = change;
  }
  throw std::runtime_error("matrix iteration did not converge: sqrt");
}

/// Orthogonal polar factor of a non-singular matrix (Newton iteration).
template <class T, std::size_t N>
Matrix<T, N> polar_factor(const Matrix<T, N>& m) {
  return detail::iterate_to_fixed_point(
      m, [](const Matrix<T, N>& x) { return (x + transpose(inverse(x))) * 0.5; }, "polar");
}

// ---------------------------------------------------------------------------
// gauge factorization

/// Diagonal +-1 pattern of the orthogonal metric eta.
template <std::size_t N>
using EtaLayout = std::array<int, N>;

/// p positive entries followed by q negative ones.
template <std::size_t N>
EtaLayout<N> negatives_last(int q) {
  EtaLayout<N> l;
  for (std::size_t i = 0; i < N; ++i) l[i] = (static_cast<int>(i) >= static_cast<int>(N) - q) ? -1 : 1;
  return l;
}

template <std::size_t N>
int negative_count(const EtaLayout<N>& l) {
  int q = 0;
  for (int s : l) q += (s < 0);
  return q;
}

template <class T, std::size_t N>
struct GaugeFactorization {
  Matrix<T, N> h;    ///< gauge metric extensor, det[h] > 0
  EtaLayout<N> eta;  ///< constant orthogonal metric, diagonal +-1
  int p = 0;
  int q = 0;

  Matrix<T, N> eta_matrix() const {
    Matrix<T, N> e;
    for (std::size_t i = 0; i < N; ++i) e(i, i) = T(static_cast<double>(eta[i]));
    return e;
  }
};

/// Number of negative eigenvalues, with the floor check on |eigenvalue|.
template <std::size_t N>
int count_negative_eigenvalues(const Matrix<double, N>& g, double floor = kDefaultDetFloor) {
  const auto ev = symmetric_eigenvalues(detail::symmetrize(g));
  int q = 0;
  for (double l : ev) {
    if (!(std::abs(l) >= floor)) throw SingularExtensor("metric (eigenvalue)", l);
    q += (l < 0);
  }
  return q;
}

/**
 * g = h^T eta h with h = R |g|^{1/2}.
 *
 * |g|^{1/2} is the symmetric square root of the matrix absolute value. R is
 * the direct rotation taking the negative eigenspace of g onto the negative
 * axes of the eta layout (the polar factor of E P + (1 - E)(1 - P) with P, E
 * the two projectors), so R = 1 when those subspaces already coincide and
 * h reduces to the symmetric square root for Riemannian g.
 *
 * Eigenvalues of g are only inspected at the value level for the signature
 * and floor checks; every other step is a smooth matrix function, so h
 * carries exact derivatives under dual arithmetic.
 */
template <class T, std::size_t N>
GaugeFactorization<T, N> gauge_factorize(const Matrix<T, N>& g, const EtaLayout<N>& layout,
                                         double floor = kDefaultDetFloor) {
  const int declared_q = negative_count(layout);
  const int found_q = count_negative_eigenvalues(value_of(g), floor);
  if (found_q != declared_q) throw SignatureChange(declared_q, found_q);

  GaugeFactorization<T, N> f;
  f.eta = layout;
  f.q = declared_q;
  f.p = static_cast<int>(N) - declared_q;

  const Matrix<T, N> sign = declared_q == 0 ? Matrix<T, N>::identity() : matrix_sign(g);
  const Matrix<T, N> abs_g = declared_q == 0 ? g : detail::symmetrize(sign * g);
  const Matrix<T, N> root = spd_sqrt(abs_g);
  if (declared_q == 0) {
    f.h = root;
    return f;
  }

  const Matrix<T, N> one = Matrix<T, N>::identity();
  const Matrix<T, N> proj = (one - sign) * 0.5;
  Matrix<T, N> target;
  for (std::size_t i = 0; i < N; ++i) target(i, i) = T(layout[i] < 0 ? 1.0 : 0.0);
  const Matrix<T, N> m = target * proj + (one - target) * (one - proj);
  const double det_m = value_of(determinant(m));
  if (std::abs(det_m) < 1e-6)
    throw GaugeLayoutError("negative eigenspace of g is orthogonal to the eta layout; choose another layout");
  Matrix<T, N> rot = polar_factor(m);
  if (det_m < 0) {
    // reflect one axis inside a single eta block, keeping R^T eta R unchanged
    for (std::size_t j = 0; j < N; ++j) rot(0, j) = -rot(0, j);
  }
  f.h = rot * root;
  return f;
}

template <class T, std::size_t N>
GaugeFactorization<T, N> gauge_factorize(const Matrix<T, N>& g, int q, double floor = kDefaultDetFloor) {
  return gauge_factorize(g, negatives_last<N>(q), floor);
}

}  // namespace excalc
