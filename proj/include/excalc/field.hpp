#pragma once

/**
 * @file field.hpp
 * @brief Jet-evaluable fields on a coordinate box.
 *
 * A Field<VT, N> maps a point x of U to a value VT<T, N> for each scalar
 * level T of the tower (double, first and second order duals). Fields built
 * from smooth closed-form lambdas are exact at every level. Fields that are
 * themselves operator images ("derived" fields) consume one derivative level
 * of their ingredients, so they are exact up to first order; a second-order
 * request is served by central differences of their exact gradients.
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "excalc/errors.hpp"
#include "excalc/linalg.hpp"
#include "excalc/multivector.hpp"
#include "excalc/scalar.hpp"

namespace excalc {

/// Scalar-valued fields: ScalarValue<T, N> = T.
template <class T, std::size_t N>
using ScalarValue = T;

/// Connection coefficients of a directional connection, c(mu, nu) = lambda(b_mu, b_nu).
template <class T, std::size_t N>
struct ConnectionCoefficients {
  std::array<T, N * N * N> c{};

  T& operator()(std::size_t mu, std::size_t nu, std::size_t sigma) { return c[(mu * N + nu) * N + sigma]; }
  const T& operator()(std::size_t mu, std::size_t nu, std::size_t sigma) const {
    return c[(mu * N + nu) * N + sigma];
  }

  /// Component matrix of lambda_a: column nu holds lambda(a, b_nu).
  template <class A>
  Matrix<T, N> along(const Vector<A, N>& a) const {
    Matrix<T, N> m;
    for (std::size_t mu = 0; mu < N; ++mu)
      for (std::size_t nu = 0; nu < N; ++nu)
        for (std::size_t s = 0; s < N; ++s) m(s, nu) += a[mu] * (*this)(mu, nu, s);
    return m;
  }
  Matrix<T, N> along_basis(std::size_t mu) const {
    Matrix<T, N> m;
    for (std::size_t nu = 0; nu < N; ++nu)
      for (std::size_t s = 0; s < N; ++s) m(s, nu) = (*this)(mu, nu, s);
    return m;
  }
};

// ---------------------------------------------------------------------------
// component views and scalar rebinding

template <Scalar T>
std::span<T> components(T& v) { return {&v, 1}; }
template <Scalar T>
std::span<const T> components(const T& v) { return {&v, 1}; }
template <class T, std::size_t M>
std::span<T> components(std::array<T, M>& v) { return v; }
template <class T, std::size_t M>
std::span<const T> components(const std::array<T, M>& v) { return v; }
template <class T, std::size_t N>
std::span<T> components(Multivector<T, N>& v) { return v.coeffs(); }
template <class T, std::size_t N>
std::span<const T> components(const Multivector<T, N>& v) { return v.coeffs(); }
template <class T, std::size_t N>
std::span<T> components(Matrix<T, N>& v) { return v.a; }
template <class T, std::size_t N>
std::span<const T> components(const Matrix<T, N>& v) { return v.a; }
template <class T, std::size_t N>
std::span<T> components(ConnectionCoefficients<T, N>& v) { return v.c; }
template <class T, std::size_t N>
std::span<const T> components(const ConnectionCoefficients<T, N>& v) { return v.c; }

template <class V, class U>
struct rebind;
template <class T, std::size_t N, class U>
struct rebind<Dual<T, N>, U> { using type = U; };
template <class T, std::size_t M, class U>
struct rebind<std::array<T, M>, U> { using type = std::array<U, M>; };
template <class T, std::size_t N, class U>
struct rebind<Multivector<T, N>, U> { using type = Multivector<U, N>; };
template <class T, std::size_t N, class U>
struct rebind<Matrix<T, N>, U> { using type = Matrix<U, N>; };
template <class T, std::size_t N, class U>
struct rebind<ConnectionCoefficients<T, N>, U> { using type = ConnectionCoefficients<U, N>; };
template <class V, class U>
using rebind_t = typename rebind<V, U>::type;

// ---------------------------------------------------------------------------
// seeding and first-order jets

/// x lifted one level, with d/dx_i seeded on coordinate i.
template <class T, std::size_t N>
Vector<Dual<T, N>, N> seed(const Vector<T, N>& x) {
  Vector<Dual<T, N>, N> s;
  for (std::size_t i = 0; i < N; ++i) {
    s[i].v = x[i];
    s[i].d[i] = T(1.0);
  }
  return s;
}

/// Value and the N coordinate partials of a field at a point.
template <class V, std::size_t N>
struct Jet1 {
  V value;
  std::array<V, N> d;
};

/// Splits a value computed at Dual<T, N> into its primal part and partials.
template <class T, std::size_t N, class DV>
Jet1<rebind_t<DV, T>, N> split(const DV& v) {
  Jet1<rebind_t<DV, T>, N> j;
  auto src = components(v);
  auto val = components(j.value);
  for (std::size_t k = 0; k < src.size(); ++k) val[k] = src[k].v;
  for (std::size_t i = 0; i < N; ++i) {
    auto di = components(j.d[i]);
    for (std::size_t k = 0; k < src.size(); ++k) di[k] = src[k].d[i];
  }
  return j;
}

/// First-order jet of f at x, exact to the scalar level of x.
template <class T, std::size_t N, class F>
auto jet(const F& f, const Vector<T, N>& x) {
  return split<T, N>(f(seed(x)));
}

/// a . d_o applied to a jet.
template <class V, std::size_t N, class A>
V directional(const Jet1<V, N>& j, const Vector<A, N>& a) {
  V r{};
  auto out = components(r);
  for (std::size_t i = 0; i < N; ++i) {
    auto di = components(j.d[i]);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[i] * di[k];
  }
  return r;
}

template <class T, std::size_t N>
Vector<double, N> value_of(const Vector<T, N>& x) {
  Vector<double, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = value_of(x[i]);
  return r;
}


// ---------------------------------------------------------------------------
// domains

/// Axis-aligned box [lo, hi] standing in for the open set U.
template <std::size_t N>
struct Box {
  Vector<double, N> lo{};
  Vector<double, N> hi{};

  static Box cube(double lo, double hi) {
    Box b;
    b.lo.fill(lo);
    b.hi.fill(hi);
    return b;
  }
  bool contains(const Vector<double, N>& x) const {
    for (std::size_t i = 0; i < N; ++i)
      if (!(x[i] >= lo[i] && x[i] <= hi[i])) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// type-erased fields

enum class OuterLayer { finite_difference, strict };

template <template <class, std::size_t> class VT, std::size_t N>
class Field {
 public:
  template <class T>
  using value_type = VT<T, N>;

  Field() = default;

  /// A closed-form field; f must accept Vector<T, N> at every tower level.
  template <class F>
    requires(!std::same_as<std::remove_cvref_t<F>, Field>)
  Field(F f)  // NOLINT: implicit from callables
      : impl_(std::make_shared<Exact<F>>(std::move(f))) {}

  /// An operator image: f is only instantiated at levels 0 and 1.
  template <class F>
  static Field derived(F f, OuterLayer outer = OuterLayer::finite_difference) {
    Field r;
    r.impl_ = std::make_shared<Derived<F>>(std::move(f), outer);
    return r;
  }

  template <class T>
  VT<T, N> operator()(const Vector<T, N>& x) const {
    if (domain_ && !domain_->contains(value_of(x))) {
      const auto p = value_of(x);
      throw OutsideDomain(std::vector<double>(p.begin(), p.end()));
    }
    return impl_->eval(x);
  }

  /// Highest derivative order available without finite differences.
  int exact_depth() const { return impl_->depth(); }
  explicit operator bool() const { return static_cast<bool>(impl_); }

  Field restricted_to(const Box<N>& box) const {
    Field r = *this;
    r.domain_ = box;
    return r;
  }
  const std::optional<Box<N>>& domain() const { return domain_; }

 private:
  using P0 = Vector<Level0<N>, N>;
  using P1 = Vector<Level1<N>, N>;
  using P2 = Vector<Level2<N>, N>;

  struct Concept {
    virtual ~Concept() = default;
    virtual VT<Level0<N>, N> eval(const P0&) const = 0;
    virtual VT<Level1<N>, N> eval(const P1&) const = 0;
    virtual VT<Level2<N>, N> eval(const P2&) const = 0;
    virtual int depth() const = 0;
  };

  template <class F>
  struct Exact final : Concept {
    explicit Exact(F fn) : f(std::move(fn)) {}
    VT<Level0<N>, N> eval(const P0& x) const override { return f(x); }
    VT<Level1<N>, N> eval(const P1& x) const override { return f(x); }
    VT<Level2<N>, N> eval(const P2& x) const override { return f(x); }
    int depth() const override { return 2; }
    F f;
  };

  template <class F>
  struct Derived final : Concept {
    Derived(F fn, OuterLayer o) : f(std::move(fn)), outer(o) {}
    VT<Level0<N>, N> eval(const P0& x) const override { return f(x); }
    VT<Level1<N>, N> eval(const P1& x) const override { return f(x); }
    VT<Level2<N>, N> eval(const P2& x) const override {
      if (outer == OuterLayer::strict)
        throw JetDepthExceeded("second derivatives of a derived field were requested");
      return lift(x);
    }
    int depth() const override { return 1; }

    /// Exact value and gradient at level 1; second derivatives from
    /// central differences of exact gradients, step eps^(1/3) max(1, |x_l|).
    VT<Level2<N>, N> lift(const P2& x) const {
      P1 x1;
      for (std::size_t i = 0; i < N; ++i) x1[i] = x[i].v;
      const P0 x0 = value_of(x1);

      const VT<Level1<N>, N> v1 = f(x1);
      auto grad_at = [&](const P0& p) { return split<double, N>(f(seed(p))).d; };
      const auto g0 = grad_at(x0);

      using Flat = VT<double, N>;
      std::array<std::array<Flat, N>, N> hess{};  // hess[j][l] = d_l d_j f
      for (std::size_t l = 0; l < N; ++l) {
        const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(x0[l]));
        P0 xp = x0, xm = x0;
        xp[l] += h;
        xm[l] -= h;
        const auto gp = grad_at(xp);
        const auto gm = grad_at(xm);
        for (std::size_t j = 0; j < N; ++j) {
          auto out = components(hess[j][l]);
          auto a = components(gp[j]);
          auto b = components(gm[j]);
          for (std::size_t k = 0; k < out.size(); ++k) out[k] = (a[k] - b[k]) / (2.0 * h);
        }
      }

      VT<Level2<N>, N> r;
      auto out = components(r);
      auto val = components(v1);
      for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].v = val[k];
        for (std::size_t j = 0; j < N; ++j) {
          // (d_j f)(x1) as a level-1 scalar
          Level1<N> dj(components(g0[j])[k]);
          for (std::size_t m = 0; m < N; ++m)
            for (std::size_t l = 0; l < N; ++l) {
              const double hjl = 0.5 * (components(hess[j][l])[k] + components(hess[l][j])[k]);
              dj.d[m] += hjl * x1[l].d[m];
            }
          for (std::size_t i = 0; i < N; ++i) out[k].d[i] += dj * x[j].d[i];
        }
      }
      return r;
    }

    F f;
    OuterLayer outer;
  };

  std::shared_ptr<const Concept> impl_;
  std::optional<Box<N>> domain_;
};

template <std::size_t N>
using ScalarField = Field<ScalarValue, N>;
template <std::size_t N>
using VectorField = Field<Vector, N>;
template <std::size_t N>
using MultivectorField = Field<Multivector, N>;
template <std::size_t N>
using Extensor11Field = Field<Matrix, N>;
template <std::size_t N>
using ConnectionField = Field<ConnectionCoefficients, N>;

/// Constant multivector as a field.
template <std::size_t N>
MultivectorField<N> constant_field(const Multivector<double, N>& m) {
  return MultivectorField<N>([m](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    Multivector<T, N> r;
    for (BladeMask a = 0; a < Multivector<T, N>::size; ++a) r[a] = T(m[a]);
    return r;
  });
}

}  // namespace excalc
