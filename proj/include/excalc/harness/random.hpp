#pragma once

/**
 * @file random.hpp
 * @brief Seeded random inputs: constant algebraic data and polynomial fields.
 */

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string_view>
#include <vector>

#include "excalc/field.hpp"
#include "excalc/linalg.hpp"
#include "excalc/multivector.hpp"

namespace excalc::harness {

using Rng = std::mt19937_64;

/// FNV-1a over a sequence of byte strings, used to derive per-case seeds.
class SeedHash {
 public:
  SeedHash& add(std::string_view s) {
    for (unsigned char c : s) mix(c);
    mix(0xff);
    return *this;
  }
  SeedHash& add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(v >> (8 * i)));
    return *this;
  }
  std::uint64_t value() const { return h_; }

 private:
  void mix(unsigned char c) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int random_sign(Rng& rng) { return (rng() & 1) ? -1 : 1; }

template <std::size_t N>
Vector<double, N> random_vector(Rng& rng, double scale = 1.0) {
  Vector<double, N> v;
  for (auto& c : v) c = scale * uniform(rng);
  return v;
}

template <std::size_t N>
Multivector<double, N> random_multivector(Rng& rng, double scale = 1.0) {
  Multivector<double, N> m;
  for (auto& c : m.coeffs()) c = scale * uniform(rng);
  return m;
}

template <std::size_t N>
Multivector<double, N> random_pseudoscalar(Rng& rng) {
  return Multivector<double, N>::blade(Multivector<double, N>::size - 1, uniform(rng, -2.0, 2.0));
}

template <std::size_t N>
Matrix<double, N> random_matrix(Rng& rng, double scale = 1.0) {
  Matrix<double, N> m;
  for (auto& c : m.a) c = scale * uniform(rng);
  return m;
}

/// I + 0.3 R with a random sign on the first row; |det| stays well away from 0.
template <std::size_t N>
Matrix<double, N> random_frame(Rng& rng) {
  for (;;) {
    Matrix<double, N> m = random_matrix<N>(rng, 0.3);
    for (std::size_t i = 0; i < N; ++i) m(i, i) += 1.0;
    if (random_sign(rng) < 0)
      for (std::size_t j = 0; j < N; ++j) m(0, j) = -m(0, j);
    if (std::abs(determinant(m)) > 0.2) return m;
  }
}

// ---------------------------------------------------------------------------
// polynomials

/// Exponent lists of all monomials of degree <= 3 in N variables, as index triples
/// padded with -1.
template <std::size_t N>
const std::vector<std::array<int, 3>>& monomials() {
  static const std::vector<std::array<int, 3>> table = [] {
    std::vector<std::array<int, 3>> t;
    const int n = static_cast<int>(N);
    t.push_back({-1, -1, -1});
    for (int i = 0; i < n; ++i) t.push_back({i, -1, -1});
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) t.push_back({i, j, -1});
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) t.push_back({i, j, k});
    return t;
  }();
  return table;
}

/// A cubic polynomial in the coordinates; higher degrees get smaller coefficients.
template <std::size_t N>
struct Polynomial {
  std::vector<double> coef;

  static Polynomial random(Rng& rng, double scale = 1.0) {
    Polynomial p;
    for (const auto& m : monomials<N>()) {
      const int degree = (m[0] >= 0) + (m[1] >= 0) + (m[2] >= 0);
      p.coef.push_back(scale * uniform(rng) * std::pow(0.6, degree));
    }
    return p;
  }

  template <class T>
  T operator()(const Vector<T, N>& x) const {
    const auto& ms = monomials<N>();
    T r(0.0);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (coef[k] == 0.0) continue;
      T term(coef[k]);
      for (int i : ms[k])
        if (i >= 0) term = term * x[static_cast<std::size_t>(i)];
      r += term;
    }
    return r;
  }
};

/// Multivector field with an independent random cubic on every blade of the grades in grade_mask.
template <std::size_t N>
MultivectorField<N> random_multivector_field(Rng& rng, unsigned grade_mask = ~0u, double scale = 1.0) {
  auto polys = std::make_shared<std::vector<Polynomial<N>>>();
  for (BladeMask b = 0; b < Multivector<double, N>::size; ++b) {
    const bool on = (grade_mask >> grade_of(b)) & 1u;
    polys->push_back(on ? Polynomial<N>::random(rng, scale) : Polynomial<N>{});
  }
  return MultivectorField<N>([polys](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    Multivector<T, N> m;
    for (BladeMask b = 0; b < Multivector<T, N>::size; ++b)
      if (!(*polys)[b].coef.empty()) m[b] = (*polys)[b](x);
    return m;
  });
}

template <std::size_t N>
VectorField<N> random_vector_field(Rng& rng, double scale = 1.0) {
  auto polys = std::make_shared<std::vector<Polynomial<N>>>();
  for (std::size_t i = 0; i < N; ++i) polys->push_back(Polynomial<N>::random(rng, scale));
  return VectorField<N>([polys](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    Vector<T, N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = (*polys)[i](x);
    return v;
  });
}

/// eps(x) = A + 0.05 P(x) with A from random_frame and P a matrix of random cubics.
template <std::size_t N>
Extensor11Field<N> random_frame_field(Rng& rng) {
  const auto base = random_frame<N>(rng);
  auto polys = std::make_shared<std::vector<Polynomial<N>>>();
  for (std::size_t k = 0; k < N * N; ++k) polys->push_back(Polynomial<N>::random(rng, 0.05));
  return Extensor11Field<N>([base, polys](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    Matrix<T, N> m;
    for (std::size_t k = 0; k < N * N; ++k) m.a[k] = T(base.a[k]) + (*polys)[k](x);
    return m;
  });
}

/// skew(mu, nu, sigma) antisymmetric in (nu, sigma), quadratic-cubic random entries.
template <std::size_t N>
ConnectionField<N> random_skew_connection(Rng& rng, double scale = 0.3) {
  auto polys = std::make_shared<std::vector<Polynomial<N>>>();
  for (std::size_t k = 0; k < N * N * N; ++k) polys->push_back(Polynomial<N>::random(rng, scale));
  return ConnectionField<N>([polys](const auto& x) {
    using T = std::remove_cvref_t<decltype(x[0])>;
    ConnectionCoefficients<T, N> s;
    for (std::size_t mu = 0; mu < N; ++mu)
      for (std::size_t nu = 0; nu < N; ++nu)
        for (std::size_t sg = nu + 1; sg < N; ++sg) {
          const T v = (*polys)[(mu * N + nu) * N + sg](x);
          s(mu, nu, sg) = v;
          s(mu, sg, nu) = -v;
        }
    return s;
  });
}

}  // namespace excalc::harness
