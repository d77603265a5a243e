#pragma once

/**
 * @file catalog.hpp
 * @brief Built-in metric fields sampled by the verification harness.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "excalc/field.hpp"
#include "excalc/metric.hpp"

namespace excalc::harness {

inline constexpr const char* kCatalogVersion = "excalc-catalog-2";
inline constexpr int kMaxHarnessDimension = 4;

template <std::size_t N>
struct MetricCatalogEntry {
  std::string name;
  std::string description;
  int q = 0;
  EtaLayout<N> layout{};
  Box<N> box = Box<N>::cube(-1.0, 1.0);
  Extensor11Field<N> g;
  /// Points always evaluated before the random samples.
  std::vector<Vector<double, N>> anchors;
  /// Part of the "all" sweep.
  bool in_default_sweep = true;

  MetricField<N> metric() const { return MetricField<N>(g, layout); }
};

namespace detail {

template <std::size_t N>
MetricCatalogEntry<N> make_entry(std::string name, std::string description, int q, Extensor11Field<N> g) {
  MetricCatalogEntry<N> e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.q = q;
  e.layout = negatives_last<N>(q);
  e.g = std::move(g);
  return e;
}

/// S_ij = x_i x_j + 0.5 (x_i + x_j), symmetric and bounded by 2 on [-1, 1]^N.
template <class T, std::size_t N>
Matrix<T, N> symmetric_poly(const Vector<T, N>& x) {
  Matrix<T, N> s;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) s(i, j) = x[i] * x[j] + (x[i] + x[j]) * 0.5;
  return s;
}

template <std::size_t N>
Matrix<double, N> fixed_factor() {
  Matrix<double, N> a;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      a(i, j) = (i == j ? 1.2 : 0.0) + 0.25 * std::sin(1.0 + static_cast<double>(i) + 2.0 * static_cast<double>(j));
  return a;
}

}  // namespace detail

template <std::size_t N>
std::vector<MetricCatalogEntry<N>> catalog() {
  using detail::make_entry;
  std::vector<MetricCatalogEntry<N>> c;
  const int n = static_cast<int>(N);

  c.push_back(make_entry<N>("euclidean", "g = identity", 0, Extensor11Field<N>([](const auto& x) {
                              using T = std::remove_cvref_t<decltype(x[0])>;
                              return Matrix<T, N>::identity();
                            })));

  c.push_back(make_entry<N>("minkowski", "g = diag(1, -1, ..., -1)", n - 1, Extensor11Field<N>([](const auto& x) {
                              using T = std::remove_cvref_t<decltype(x[0])>;
                              Matrix<T, N> g;
                              for (std::size_t i = 0; i < N; ++i) g(i, i) = T(i == 0 ? 1.0 : -1.0);
                              return g;
                            })));

  {
    auto e = make_entry<N>("minkowski_mostly_plus", "g = diag(-1, 1, ..., 1)", 1, Extensor11Field<N>([](const auto& x) {
                             using T = std::remove_cvref_t<decltype(x[0])>;
                             Matrix<T, N> g;
                             for (std::size_t i = 0; i < N; ++i) g(i, i) = T(i == 0 ? -1.0 : 1.0);
                             return g;
                           }));
    e.layout.fill(1);
    e.layout[0] = -1;
    c.push_back(std::move(e));
  }

  c.push_back(make_entry<N>("diag_poly", "g = diag(1 + x1^2, 2 + x2^2, ...)", 0, Extensor11Field<N>([](const auto& x) {
                              using T = std::remove_cvref_t<decltype(x[0])>;
                              Matrix<T, N> g;
                              for (std::size_t i = 0; i < N; ++i) g(i, i) = x[i] * x[i] + static_cast<double>(i + 1);
                              return g;
                            })));

  c.push_back(make_entry<N>("conformal", "g = exp(2 phi) id, phi = 0.3 sum sin(x_mu)", 0,
                            Extensor11Field<N>([](const auto& x) {
                              using T = std::remove_cvref_t<decltype(x[0])>;
                              T phi(0.0);
                              for (std::size_t i = 0; i < N; ++i) phi += sin(x[i]);
                              return Matrix<T, N>::identity() * exp(phi * 0.6);
                            })));

  {
    const auto a = detail::fixed_factor<N>();
    const auto ata = transpose(a) * a;
    c.push_back(make_entry<N>("perturbed", "g = A^T A + 0.1 S(x), S symmetric polynomial", 0,
                              Extensor11Field<N>([ata](const auto& x) {
                                using T = std::remove_cvref_t<decltype(x[0])>;
                                Matrix<T, N> g = detail::symmetric_poly(x) * 0.1;
                                for (std::size_t k = 0; k < N * N; ++k) g.a[k] += ata.a[k];
                                return g;
                              })));
  }

  c.push_back(make_entry<N>("lorentz_curved", "g = diag(1 + x1^2, -1 - x2^2, ..., -1 - xn^2)", n - 1,
                            Extensor11Field<N>([](const auto& x) {
                              using T = std::remove_cvref_t<decltype(x[0])>;
                              Matrix<T, N> g;
                              for (std::size_t i = 0; i < N; ++i) g(i, i) = (x[i] * x[i] + 1.0) * (i == 0 ? 1.0 : -1.0);
                              return g;
                            })));

  c.push_back(make_entry<N>("lorentz_perturbed", "g = diag(1, -1, ..., -1) + 0.08 S(x), non-diagonal Lorentzian",
                            n - 1, Extensor11Field<N>([](const auto& x) {
                              using T = std::remove_cvref_t<decltype(x[0])>;
                              Matrix<T, N> g = detail::symmetric_poly(x) * 0.08;
                              for (std::size_t i = 0; i < N; ++i) g(i, i) += (i == 0 ? 1.0 : -1.0);
                              return g;
                            })));

  {
    auto e = make_entry<N>("degenerate_at_origin", "g = diag(|x|^2, 1, ..., 1), singular at the origin", 0,
                           Extensor11Field<N>([](const auto& x) {
                             using T = std::remove_cvref_t<decltype(x[0])>;
                             Matrix<T, N> g = Matrix<T, N>::identity();
                             T r(0.0);
                             for (std::size_t i = 0; i < N; ++i) r += x[i] * x[i];
                             g(0, 0) = r;
                             return g;
                           }));
    e.anchors.push_back(Vector<double, N>{});
    e.in_default_sweep = false;
    c.push_back(std::move(e));
  }
  return c;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog<2>()) names.push_back(e.name);
  return names;
}

inline std::vector<std::string> default_sweep_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog<2>())
    if (e.in_default_sweep) names.push_back(e.name);
  return names;
}

template <std::size_t N>
MetricCatalogEntry<N> catalog_entry(const std::string& name) {
  for (auto& e : catalog<N>())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog metric '" + name + "'");
}

}  // namespace excalc::harness
