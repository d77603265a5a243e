#pragma once

// Independent reference computations used by the unit tests.

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

#include "excalc/excalc.hpp"

namespace oracle {

/// Euclidean product of basis blades by sorting the concatenated index list.
/// Returns (sign, mask).
inline std::pair<int, unsigned> blade_product(unsigned a, unsigned b) {
  std::vector<int> idx;
  for (int i = 0; i < 16; ++i)
    if (a >> i & 1u) idx.push_back(i);
  for (int i = 0; i < 16; ++i)
    if (b >> i & 1u) idx.push_back(i);
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  unsigned mask = 0;
  for (std::size_t i = 0; i < idx.size();) {
    if (i + 1 < idx.size() && idx[i] == idx[i + 1]) {
      i += 2;
    } else {
      mask |= 1u << idx[i];
      ++i;
    }
  }
  return {sign, mask};
}

template <std::size_t N>
Eigen::Matrix<double, N, N> to_eigen(const excalc::Matrix<double, N>& m) {
  Eigen::Matrix<double, N, N> e;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(i, j) = m(i, j);
  return e;
}

template <std::size_t N>
excalc::Matrix<double, N> from_eigen(const Eigen::Matrix<double, N, N>& e) {
  excalc::Matrix<double, N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = e(i, j);
  return m;
}

/// Central difference of a scalar function along coordinate i.
template <std::size_t N>
double central(const std::function<double(const excalc::Vector<double, N>&)>& f, excalc::Vector<double, N> x,
               std::size_t i, double h) {
  auto xp = x, xm = x;
  xp[i] += h;
  xm[i] -= h;
  return (f(xp) - f(xm)) / (2 * h);
}

}  // namespace oracle

namespace oracle {

template <std::size_t N>
excalc::MetricField<N> constant_metric(const excalc::Matrix<double, N>& g, int q) {
  return excalc::MetricField<N>(excalc::Extensor11Field<N>([g](const auto& y) {
                                  using U = std::remove_cvref_t<decltype(y[0])>;
                                  excalc::Matrix<U, N> m;
                                  for (std::size_t i = 0; i < N; ++i)
                                    for (std::size_t j = 0; j < N; ++j) m(i, j) = U(g(i, j));
                                  return m;
                                }),
                                q);
}

template <std::size_t N>
excalc::Matrix<double, N> diag(std::initializer_list<double> d) {
  excalc::Matrix<double, N> m;
  std::size_t i = 0;
  for (double x : d) m(i, i) = x, ++i;
  return m;
}

}  // namespace oracle
