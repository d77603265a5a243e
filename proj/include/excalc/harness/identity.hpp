#pragma once

/**
 * @file identity.hpp
 * @brief Identity cases, the per-metric evaluation context and residual helpers.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "excalc/covariant_hodge.hpp"
#include "excalc/gauge.hpp"
#include "excalc/harness/catalog.hpp"
#include "excalc/harness/random.hpp"

namespace excalc::harness {

enum class Suite { algebraic, ordinary, levi_civita, lagrangian, gauge, covariant_hodge };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::algebraic:
      return "algebraic";
    case Suite::ordinary:
      return "ordinary";
    case Suite::levi_civita:
      return "levi_civita";
    case Suite::lagrangian:
      return "lagrangian";
    case Suite::gauge:
      return "gauge";
    case Suite::covariant_hodge:
      return "covariant_hodge";
  }
  return "?";
}

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> s{Suite::algebraic, Suite::ordinary,  Suite::levi_civita,
                                    Suite::lagrangian, Suite::gauge, Suite::covariant_hodge};
  return s;
}

inline constexpr double kTolAlgebraic = 1e-10;
inline constexpr double kTolJet = 1e-7;
inline constexpr double kTolNested = 1e-5;

/// Everything an identity needs about one catalog metric in one dimension.
template <std::size_t N>
struct Context {
  MetricCatalogEntry<N> entry;
  MetricField<N> g;
  LeviCivita<N> lc;
  GaugeStructure<N> gauge;
  GeometricStructure<N> geometric;
  /// Levi-Civita plus a random g-skew part; empty when it could not be built.
  std::optional<GeometricStructure<N>> torsion;
  std::string torsion_error;

  Context(MetricCatalogEntry<N> e, std::uint64_t seed, bool flip_star_inverse)
      : entry(std::move(e)), g(entry.metric()), lc(g), gauge(lc), geometric(g) {
    geometric.hodge().set_inverse_sign_flipped(flip_star_inverse);
    Rng rng(seed);
    const auto skew = random_skew_connection<N>(rng);
    std::vector<Vector<double, N>> probes;
    for (int i = 0; i < 3; ++i) {
      Vector<double, N> p;
      for (std::size_t k = 0; k < N; ++k) p[k] = uniform(rng, 0.1, 0.9) * (random_sign(rng));
      probes.push_back(p);
    }
    try {
      torsion.emplace(g, add_skew_part(g, levi_civita_connection(g), skew), probes);
      torsion->hodge().set_inverse_sign_flipped(flip_star_inverse);
    } catch (const std::exception& ex) {
      torsion_error = ex.what();
    }
  }

  const MetricHodge<N>& hodge() const { return geometric.hodge(); }

  const GeometricStructure<N>& torsion_structure() const {
    if (!torsion) throw std::runtime_error("torsion structure unavailable: " + torsion_error);
    return *torsion;
  }
};

template <std::size_t N>
using ResidualFn = std::function<double(const Context<N>&, Rng&, const Vector<double, N>&)>;

template <std::size_t N>
struct IdentityCase {
  std::string id;
  Suite suite;
  /// Highest derivative order of the fields involved (0, 1 or 2).
  int derivative_order;
  double tolerance;
  std::string description;
  ResidualFn<N> residual;
};

// ---------------------------------------------------------------------------
// residuals, normalized by max(1, |lhs|, |rhs|)

inline double rel(double l, double r) { return std::abs(l - r) / std::max({1.0, std::abs(l), std::abs(r)}); }

template <std::size_t N>
double rel(const Multivector<double, N>& l, const Multivector<double, N>& r) {
  return max_abs(l - r) / std::max({1.0, max_abs(l), max_abs(r)});
}

template <std::size_t N>
double rel(const Vector<double, N>& l, const Vector<double, N>& r) {
  double d = 0, a = 0, b = 0;
  for (std::size_t i = 0; i < N; ++i) {
    d = std::max(d, std::abs(l[i] - r[i]));
    a = std::max(a, std::abs(l[i]));
    b = std::max(b, std::abs(r[i]));
  }
  return d / std::max({1.0, a, b});
}

template <std::size_t N>
double rel_zero(const Multivector<double, N>& x) {
  return rel(x, Multivector<double, N>{});
}

inline double sign_pow(int k) { return (k & 1) ? -1.0 : 1.0; }

}  // namespace excalc::harness
