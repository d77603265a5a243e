#pragma once

// Gauge factorization, gauge covariant derivatives and the golden formulas.

#include "excalc/harness/cases_levi_civita.hpp"

namespace excalc::harness {

template <std::size_t N>
void add_gauge_cases(std::vector<IdentityCase<N>>& out) {
  using MV = Multivector<double, N>;
  using V = Vector<double, N>;
  auto add = [&](std::string id, std::string description, ResidualFn<N> fn, double tol = kTolJet, int order = 1) {
    out.push_back({std::move(id), Suite::gauge, order, tol, std::move(description), std::move(fn)});
  };

  add(
      "GD.factorization", "h^T eta h = g", [](const Context<N>& c, Rng&, const V& x) {
        return c.gauge.factorization_residual(x);
      },
      1e-9, 0);

  add(
      "GD.golden_product", "h*(X *_{g^-1} Y) = h*(X) *_eta h*(Y) for every product",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto hs = transpose(inverse(c.gauge.h(x)));
        const MetricAlgebra<double, N> ag(c.g.g_inv(x));
        const MetricAlgebra<double, N> ae(c.gauge.template eta<double>());
        const auto X = random_multivector<N>(rng);
        const auto Y = random_multivector<N>(rng);
        const auto hx = outermorphism(hs, X);
        const auto hy = outermorphism(hs, Y);
        double r = rel(ag.dot(X, Y), ae.dot(hx, hy));
        for (auto k : {ProductKind::contract_left, ProductKind::contract_right, ProductKind::clifford})
          r = std::max(r, rel(outermorphism(hs, ag.product(k, X, Y)), ae.product(k, hx, hy)));
        r = std::max(r, rel(outermorphism(hs, wedge(X, Y)), wedge(hx, hy)));
        return r;
      },
      1e-8, 0);

  add("GD.1", "eta(Dj+_{h a} eta(X)) = Dj-_{h* a} X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    const auto a = random_vector<N>(rng);
    const auto h = c.gauge.h(x);
    const auto eta = c.gauge.template eta<double>();
    auto flipped = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      return outermorphism(c.gauge.template eta<U>(), X(y));
    };
    const auto lhs = outermorphism(eta, c.gauge.gauge_D_plus(V(h * a), flipped, x));
    return rel(lhs, c.gauge.gauge_D_minus(V(transpose(inverse(h)) * a), X, x));
  });

  add("GD.eta_compat", "Dj-_{h* a} eta(X) = eta(Dj+_{h a} X)", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    const auto a = random_vector<N>(rng);
    const auto h = c.gauge.h(x);
    auto flipped = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      return outermorphism(c.gauge.template eta<U>(), X(y));
    };
    const auto lhs = c.gauge.gauge_D_minus(V(transpose(inverse(h)) * a), flipped, x);
    return rel(lhs, outermorphism(c.gauge.template eta<double>(), c.gauge.gauge_D_plus(V(h * a), X, x)));
  });

  add("GD.2", "(Dj+_{h a} b) ._eta c = [a, h^-1(b), h^-1(c)]", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto a = random_vector<N>(rng);
    const auto b = random_vector<N>(rng);
    const auto cc = random_vector<N>(rng);
    auto bf = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      Vector<U, N> v;
      for (std::size_t i = 0; i < N; ++i) v[i] = U(b[i]);
      return Multivector<U, N>::vector(v);
    };
    const auto v = c.gauge.gauge_D_plus(V(c.gauge.h(x) * a), bf, x).vector_part();
    const double lhs = dot(V(c.gauge.template eta<double>() * v), cc);
    auto pulled = [&](const V& w) {
      return [&c, w](const auto& y) {
        using U = std::remove_cvref_t<decltype(y[0])>;
        Vector<U, N> wu;
        for (std::size_t i = 0; i < N; ++i) wu[i] = U(w[i]);
        return Vector<U, N>(inverse(c.gauge.h(y)) * wu);
      };
    };
    const double rhs = christoffel_first(c.g, detail::constant_vector(a), pulled(b), pulled(cc), x);
    return rel(lhs, rhs);
  });

  add("GD.3", "Dj+_{h a} X = a . d_o X + Omega0(a) x_eta X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    const auto a = random_vector<N>(rng);
    return rel(c.gauge.gauge_D_plus(V(c.gauge.h(x) * a), X, x), c.gauge.gauge_D_plus_omega(a, X, x));
  });

  add("GD.4", "Omega0 is bivector valued and linear in a", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto a = random_vector<N>(rng);
    const auto b = random_vector<N>(rng);
    const double s = uniform(rng), t = uniform(rng);
    const auto oa = c.gauge.Omega0(a, x);
    const auto ob = c.gauge.Omega0(b, x);
    V ab;
    for (std::size_t i = 0; i < N; ++i) ab[i] = s * a[i] + t * b[i];
    const auto os = c.gauge.Omega0(ab, x);
    return std::max(rel(oa, oa.grade(2)), rel(os, oa * s + ob * t));
  });

  add("GD.6", "Dj-_eta X = Dj- _|_eta X + Dj- ^ X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.gauge.gauge_grad(X, x), c.gauge.gauge_div(X, x) + c.gauge.gauge_curl(X, x));
  });

  auto golden = [&](const char* id, const char* description, int which) {
    add(id, description, [which](const Context<N>& c, Rng& rng, const V& x) {
      const auto X = random_multivector_field<N>(rng);
      const auto hs = transpose(inverse(c.gauge.h(x)));
      auto pushed = [&](const auto& y) { return outermorphism(transpose(inverse(c.gauge.h(y))), X(y)); };
      switch (which) {
        case 0:
          return rel(outermorphism(hs, c.lc.cov_div_minus(X, x)), c.gauge.gauge_div(pushed, x));
        case 1:
          return rel(outermorphism(hs, c.lc.cov_curl_minus(X, x)), c.gauge.gauge_curl(pushed, x));
        default:
          return rel(outermorphism(hs, c.lc.cov_grad_minus(X, x)), c.gauge.gauge_grad(pushed, x));
      }
    });
  };
  golden("GD.7a", "h*(D^- _|_{g^-1} X) = Dj- _|_eta h*(X)", 0);
  golden("GD.7b", "h*(D^- ^ X) = Dj- ^ h*(X)", 1);
  golden("GD.7c", "h*(D^-_{g^-1} X) = Dj-_eta h*(X)", 2);

  add("GD.8a", "Dj- _|_eta X = (1/det h) (eta h)(d_o _| (det h (h^-1 eta)(X)))",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        return rel(c.gauge.gauge_div(X, x), c.gauge.gauge_div_closed(X, x));
      });

  add("GD.8b", "Dj- ^ X = h*(d_o ^ h^T(X))", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.gauge.gauge_curl(X, x), c.gauge.gauge_curl_closed(X, x));
  });

  add(
      "GD.curl_curl", "Dj- ^ (Dj- ^ X) = 0",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto Y = MultivectorField<N>::derived([&](const auto& y) { return c.gauge.gauge_curl(X, y); });
        return rel_zero(c.gauge.gauge_curl(Y, x));
      },
      1e-6, 2);
  (void)sizeof(MV);
}

}  // namespace excalc::harness
