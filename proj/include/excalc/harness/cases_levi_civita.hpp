#pragma once

// Levi-Civita connection, the canonical DCDO pair and the Lagrangian identities.

#include "excalc/harness/identity.hpp"

namespace excalc::harness {

namespace detail {

/// lambda_a as a matrix: column j holds lambda_a(b_j).
template <std::size_t N>
Matrix<double, N> lambda_matrix(const MetricJet<double, N>& j, const Vector<double, N>& a) {
  Matrix<double, N> l;
  for (std::size_t k = 0; k < N; ++k) {
    const auto col = connection_lambda(j, a, unit_vector<double, N>(k));
    for (std::size_t i = 0; i < N; ++i) l(i, k) = col[i];
  }
  return l;
}

template <std::size_t N>
auto constant_vector(const Vector<double, N>& v) {
  return [v](const auto& y) {
    using U = std::remove_cvref_t<decltype(y[0])>;
    Vector<U, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = U(v[i]);
    return r;
  };
}

template <class T, std::size_t N>
T gdot(const Matrix<T, N>& gi, const Multivector<T, N>& u, const Multivector<T, N>& v) {
  return scalar_product(outermorphism(gi, u), v);
}

}  // namespace detail

template <std::size_t N>
void add_levi_civita_cases(std::vector<IdentityCase<N>>& out) {
  using MV = Multivector<double, N>;
  using V = Vector<double, N>;
  auto add = [&](std::string id, std::string description, ResidualFn<N> fn, double tol = kTolJet, int order = 1) {
    out.push_back({std::move(id), Suite::levi_civita, order, tol, std::move(description), std::move(fn)});
  };

  add("LGS.1b", "omega0(a) x_g b ._g c = 1/2 a . ((b . d_o g)(c) - (c . d_o g)(b))",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto a = random_vector<N>(rng);
        const auto b = random_vector<N>(rng);
        const auto cc = random_vector<N>(rng);
        const auto j = metric_jet(c.g, x);
        const MetricAlgebra<double, N> alg(j.m.g);
        const double lhs = alg.dot(alg.commutator(omega0(j, a), MV::vector(b)), MV::vector(cc));
        const double rhs = 0.5 * (dot(a, j.along(b) * cc) - dot(a, j.along(cc) * b));
        return rel(lhs, rhs);
      });

  add("LGS.symmetry", "lambda_a(b) = lambda_b(a)", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto a = random_vector<N>(rng);
    const auto b = random_vector<N>(rng);
    return rel(c.lc.lambda(a, b, x), c.lc.lambda(b, a, x));
  });

  add("LGS.3a", "d_a . lambda_a(b) = (1/sqrt|det g|) b . d_o sqrt|det g|", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto b = random_vector<N>(rng);
    const auto j = metric_jet(c.g, x);
    const auto lhs = multivector_deriv_linear<double, N>(
        [&](const V& v) { return MV::vector(connection_lambda(j, v, b)); }, Combine::dot)[0];
    const double ds = dir_deriv(b, [&](const auto& y) { return c.g.sqrt_abs_det(y); }, x);
    return rel(lhs, ds / j.m.sqrt_abs_det);
  });

  add("LGS.3b", "d_a ^ lambda_a^T(b) = 0", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto b = random_vector<N>(rng);
    const auto j = metric_jet(c.g, x);
    return rel_zero(multivector_deriv_linear<double, N>(
        [&](const V& v) { return MV::vector(transpose(detail::lambda_matrix(j, v)) * b); }, Combine::wedge));
  });

  add("LGS.4a", "d_a _| Lambda_a(X) = (1/sqrt|det g|) (d_o sqrt|det g|) _| X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector<N>(rng);
    const auto j = metric_jet(c.g, x);
    const auto lhs = multivector_deriv_linear<double, N>(
        [&](const V& v) { return generalized(detail::lambda_matrix(j, v), X); }, Combine::lcontract);
    const auto sj = jet([&](const auto& y) { return c.g.sqrt_abs_det(y); }, x);
    V grad;
    for (std::size_t i = 0; i < N; ++i) grad[i] = sj.d[i] / sj.value;
    return rel(lhs, lcontract(grad, X));
  });

  add("LGS.4b", "d_a ^ Lambda_a^T(X) = 0", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector<N>(rng);
    const auto j = metric_jet(c.g, x);
    return rel_zero(multivector_deriv_linear<double, N>(
        [&](const V& v) { return generalized_adjoint(detail::lambda_matrix(j, v), X); }, Combine::wedge));
  });

  add("LGS.compat", "D_a^- g(X) = g(D_a^+ X)", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    const auto a = random_vector<N>(rng);
    auto lowered = [&](const auto& y) { return outermorphism(c.g.g(y), X(y)); };
    return rel(c.lc.D_minus(a, lowered, x), outermorphism(c.g.g(x), c.lc.D_plus(a, X, x)));
  });

  add("LGS.grade", "D_a^+ and D_a^- preserve grade", [](const Context<N>& c, Rng& rng, const V& x) {
    const int k = static_cast<int>(rng() % (N + 1));
    const auto X = random_multivector_field<N>(rng, 1u << k);
    const auto a = random_vector<N>(rng);
    const auto p = c.lc.D_plus(a, X, x);
    const auto m = c.lc.D_minus(a, X, x);
    return std::max(rel(p, p.grade(k)), rel(m, m.grade(k)));
  });

  add("LGS.ricci", "a . d_o (X ._{g^-1} Y) = (D_a^- X) ._{g^-1} Y + X ._{g^-1} (D_a^- Y)",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto Y = random_multivector_field<N>(rng);
        const auto a = random_vector<N>(rng);
        const auto gi = c.g.g_inv(x);
        const double lhs =
            dir_deriv(a, [&](const auto& y) { return detail::gdot(c.g.g_inv(y), X(y), Y(y)); }, x);
        const double rhs =
            detail::gdot(gi, c.lc.D_minus(a, X, x), Y(x)) + detail::gdot(gi, X(x), c.lc.D_minus(a, Y, x));
        return rel(lhs, rhs);
      });

  add(
      "LGS.christoffel",
      "[b_mu, b_nu, b_sigma] = 1/2 (d_mu g_nu,sigma + d_nu g_mu,sigma - d_sigma g_mu,nu); (D_a^+ b) . c = {c; a, b}",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto j = metric_jet(c.g, x);
        double r = 0;
        for (std::size_t mu = 0; mu < N; ++mu)
          for (std::size_t nu = 0; nu < N; ++nu)
            for (std::size_t sg = 0; sg < N; ++sg) {
              const double classical = 0.5 * (j.dg[mu](nu, sg) + j.dg[nu](mu, sg) - j.dg[sg](mu, nu));
              const double k = christoffel_first(c.g, detail::constant_vector(unit_vector<double, N>(mu)),
                                                 detail::constant_vector(unit_vector<double, N>(nu)),
                                                 detail::constant_vector(unit_vector<double, N>(sg)), x);
              r = std::max(r, rel(k, classical));
            }
        const auto a = random_vector<N>(rng);
        const auto b = random_vector<N>(rng);
        const auto cc = random_vector<N>(rng);
        auto bf = [&](const auto& y) {
          using U = std::remove_cvref_t<decltype(y[0])>;
          Vector<U, N> v;
          for (std::size_t i = 0; i < N; ++i) v[i] = U(b[i]);
          return Multivector<U, N>::vector(v);
        };
        const double lhs = dot(c.lc.D_plus(a, bf, x).vector_part(), cc);
        const double rhs = christoffel_second(c.g, detail::constant_vector(a), detail::constant_vector(b),
                                              detail::constant_vector(cc), x);
        return std::max(r, rel(lhs, rhs));
      },
      1e-9);

  add("LGS.koszul", "[a, b, c] + [a, c, b] = a . d_o (b ._g c) for vector fields a, b, c",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto a = random_vector_field<N>(rng);
        const auto b = random_vector_field<N>(rng);
        const auto cc = random_vector_field<N>(rng);
        const double lhs = christoffel_first(c.g, a, b, cc, x) + christoffel_first(c.g, a, cc, b, x);
        const double rhs =
            dir_deriv(a(x), [&](const auto& y) { return ::excalc::detail::bilinear(b(y), c.g.g(y), cc(y)); }, x);
        return rel(lhs, rhs);
      });

  add("LCD.1", "e^mu _| D_{e_mu}^+ X is independent of the frame e_mu = eps(b_mu)",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto eps = random_frame<N>(rng);
        const auto recip = transpose(inverse(eps));
        MV r;
        for (std::size_t mu = 0; mu < N; ++mu)
          r += lcontract(::excalc::detail::col(recip, mu), c.lc.D_plus(::excalc::detail::col(eps, mu), X, x));
        return rel(r, c.lc.cov_div_plus(X, x));
      });

  add("LCD.1a", "D^+ _| X = (1/sqrt|det g|) d_o _| (sqrt|det g| X)", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.lc.cov_div_plus(X, x), c.lc.cov_div_plus_closed(X, x));
  });

  add("LCD.3", "D^-_{g^-1} X = D^- _|_{g^-1} X + D^- ^ X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.lc.cov_grad_minus(X, x), c.lc.cov_div_minus(X, x) + c.lc.cov_curl_minus(X, x));
  });

  add("LCD.4a", "D^- _|_{g^-1} X = g(D^+ _| g^-1(X))", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    auto raised = [&](const auto& y) { return outermorphism(c.g.g_inv(y), X(y)); };
    return rel(c.lc.cov_div_minus(X, x), outermorphism(c.g.g(x), c.lc.cov_div_plus(raised, x)));
  });

  add("LCD.4b", "D^- _|_{g^-1} X = (1/sqrt|det g|) g(d_o _| (sqrt|det g| g^-1(X)))",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        return rel(c.lc.cov_div_minus(X, x), c.lc.cov_div_minus_closed(X, x));
      });

  add(
      "LCD.4b1", "D^- _|_{g^-1} (D^- _|_{g^-1} X) = 0 (absolute)",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto Y = MultivectorField<N>::derived([&](const auto& y) { return c.lc.cov_div_minus(X, y); });
        return max_abs(c.lc.cov_div_minus(Y, x));
      },
      kTolNested, 2);

  add("LCD.4b2", "D^- _|_{g^-1} X = -delta_g X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.lc.cov_div_minus(X, x), -delta_metric(c.g, X, x));
  });

  add("LCD.5", "D^- ^ X = d_o ^ X", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.lc.cov_curl_minus(X, x), curl(X, x));
  });
}

template <std::size_t N>
void add_lagrangian_cases(std::vector<IdentityCase<N>>& out) {
  using V = Vector<double, N>;
  const std::pair<const char*, LagrangianIdentity> which[] = {
      {"LCD.6a", LagrangianIdentity::curl_div}, {"LCD.6b", LagrangianIdentity::div_curl},
      {"LCD.6c", LagrangianIdentity::grad_grad}};
  const char* descriptions[] = {
      "(d_o ^ X) ._{g^-1} Y + X ._{g^-1} (D^- _|_{g^-1} Y) = (1/s) d_o . (s d_n (n ^ X) ._{g^-1} Y)",
      "(D^- _|_{g^-1} X) ._{g^-1} Y + X ._{g^-1} (d_o ^ Y) = (1/s) d_o . (s d_n (n _|_{g^-1} X) ._{g^-1} Y)",
      "(D^-_{g^-1} X) ._{g^-1} Y + X ._{g^-1} (D^-_{g^-1} Y) = (1/s) d_o . (s d_n (n *_{g^-1} X) ._{g^-1} Y)"};
  for (int k = 0; k < 3; ++k) {
    const auto w = which[k].second;
    out.push_back({which[k].first, Suite::lagrangian, 1, kTolJet, descriptions[k],
                   [w](const Context<N>& c, Rng& rng, const V& x) {
                     const auto X = random_multivector_field<N>(rng);
                     const auto Y = random_multivector_field<N>(rng);
                     return lagrangian_identity_residual(c.lc, w, X, Y, x);
                   }});
  }
}

}  // namespace excalc::harness
