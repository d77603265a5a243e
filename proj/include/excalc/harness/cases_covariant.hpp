#pragma once

// Covariant Hodge coderivative on (U, gamma, g). Every identity except the
// Levi-Civita cross-check runs on both the Levi-Civita structure and a
// structure with a g-skew connection term.

#include "excalc/harness/identity.hpp"

namespace excalc::harness {

template <std::size_t N>
void add_covariant_cases(std::vector<IdentityCase<N>>& out) {
  using MV = Multivector<double, N>;
  using V = Vector<double, N>;
  using S = GeometricStructure<N>;
  auto add = [&](std::string id, std::string description, ResidualFn<N> fn, double tol = kTolJet, int order = 1) {
    out.push_back({std::move(id), Suite::covariant_hodge, order, tol, std::move(description), std::move(fn)});
  };
  // Draws from rng once per structure so both see independent inputs.
  auto both = [](auto fn) -> ResidualFn<N> {
    return [fn](const Context<N>& c, Rng& rng, const V& x) {
      return std::max(fn(c.geometric, rng, x), fn(c.torsion_structure(), rng, x));
    };
  };
  const int n = static_cast<int>(N);

  add("CHC.compat", "D_a^- g(X) = g(D_a^+ X) for the connection with a g-skew term",
      [](const Context<N>& c, Rng&, const V& x) { return c.torsion_structure().compatibility_residual({x}); });

  add(
      "CHC.1", "D_a^- tau_g = 0 (relative to |tau_g|)", both([](const S& s, Rng& rng, const V& x) {
        const auto a = random_vector<N>(rng);
        auto tau = [&](const auto& y) { return s.hodge().tau_g(y); };
        return max_abs(s.pair().D_minus(a, tau, x)) / max_abs(tau(x));
      }),
      1e-8);

  add("CHC.2", "D_a^-(tau_g * X) = tau_g * D_a^- X for * in {^, _|_{g^-1}, |_{g^-1}, *_{g^-1}}",
      both([](const S& s, Rng& rng, const V& x) {
        const auto a = random_vector<N>(rng);
        const auto X = random_multivector_field<N>(rng);
        const auto& g = s.metric();
        const auto tau = s.hodge().tau_g(x);
        const MetricAlgebra<double, N> alg(g.g_inv(x));
        const auto dx = s.pair().D_minus(a, X, x);
        double r = 0;
        for (int k = 0; k < 4; ++k) {
          auto prod = [&](const auto& y) {
            using U = std::remove_cvref_t<decltype(y[0])>;
            const MetricAlgebra<U, N> ay(g.g_inv(y));
            const auto t = s.hodge().tau_g(y);
            const auto xv = X(y);
            switch (k) {
              case 0:
                return wedge(t, xv);
              case 1:
                return ay.lcontract(xv, t);
              case 2:
                return ay.rcontract(t, xv);
              default:
                return ay.clifford(t, xv);
            }
          };
          MV rhs;
          switch (k) {
            case 0:
              rhs = wedge(tau, dx);
              break;
            case 1:
              rhs = alg.lcontract(dx, tau);
              break;
            case 2:
              rhs = alg.rcontract(tau, dx);
              break;
            default:
              rhs = alg.clifford(tau, dx);
          }
          r = std::max(r, rel(s.pair().D_minus(a, prod, x), rhs));
        }
        return r;
      }));

  add("CHC.3d", "D^-_{g^-1} X = D^- _|_{g^-1} X + D^- ^ X", both([](const S& s, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        return rel(s.cov_grad(X, x), s.cov_div(X, x) + s.cov_curl(X, x));
      }));

  add("CHC.4", "tau_g *_{g^-1} (D^- ^ X) = (-1)^(n+1) D^- _|_{g^-1} (tau_g *_{g^-1} X)",
      both([n](const S& s, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto& g = s.metric();
        auto tx = [&](const auto& y) {
          using U = std::remove_cvref_t<decltype(y[0])>;
          return MetricAlgebra<U, N>(g.g_inv(y)).clifford(s.hodge().tau_g(y), X(y));
        };
        const MetricAlgebra<double, N> alg(g.g_inv(x));
        return rel(alg.clifford(s.hodge().tau_g(x), s.cov_curl(X, x)), s.cov_div(tx, x) * sign_pow(n + 1));
      }));

  add("CHC.5", "star_g^-1(D^- ^ star_g(X)) = -D^- _|_{g^-1} hat(X)", both([](const S& s, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        auto starred = [&](const auto& y) { return s.hodge().star(X(y), y); };
        auto hat = [&](const auto& y) { return grade_involution(X(y)); };
        return rel(s.hodge().star_inv(s.cov_curl(starred, x), x), -s.cov_div(hat, x));
      }));

  add("CHC.6a", "Delta_g X (definition) = -D^- _|_{g^-1} X", both([](const S& s, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        return rel(s.delta_covariant(X, x), s.delta_covariant_closed(X, x));
      }));

  add("CHC.levi_civita", "Delta_g = delta_g for the Levi-Civita connection", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto X = random_multivector_field<N>(rng);
    return rel(c.geometric.delta_covariant(X, x), delta_metric(c.g, X, x));
  });

  add(
      "CHC.tau_conjugate", "tau_g *_{g^-1} conj(tau_g) = (-1)^(n+q)",
      [n](const Context<N>& c, Rng&, const V& x) {
        const auto tau = c.hodge().tau_g(x);
        const MetricAlgebra<double, N> alg(c.g.g_inv(x));
        return rel(alg.clifford(tau, conjugate(tau)), MV::scalar(sign_pow(n + c.g.q())));
      },
      kTolAlgebraic, 0);
}

}  // namespace excalc::harness
