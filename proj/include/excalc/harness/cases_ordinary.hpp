#pragma once

// Identities of the ordinary (metric-free) derivative operators and of the
// Hodge coderivatives built on them.

#include "excalc/calculus.hpp"
#include "excalc/harness/identity.hpp"

namespace excalc::harness {

template <std::size_t N>
void add_ordinary_cases(std::vector<IdentityCase<N>>& out) {
  using MV = Multivector<double, N>;
  using V = Vector<double, N>;
  auto add = [&](std::string id, std::string description, ResidualFn<N> fn, double tol = kTolJet, int order = 1) {
    out.push_back({std::move(id), Suite::ordinary, order, tol, std::move(description), std::move(fn)});
  };
  const int n = static_cast<int>(N);

  add("OHD.6a", "a . d_o tau = 0 for tau built from a smooth frame field", [](const Context<N>&, Rng& rng, const V& x) {
    const auto eps = random_frame_field<N>(rng);
    const auto a = random_vector<N>(rng);
    auto tau = [&](const auto& y) { return volume_standard(eps(y)).tau; };
    return rel_zero(dir_deriv(a, tau, x));
  });

  add("OHD.6b", "a . d_o (tau * X) = tau * (a . d_o X) for * in {^, clifford, _|}",
      [](const Context<N>&, Rng& rng, const V& x) {
        const auto eps = random_frame_field<N>(rng);
        const auto X = random_multivector_field<N>(rng);
        const auto a = random_vector<N>(rng);
        auto tau = [&](const auto& y) { return volume_standard(eps(y)).tau; };
        const auto t = tau(x);
        const auto dx = dir_deriv(a, X, x);
        const auto w = dir_deriv(a, [&](const auto& y) { return wedge(tau(y), X(y)); }, x);
        const auto c = dir_deriv(a, [&](const auto& y) { return clifford(tau(y), X(y)); }, x);
        const auto l = dir_deriv(a, [&](const auto& y) { return lcontract(X(y), tau(y)); }, x);
        return std::max({rel(w, wedge(t, dx)), rel(c, clifford(t, dx)), rel(l, lcontract(dx, t))});
      });

  add("OHD.8b", "a . d_o star(X) = star(a . d_o X)", [](const Context<N>&, Rng& rng, const V& x) {
    const int s = random_sign(rng);
    const auto X = random_multivector_field<N>(rng);
    const auto a = random_vector<N>(rng);
    auto starred = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      return star(X(y), standard_tau<U, N>(s));
    };
    return rel(dir_deriv(a, starred, x), star(dir_deriv(a, X, x), standard_tau<double, N>(s)));
  });

  add("OHD.8c", "a . d_o star^-1(X) = star^-1(a . d_o X)", [](const Context<N>&, Rng& rng, const V& x) {
    const int s = random_sign(rng);
    const auto X = random_multivector_field<N>(rng);
    const auto a = random_vector<N>(rng);
    auto starred = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      return star_inv(X(y), standard_tau<U, N>(s));
    };
    return rel(dir_deriv(a, starred, x), star_inv(dir_deriv(a, X, x), standard_tau<double, N>(s)));
  });

  add("DI.1", "tau (d_o ^ X) = (-1)^(n+1) d_o _| (tau X)", [n](const Context<N>&, Rng& rng, const V& x) {
    const int s = random_sign(rng);
    const auto X = random_multivector_field<N>(rng);
    const auto tau = standard_tau<double, N>(s);
    auto tx = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      return clifford(standard_tau<U, N>(s), X(y));
    };
    return rel(clifford(tau, curl(X, x)), div_contract(tx, x) * sign_pow(n + 1));
  });

  add("DI.2", "tau *_{g^-1} (d_o ^ X) = ((-1)^(n+1) / det g) g(d_o _| (tau X))",
      [n](const Context<N>& c, Rng& rng, const V& x) {
        const int s = random_sign(rng);
        const auto X = random_multivector_field<N>(rng);
        const auto m = c.g.at(x);
        const MetricAlgebra<double, N> alg(m.g_inv);
        auto tx = [&](const auto& y) {
          using U = std::remove_cvref_t<decltype(y[0])>;
          return clifford(standard_tau<U, N>(s), X(y));
        };
        const auto lhs = alg.clifford(standard_tau<double, N>(s), curl(X, x));
        return rel(lhs, outermorphism(m.g, div_contract(tx, x)) * (sign_pow(n + 1) / m.det));
      });

  add("HDI.1", "star^-1(d_o ^ star(X)) = -d_o _| hat(X)", [](const Context<N>&, Rng& rng, const V& x) {
    const int s = random_sign(rng);
    const auto X = random_multivector_field<N>(rng);
    auto starred = [&](const auto& y) {
      using U = std::remove_cvref_t<decltype(y[0])>;
      return star(X(y), standard_tau<U, N>(s));
    };
    auto hat = [&](const auto& y) { return grade_involution(X(y)); };
    return rel(star_inv(curl(starred, x), standard_tau<double, N>(s)), -div_contract(hat, x));
  });

  add("HDI.2", "star_g^-1(d_o ^ star_g(X)) = -(1/sqrt|det g|) g(d_o _| (sqrt|det g| g^-1(hat X)))",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto& h = c.hodge();
        auto starred = [&](const auto& y) { return h.star(X(y), y); };
        auto inner = [&](const auto& y) {
          const auto m = c.g.at(y);
          return outermorphism(m.g_inv, grade_involution(X(y))) * m.sqrt_abs_det;
        };
        const auto m = c.g.at(x);
        return rel(h.star_inv(curl(starred, x), x), -outermorphism(m.g, div_contract(inner, x)) * (1.0 / m.sqrt_abs_det));
      });

  add("OHO.1a", "delta X (definition) = -d_o _| X", [](const Context<N>&, Rng& rng, const V& x) {
    const int s = random_sign(rng);
    const auto X = random_multivector_field<N>(rng);
    return rel(delta_standard(X, x, s), delta_standard_closed(X, x));
  });

  add("OHO.2a", "delta_g X (definition) = -(1/sqrt|det g|) g(d_o _| (sqrt|det g| g^-1(X)))",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        return rel(delta_metric_definitional(c.hodge(), X, x), delta_metric(c.g, X, x));
      });

  add("CAL.leibniz", "a . d_o (X Y) = (a . d_o X) Y + X (a . d_o Y); d_o X = d_o _| X + d_o ^ X",
      [](const Context<N>&, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        const auto Y = random_multivector_field<N>(rng);
        const auto a = random_vector<N>(rng);
        const auto lhs = dir_deriv(a, [&](const auto& y) { return clifford(X(y), Y(y)); }, x);
        const auto rhs = clifford(dir_deriv(a, X, x), Y(x)) + clifford(X(x), dir_deriv(a, Y, x));
        return std::max(rel(lhs, rhs), rel(gradient(X, x), div_contract(X, x) + curl(X, x)));
      });

  add(
      "CAL.nilpotent", "d_o ^ (d_o ^ X) = 0 and d_o _| (d_o _| X) = 0",
      [](const Context<N>&, Rng& rng, const V& x) {
        const auto X = random_multivector_field<N>(rng);
        auto c = [&](const auto& y) { return curl(X, y); };
        auto d = [&](const auto& y) { return div_contract(X, y); };
        return std::max(rel_zero(curl(c, x)), rel_zero(div_contract(d, x)));
      },
      kTolNested, 2);
}

}  // namespace excalc::harness
