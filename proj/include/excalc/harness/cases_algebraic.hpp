#pragma once

// Derivative-free identities: volume pseudoscalars, Hodge extensors and
// multivector/extensor product rules.

#include "excalc/harness/identity.hpp"

namespace excalc::harness {

template <std::size_t N>
void add_algebraic_cases(std::vector<IdentityCase<N>>& out) {
  using MV = Multivector<double, N>;
  using V = Vector<double, N>;
  auto add = [&](std::string id, std::string description, ResidualFn<N> fn, double tol = kTolAlgebraic) {
    out.push_back({std::move(id), Suite::algebraic, 0, tol, std::move(description), std::move(fn)});
  };
  const int n = static_cast<int>(N);

  add("OHD.2a", "tau . tau = tau _| rev(tau) = tau rev(tau) = 1 for a random frame",
      [](const Context<N>&, Rng& rng, const V&) {
        const auto tau = volume_standard(random_frame<N>(rng)).tau;
        const MV one = MV::scalar(1.0);
        return std::max({rel(scalar_product(tau, tau), 1.0), rel(lcontract(tau, reverse(tau)), one),
                         rel(clifford(tau, reverse(tau)), one)});
      });

  add("OHD.2b", "I = (I . tau) tau for pseudoscalars I", [](const Context<N>&, Rng& rng, const V&) {
    const auto tau = volume_standard(random_frame<N>(rng)).tau;
    const auto i = random_pseudoscalar<N>(rng);
    return rel(i, tau * scalar_product(i, tau));
  });

  add("OHD.6", "frame volume sqrt(e_^ . e_^) e^^ equals sgn(det eps) b_^", [](const Context<N>&, Rng& rng, const V&) {
    const auto eps = random_frame<N>(rng);
    const auto b = MV::pseudoscalar();
    const auto low = outermorphism(eps, b);
    const auto up = outermorphism(transpose(inverse(eps)), b);
    const double s = determinant(eps) < 0 ? -1.0 : 1.0;
    return rel(up * std::sqrt(scalar_product(low, low)), b * s);
  });

  add("OHD.7", "tau_g = sqrt|e_^ ._g e_^| e^^ = sqrt|det g| tau", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto eps = random_frame<N>(rng);
    const auto m = c.g.at(x);
    const MetricAlgebra<double, N> alg(m.g);
    const auto low = outermorphism(eps, MV::pseudoscalar());
    const auto up = outermorphism(transpose(inverse(eps)), MV::pseudoscalar());
    const int sign = determinant(eps) < 0 ? -1 : 1;
    return rel(up * std::sqrt(std::abs(alg.dot(low, low))), volume_metric(m, sign).tau);
  });

  add("OHD.7a", "tau_g ._{g^-1} tau_g = tau_g _|_{g^-1} rev(tau_g) = tau_g *_{g^-1} rev(tau_g) = (-1)^q",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto m = c.g.at(x);
        const auto tau = volume_metric(m, random_sign(rng)).tau;
        const MetricAlgebra<double, N> alg(m.g_inv);
        const double s = c.g.sign_q();
        return std::max({rel(alg.dot(tau, tau), s), rel(alg.lcontract(tau, reverse(tau)), MV::scalar(s)),
                         rel(alg.clifford(tau, reverse(tau)), MV::scalar(s))});
      });

  add("OHD.7b", "I = (-1)^q (I ._{g^-1} tau_g) tau_g for pseudoscalars I", [](const Context<N>& c, Rng& rng, const V& x) {
    const auto m = c.g.at(x);
    const auto tau = volume_metric(m, random_sign(rng)).tau;
    const MetricAlgebra<double, N> alg(m.g_inv);
    const auto i = random_pseudoscalar<N>(rng);
    return rel(i, tau * (c.g.sign_q() * alg.dot(i, tau)));
  });

  add("OHD.8a", "star^-1 star X = star star^-1 X = X", [](const Context<N>&, Rng& rng, const V&) {
    const auto tau = standard_tau<double, N>(random_sign(rng));
    const auto x = random_multivector<N>(rng);
    return std::max(rel(star_inv(star(x, tau), tau), x), rel(star(star_inv(x, tau), tau), x));
  });

  add("OHD.9", "star_g X = rev(X) _|_{g^-1} tau_g = sqrt|det g| g^-1(rev X) _| tau = rev(X) *_{g^-1} tau_g",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto m = c.g.at(x);
        const auto& h = c.hodge();
        const auto tau = volume_metric(m, h.tau_sign()).tau;
        const MetricAlgebra<double, N> alg(m.g_inv);
        const auto X = random_multivector<N>(rng);
        const auto s = h.star(X, m);
        const auto by_hand = lcontract(outermorphism(m.g_inv, reverse(X)), standard_tau<double, N>(h.tau_sign())) *
                             m.sqrt_abs_det;
        return std::max({rel(s, alg.lcontract(reverse(X), tau)), rel(s, by_hand), rel(s, alg.clifford(reverse(X), tau))});
      });

  add("OHD.9a",
      "star_g^-1 X = (-1)^q tau_g _|_{g^-1} rev(X) = (-1)^q tau_g *_{g^-1} rev(X); star_g^-1 star_g = star_g star_g^-1 = id",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto m = c.g.at(x);
        const auto& h = c.hodge();
        const auto tau = volume_metric(m, h.tau_sign()).tau;
        const MetricAlgebra<double, N> alg(m.g_inv);
        const auto X = random_multivector<N>(rng);
        const auto si = h.star_inv(X, m);
        const double s = c.g.sign_q();
        return std::max({rel(si, alg.rcontract(tau, reverse(X)) * s), rel(si, alg.clifford(tau, reverse(X)) * s),
                         rel(h.star_inv(h.star(X, m), m), X), rel(h.star(h.star_inv(X, m), m), X)});
      });

  add("MV.involution", "reversion, grade involution and conjugation act on products as (anti)automorphisms",
      [](const Context<N>&, Rng& rng, const V&) {
        const auto a = random_multivector<N>(rng);
        const auto b = random_multivector<N>(rng);
        const auto ab = clifford(a, b);
        return std::max({rel(reverse(ab), clifford(reverse(b), reverse(a))),
                         rel(conjugate(ab), clifford(conjugate(b), conjugate(a))),
                         rel(grade_involution(ab), clifford(grade_involution(a), grade_involution(b))),
                         rel(conjugate(a), reverse(grade_involution(a)))});
      });

  add("MV.product", "associativity and contraction rules of the canonical products",
      [](const Context<N>&, Rng& rng, const V&) {
        const auto a = random_multivector<N>(rng);
        const auto b = random_multivector<N>(rng);
        const auto z = random_multivector<N>(rng);
        const auto v = MV::vector(random_vector<N>(rng));
        double r = 0;
        r = std::max(r, rel(wedge(wedge(a, b), z), wedge(a, wedge(b, z))));
        r = std::max(r, rel(clifford(clifford(a, b), z), clifford(a, clifford(b, z))));
        r = std::max(r, rel(lcontract(a, lcontract(b, z)), lcontract(wedge(a, b), z)));
        r = std::max(r, rel(rcontract(rcontract(a, b), z), rcontract(a, wedge(b, z))));
        r = std::max(r, rel(clifford(v, a), lcontract(v, a) + wedge(v, a)));
        r = std::max(r, rel(lcontract(v, wedge(a, b)), wedge(lcontract(v, a), b) + wedge(grade_involution(a), lcontract(v, b))));
        r = std::max(r, rel(scalar_product(a, b), clifford(reverse(a), b)[0]));
        return r;
      });

  add("MV.duality", "tau conj(tau) = (-1)^n and b_^ (a ^ X) = (-1)^(n+1) a _| (b_^ X)",
      [n](const Context<N>&, Rng& rng, const V&) {
        const auto tau = standard_tau<double, N>(random_sign(rng));
        const auto a = MV::vector(random_vector<N>(rng));
        const auto X = random_multivector<N>(rng);
        return std::max(rel(clifford(tau, conjugate(tau)), MV::scalar(sign_pow(n))),
                        rel(clifford(tau, wedge(a, X)), lcontract(a, clifford(tau, X)) * sign_pow(n + 1)));
      });

  add("EXT.outermorphism", "composition, adjoint, determinant and inverse of extended extensors",
      [](const Context<N>&, Rng& rng, const V&) {
        const auto s = random_frame<N>(rng);
        const auto t = random_frame<N>(rng);
        const auto X = random_multivector<N>(rng);
        const auto Y = random_multivector<N>(rng);
        double r = 0;
        r = std::max(r, rel(outermorphism(Matrix<double, N>(s * t), X), outermorphism(s, outermorphism(t, X))));
        r = std::max(r, rel(scalar_product(Y, outermorphism(t, X)), scalar_product(outermorphism(adjoint(t), Y), X)));
        r = std::max(r, rel(det_extensor(Matrix<double, N>(s * t)), det_extensor(s) * det_extensor(t)));
        r = std::max(r, rel(det_extensor(t), determinant(t)));
        r = std::max(r, rel(outermorphism(inverse_extensor(t), outermorphism(t, X)), X));
        r = std::max(r, rel(lcontract(X, outermorphism(t, Y)),
                            outermorphism(t, lcontract(outermorphism(adjoint(t), X), Y))));
        return r;
      });

  add("EXT.metric_product", "X *_m Y products agree with the canonical products of m(X) and Y",
      [](const Context<N>& c, Rng& rng, const V& x) {
        const auto m = c.g.at(x);
        const MetricAlgebra<double, N> alg(m.g_inv);
        const auto X = random_multivector<N>(rng);
        const auto Y = random_multivector<N>(rng);
        const auto v = random_vector<N>(rng);
        const auto mv = MV::vector(v);
        double r = 0;
        r = std::max(r, rel(alg.lcontract(X, Y), lcontract(outermorphism(m.g_inv, X), Y)));
        r = std::max(r, rel(alg.rcontract(X, Y), rcontract(X, outermorphism(m.g_inv, Y))));
        r = std::max(r, rel(alg.dot(X, Y), scalar_product(outermorphism(m.g_inv, X), Y)));
        r = std::max(r, rel(alg.clifford(mv, Y), alg.lcontract(mv, Y) + wedge(mv, Y)));
        r = std::max(r, rel(alg.clifford(mv, mv), MV::scalar(dot(v, m.g_inv * v))));
        return r;
      });
}

}  // namespace excalc::harness
