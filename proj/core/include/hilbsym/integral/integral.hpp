#pragma once

#include <optional>
#include <vector>

#include "hilbsym/fock/classes.hpp"
#include "hilbsym/fock/grading.hpp"
#include "hilbsym/integral/gamma.hpp"
#include "hilbsym/qde/connection.hpp"
#include "hilbsym/symfun/symfunc.hpp"

namespace hilbsym::integral {

using algebra::NumericContext;
using algebra::Rational;
using algebra::RatFunc;
using fock::BasisTag;
using fock::FockOperator;
using fock::FockVector;
using fock::Side;

/// A class in the localized cohomology of one side, with the deg_0 / 2 of each basis vector.
template <class Real>
struct LocalizedClass {
  Side side = Side::hilb;
  /// The fixed point on Hilb; empty on Sym, where the class spans all inertia components.
  std::optional<Partition> support;
  FockVector<Complex<Real>> value;
  std::vector<int> half_degrees;
};

/// Haiman's image of the skyscraper k_lambda: the modified Macdonald polynomial over Q(q, t).
const symfun::SymFunc& fm_skyscraper(const Partition& lambda);

/// H~_lambda under p_mu -> z(mu)|mu> in the tilde basis, coefficients in Q(q, t).
const FockVector<RatFunc>& macdonald_vector(const Partition& lambda);

/// delta(H~_lambda): the orbifold Chern character of FM(k_lambda) before substituting q, t.
const FockVector<RatFunc>& fm_chern_exact(const Partition& lambda);

/// (2 pi)^{two_pi_power} times an exact unit in Z[i].
struct PhaseMonomial {
  int two_pi_power = 0;
  fock::Gaussian<RatFunc> unit;
};

/// Both sides of (-1)^{n+l}(2 pi i)^{n+l}|mu~> = (2 pi)^{n-l}(2 pi i)^{2l}(-1)^{2l}|mu> in the |mu> coordinate.
std::pair<PhaseMonomial, PhaseMonomial> final_identity_sides(const Partition& mu);
bool final_identity_holds(const Partition& mu);

namespace detail {

template <class Real>
FockVector<Complex<Real>> evaluate_qt(const FockVector<RatFunc>& v, const Complex<Real>& q, const Complex<Real>& t) {
  auto at = fock::evaluation_point(Complex<Real>(0), Complex<Real>(0));
  at[static_cast<std::size_t>(algebra::Var::q)] = q;
  at[static_cast<std::size_t>(algebra::Var::t)] = t;
  return fock::evaluate<Real>(v, at);
}

template <class Real>
Complex<Real> two_pi_i() {
  return {Real(0), Real(2) * algebra::pi<Real>()};
}

/// z^{n(t1 + t2)/z} with the principal log z.
template <class Real>
Complex<Real> rho_factor(int n, const NumericContext<Real>& ctx) {
  return std::exp(Real(n) * (ctx.t1 + ctx.t2) / ctx.z * std::log(ctx.z));
}

/// e^{-pi i n (t1 + t2)/z}.
template <class Real>
Complex<Real> phase_factor(int n, const NumericContext<Real>& ctx) {
  return std::exp(-Complex<Real>(0, algebra::pi<Real>()) * Real(n) * (ctx.t1 + ctx.t2) / ctx.z);
}

/// prod_i mu_i^{-mu_i (t1 + t2)/z}.
template <class Real>
Complex<Real> mu_power_product(const Partition& mu, const NumericContext<Real>& ctx) {
  using std::log;
  Complex<Real> r(1);
  for (int m : mu.parts()) r *= std::exp(-Real(m) * (ctx.t1 + ctx.t2) / ctx.z * log(Real(m)));
  return r;
}

/// Max over components of |a - b| / max(|a|, |b|); components below `floor` times the largest compare against that floor.
template <class Real>
Real vector_deviation(const FockVector<Complex<Real>>& a, const FockVector<Complex<Real>>& b, std::vector<Real>* per_component = nullptr,
                      Real floor = Real(1e-12)) {
  using std::abs;
  Real scale(0);
  for (std::size_t i = 0; i < a.size(); ++i) scale = std::max({scale, Real(abs(a[i])), Real(abs(b[i]))});
  Real worst(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Real m = std::max({Real(abs(a[i])), Real(abs(b[i])), floor * scale});
    const Real d = m == Real(0) ? Real(0) : Real(abs(a[i] - b[i]) / m);
    if (per_component) per_component->push_back(d);
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace detail

/// ch(k_lambda) = J^lambda prod_w (1 - e^{-w}) / w at (t1, t2).
template <class Real>
LocalizedClass<Real> ch_skyscraper(const Partition& lambda, const Complex<Real>& t1, const Complex<Real>& t2) {
  Complex<Real> factor(1);
  for (const auto& wf : partitions::tangent_weights(lambda)) {
    const Complex<Real> w = wf.template evaluate<Real>(t1, t2);
    if (w == Complex<Real>(0)) throw algebra::DomainError("tangent weight vanishes");
    factor *= (Real(1) - std::exp(-w)) / w;
  }
  LocalizedClass<Real> c{Side::hilb, lambda,
                         fock::evaluate<Real>(fock::fixed_point_class(lambda), fock::evaluation_point(t1, t2)).scaled(factor), {}};
  for (const auto& mu : c.value.partitions()) c.half_degrees.push_back(fock::half_deg0(Side::hilb, mu));
  return c;
}

/// Orbifold Chern character of FM(k_lambda): delta(H~_lambda) at q = e^{-t1}, t = e^{-t2}.
template <class Real>
LocalizedClass<Real> ch_fm_skyscraper(const Partition& lambda, const Complex<Real>& t1, const Complex<Real>& t2) {
  LocalizedClass<Real> c{Side::sym, std::nullopt, detail::evaluate_qt<Real>(fm_chern_exact(lambda), std::exp(-t1), std::exp(-t2)), {}};
  for (const auto& mu : c.value.partitions()) c.half_degrees.push_back(fock::half_deg0(Side::sym, mu));
  return c;
}

/// H^lambda_{-z}: H~_lambda at q = e^{-2 pi i t1/z}, t = e^{-2 pi i t2/z}, tilde basis.
template <class Real>
FockVector<Complex<Real>> h_minus_z(const Partition& lambda, const NumericContext<Real>& ctx) {
  const Complex<Real> s = -detail::two_pi_i<Real>() / ctx.z;
  return detail::evaluate_qt<Real>(macdonald_vector(lambda), std::exp(s * ctx.t1), std::exp(s * ctx.t2));
}

template <class Real>
struct TwoRoutes {
  FockVector<Complex<Real>> stepwise;
  FockVector<Complex<Real>> closed;
  Real deviation = 0;
};

/// Psi^Hilb(k_lambda) through ch, (2 pi i)^{deg_0/2}, Gamma_Hilb, z^rho, z^{-mu}; and the assembled closed form.
template <class Real>
TwoRoutes<Real> psi_hilb_routes(const Partition& lambda, const NumericContext<Real>& ctx) {
  using C = Complex<Real>;
  fock::ClassFunction<Real> ch = [lambda](const C& t1, const C& t2) { return ch_skyscraper<Real>(lambda, t1, t2).value; };
  auto graded = fock::deg0_power<Real>(Side::hilb, ch, detail::two_pi_i<Real>());
  fock::ClassFunction<Real> gamma = [lambda, graded](const C& t1, const C& t2) {
    return graded(t1, t2).scaled(gamma_hilb(lambda, t1, t2));
  };
  auto result = fock::mu_power<Real>(fock::rho_power<Real>(gamma, ctx.z), ctx.z);

  const int n = lambda.size();
  C pre = std::pow(ctx.z, n) * detail::rho_factor(n, ctx) * detail::phase_factor(n, ctx) *
          std::pow(detail::two_pi_i<Real>() / ctx.z, 2 * n);
  for (const auto& w : partitions::tangent_weights(lambda)) pre /= algebra::cgamma(Real(1) - w.template evaluate<Real>(ctx.t1, ctx.t2) / ctx.z);
  TwoRoutes<Real> r{result(ctx.t1, ctx.t2),
                    fock::evaluate<Real>(fock::fixed_point_class(lambda), fock::evaluation_point(ctx.t1, ctx.t2)).scaled(pre), Real(0)};
  r.deviation = detail::vector_deviation(r.stepwise, r.closed);
  return r;
}

template <class Real>
FockVector<Complex<Real>> psi_hilb(const Partition& lambda, const NumericContext<Real>& ctx) {
  auto r = psi_hilb_routes(lambda, ctx);
  if (r.deviation > Real(kTwoRouteTolerance)) throw RouteDisagreement("Psi^Hilb routes disagree at " + lambda.to_string());
  return r.stepwise;
}

/// delta_3|mu>, assembled from Gamma_Sym, delta and the gradings before any Gamma identity is used.
template <class Real>
FockOperator<Complex<Real>> delta3_operator(int n, const NumericContext<Real>& ctx) {
  using C = Complex<Real>;
  FockOperator<C> d(n, BasisTag::tilde, BasisTag::tilde);
  const C two_pi_i = detail::two_pi_i<Real>();
  for (std::size_t i = 0; i < d.dim(); ++i) {
    const Partition& mu = d.partitions()[i];
    const int l = mu.length();
    C v = std::pow(ctx.z, n) * detail::rho_factor(n, ctx) * std::pow(ctx.t1 * ctx.t2 / (ctx.z * ctx.z), l) *
          std::pow(C(Real(2) * algebra::pi<Real>()), n - l) * detail::mu_power_product(mu, ctx) * std::pow(ctx.z, -(n - l));
    for (int m : mu.parts()) {
      const C a = Real(m) * ctx.t1 / ctx.z;
      const C b = Real(m) * ctx.t2 / ctx.z;
      v *= Real(m) * algebra::cgamma(a) * algebra::cgamma(b) * (Real(1) - std::exp(-two_pi_i * a)) * (Real(1) - std::exp(-two_pi_i * b));
    }
    d(i, i) = v;
  }
  return d;
}

/// Delta^Hilb: F -> F~, the Hilb side CK|_{z -> -z} Psi^Hilb written on H^lambda_{-z}.
template <class Real>
FockOperator<Complex<Real>> delta_hilb_operator(int n, const NumericContext<Real>& ctx) {
  using C = Complex<Real>;
  FockOperator<C> d(n, BasisTag::tilde, BasisTag::nakajima);
  const C two_pi_i = detail::two_pi_i<Real>();
  for (std::size_t i = 0; i < d.dim(); ++i) {
    const Partition& mu = d.partitions()[i];
    const int l = mu.length();
    C v = Real((n + l) % 2 == 0 ? 1 : -1) * detail::rho_factor(n, ctx) * detail::phase_factor(n, ctx) * std::pow(two_pi_i, n + l) *
          std::pow(ctx.z, l) * detail::mu_power_product(mu, ctx);
    for (int m : mu.parts()) v /= Real(m) * algebra::cgamma(-Real(m) * ctx.t1 / ctx.z) * algebra::cgamma(-Real(m) * ctx.t2 / ctx.z);
    d(i, i) = v * std::pow(C(0, -1), l - n);
  }
  return d;
}

/// Psi^Sym(FM(k_lambda)) through delta(H~), (2 pi i)^{deg_0/2}, Gamma_Sym, z^rho, z^{-mu}; and delta_3(H^lambda_{-z}).
template <class Real>
TwoRoutes<Real> psi_sym_fm_routes(const Partition& lambda, const NumericContext<Real>& ctx) {
  using C = Complex<Real>;
  fock::ClassFunction<Real> ch = [lambda](const C& t1, const C& t2) { return ch_fm_skyscraper<Real>(lambda, t1, t2).value; };
  auto graded = fock::deg0_power<Real>(Side::sym, ch, detail::two_pi_i<Real>());
  fock::ClassFunction<Real> gamma = [graded](const C& t1, const C& t2) {
    auto v = graded(t1, t2);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= gamma_sym_eigenbundle(v.partition(i), t1, t2);
    return v;
  };
  auto result = fock::mu_power<Real>(fock::rho_power<Real>(gamma, ctx.z), ctx.z);
  TwoRoutes<Real> r{result(ctx.t1, ctx.t2), delta3_operator(lambda.size(), ctx).apply(h_minus_z(lambda, ctx)), Real(0)};
  r.deviation = detail::vector_deviation(r.stepwise, r.closed);
  return r;
}

template <class Real>
FockVector<Complex<Real>> psi_sym_fm(const Partition& lambda, const NumericContext<Real>& ctx) {
  auto r = psi_sym_fm_routes(lambda, ctx);
  if (r.deviation > Real(kTwoRouteTolerance)) throw RouteDisagreement("Psi^Sym routes disagree at " + lambda.to_string());
  return r.stepwise;
}

template <class Real>
struct DiagramReport {
  Partition lambda;
  FockVector<Complex<Real>> hilb_side;
  FockVector<Complex<Real>> sym_side;
  std::vector<Real> component_deviation;
  Real deviation = 0;
};

/// CK|_{z -> -z} Psi^Hilb(k_lambda) against Psi^Sym FM(k_lambda), both stepwise, in the tilde basis.
template <class Real>
DiagramReport<Real> diagram_check(const Partition& lambda, const NumericContext<Real>& ctx) {
  const int n = lambda.size();
  DiagramReport<Real> r{lambda, FockVector<Complex<Real>>(n, BasisTag::tilde), FockVector<Complex<Real>>(n, BasisTag::tilde), {}, Real(0)};
  const auto k_minus = qde::k_formula<Real>(n, ctx.t1, ctx.t2, -ctx.z);
  r.hilb_side = fock::c_operator<Real>(n).apply(k_minus.apply(psi_hilb_routes(lambda, ctx).stepwise));
  r.sym_side = psi_sym_fm_routes(lambda, ctx).stepwise;
  r.deviation = detail::vector_deviation(r.hilb_side, r.sym_side, &r.component_deviation);
  return r;
}

}  // namespace hilbsym::integral
