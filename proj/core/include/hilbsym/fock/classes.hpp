#pragma once

#include <array>
#include <vector>

#include "hilbsym/algebra/numeric.hpp"
#include "hilbsym/fock/pairing.hpp"

namespace hilbsym::fock {

using algebra::Complex;

/// J^lambda = t2^n J_lambda(alpha = -t1/t2) with p_mu -> z(mu) t1^l(mu) |mu>. Cached.
const FockVector<RatFunc>& fixed_point_class(const Partition& lambda);

/// Operator whose lambda-th column is J^lambda (rows Nakajima, columns fixed-point).
FockOperator<RatFunc> fixed_point_matrix(int n);

/// prod of tangent weights at lambda as a polynomial.
RatFunc tangent_weight_product(const Partition& lambda);

/// Theta|mu> = z^l(mu)|mu> with z symbolic.
FockOperator<RatFunc> theta_symbolic(int n);

/// delta|mu> = prod (1 - q^mu_i)(1 - t^mu_i)|mu> on F~, q and t symbolic.
FockOperator<RatFunc> delta_symbolic(int n);

/// C|mu> = (-i)^{l(mu) - n}|mu~>, i adjoined exactly.
FockOperator<Gaussian<RatFunc>> c_operator_exact(int n);

/// (t1, t2) substitution point for evaluating exact coefficients; the other variables are `rest`.
template <class Real>
std::array<Complex<Real>, algebra::kNumVars> evaluation_point(const Complex<Real>& t1, const Complex<Real>& t2,
                                                              const Complex<Real>& rest = Complex<Real>(0)) {
  std::array<Complex<Real>, algebra::kNumVars> v;
  v.fill(rest);
  v[static_cast<std::size_t>(algebra::Var::t1)] = t1;
  v[static_cast<std::size_t>(algebra::Var::t2)] = t2;
  return v;
}

template <class Real>
FockVector<Complex<Real>> evaluate(const FockVector<RatFunc>& x, const std::array<Complex<Real>, algebra::kNumVars>& at) {
  return x.map([&](const RatFunc& c) { return c.template evaluate<Complex<Real>>(at); });
}

template <class Real>
FockOperator<Complex<Real>> evaluate(const FockOperator<RatFunc>& a, const std::array<Complex<Real>, algebra::kNumVars>& at) {
  return a.map([&](const RatFunc& c) { return c.template evaluate<Complex<Real>>(at); });
}

/// ||J^lambda|| = prod of principal square roots of the tangent weights.
template <class Real>
Complex<Real> fixed_point_norm(const Partition& lambda, const Complex<Real>& t1, const Complex<Real>& t2) {
  Complex<Real> r(1);
  for (const auto& w : partitions::tangent_weights(lambda)) {
    const Complex<Real> v = w.template evaluate<Real>(t1, t2);
    if (v.imag() == Real(0) && v.real() <= Real(0)) throw algebra::DomainError("tangent weight on the branch cut of sqrt");
    r *= std::sqrt(v);
  }
  return r;
}

/// Theta|mu> = z^l(mu)|mu>.
template <class Real>
FockOperator<Complex<Real>> theta(int n, const Complex<Real>& z) {
  FockOperator<Complex<Real>> r(n, BasisTag::nakajima, BasisTag::nakajima);
  for (std::size_t i = 0; i < r.dim(); ++i) r(i, i) = std::pow(z, r.partitions()[i].length());
  return r;
}

/// L e_lambda = z^{-n} prod w^{1/2} e_lambda.
template <class Real>
FockOperator<Complex<Real>> l_operator(int n, const algebra::NumericContext<Real>& ctx) {
  FockOperator<Complex<Real>> r(n, BasisTag::fixed_point, BasisTag::fixed_point);
  for (std::size_t i = 0; i < r.dim(); ++i)
    r(i, i) = fixed_point_norm(r.partitions()[i], ctx.t1, ctx.t2) / std::pow(ctx.z, n);
  return r;
}

/// L0(q) e_lambda = q^{-c(lambda)/z} e_lambda with the context's branch of log q.
template <class Real>
FockOperator<Complex<Real>> l0_operator(int n, const algebra::NumericContext<Real>& ctx, const Complex<Real>& q) {
  FockOperator<Complex<Real>> r(n, BasisTag::fixed_point, BasisTag::fixed_point);
  const Complex<Real> lq = algebra::log_branch(q, ctx.branch);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    const Complex<Real> c = partitions::content_sum(r.partitions()[i]).template evaluate<Real>(ctx.t1, ctx.t2);
    r(i, i) = std::exp(-c * lq / ctx.z);
  }
  return r;
}

/// A e_lambda = J^lambda / ||J^lambda||.
template <class Real>
FockOperator<Complex<Real>> a_operator(int n, const Complex<Real>& t1, const Complex<Real>& t2) {
  const auto at = evaluation_point(t1, t2);
  std::vector<FockVector<Complex<Real>>> cols;
  for (const auto& lam : partitions::enumerate(n)) {
    const Complex<Real> norm = fixed_point_norm(lam, t1, t2);
    cols.push_back(evaluate<Real>(fixed_point_class(lam), at).scaled(Complex<Real>(1) / norm));
  }
  return FockOperator<Complex<Real>>::from_columns(cols, BasisTag::fixed_point);
}

/// C|mu> = (-i)^{l(mu) - n}|mu~>.
template <class Real>
FockOperator<Complex<Real>> c_operator(int n) {
  FockOperator<Complex<Real>> r(n, BasisTag::tilde, BasisTag::nakajima);
  const Complex<Real> minus_i(0, -1);
  for (std::size_t i = 0; i < r.dim(); ++i) r(i, i) = std::pow(minus_i, r.partitions()[i].length() - n);
  return r;
}

/// delta|mu> = prod (1 - q^mu_i)(1 - t^mu_i)|mu> on F~.
template <class Real>
FockOperator<Complex<Real>> delta_operator(int n, const Complex<Real>& q, const Complex<Real>& t) {
  FockOperator<Complex<Real>> r(n, BasisTag::tilde, BasisTag::tilde);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    Complex<Real> d(1);
    for (int k : r.partitions()[i].parts()) d *= (Complex<Real>(1) - std::pow(q, k)) * (Complex<Real>(1) - std::pow(t, k));
    r(i, i) = d;
  }
  return r;
}

}  // namespace hilbsym::fock
