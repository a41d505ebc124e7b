#pragma once

#include <boost/multiprecision/float128.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "hilbsym/algebra/numeric.hpp"
#include "hilbsym/fock/classes.hpp"
#include "hilbsym/fock/energy.hpp"
#include "hilbsym/qde/series.hpp"
#include "hilbsym/symfun/symfunc.hpp"

namespace boost::numeric::odeint::detail {
template <>
struct extract_value_type<boost::multiprecision::float128, void> {
  using type = boost::multiprecision::float128;
};
}  // namespace boost::numeric::odeint::detail

namespace hilbsym::qde {

using algebra::Matrix;
using algebra::NumericContext;
using algebra::Rational;
using fock::BasisTag;

template <class Real>
struct SeriesEvaluation {
  FockOperator<Complex<Real>> s;
  unsigned order = 0;
  Real tail_estimate = 0;  // relative to the largest column norm
};

template <class Real>
Real column_norm(const FockVector<Complex<Real>>& v) {
  Real acc(0);
  for (const auto& c : v.coefficients()) acc += std::norm(c);
  using std::sqrt;
  return sqrt(acc);
}

/// Geometric-ratio bound on sum_{d > N} |Y_d| |q|^d from the last computed terms.
template <class Real>
Real tail_bound(const std::vector<FockVector<Complex<Real>>>& y, Real abs_q) {
  const std::size_t n = y.size();
  if (n < 6) return std::numeric_limits<Real>::infinity();
  Real ratio(0);
  for (std::size_t d = n - 5; d < n; ++d) {
    const Real prev = column_norm(y[d - 1]);
    const Real cur = column_norm(y[d]);
    if (prev == Real(0)) {
      if (cur != Real(0)) return std::numeric_limits<Real>::infinity();
      continue;
    }
    ratio = std::max(ratio, abs_q * cur / prev);
  }
  if (ratio >= Real(1)) return std::numeric_limits<Real>::infinity();
  using std::pow;
  return column_norm(y.back()) * pow(abs_q, static_cast<int>(n - 1)) * ratio / (Real(1) - ratio);
}

/// S(q0) = Theta Y_z L^{-1} L0(q0): column lambda is Theta Y^lambda(t/z; q0) z^n q0^{-c(lambda)/z} / ||J^lambda||.
/// The order grows until the tail estimate is below `tail_target`.
template <class Real>
SeriesEvaluation<Real> fundamental_s(int n, const NumericContext<Real>& ctx, const Complex<Real>& q0, Real tail_target,
                                     unsigned min_order = 20, unsigned max_order = 400) {
  using C = Complex<Real>;
  const C tz1 = ctx.t1 / ctx.z;
  const C tz2 = ctx.t2 / ctx.z;
  const SeriesData<C> data = numeric_series_data<Real>(n, tz1, tz2);
  const auto theta = fock::theta<Real>(n, ctx.z);
  const C log_q = algebra::log_branch(q0, ctx.branch);
  using std::abs;
  SeriesEvaluation<Real> out{FockOperator<C>(n, BasisTag::nakajima, BasisTag::fixed_point), 0, Real(0)};
  for (std::size_t col = 0; col < data.parts.size(); ++col) {
    const Partition& lam = data.parts[col];
    unsigned order = min_order;
    SeriesSolution<C> sol;
    Real tail(0);
    while (true) {
      sol = series_solve(data, lam, order);
      FockVector<C> sum(n);
      for (auto it = sol.y.rbegin(); it != sol.y.rend(); ++it) sum = sum.scaled(q0) + *it;
      tail = tail_bound(sol.y, abs(q0)) / std::max(column_norm(sum), std::numeric_limits<Real>::min());
      if (tail < tail_target) {
        const C factor = std::pow(ctx.z, n) * std::exp(-data.content[col] * log_q) /
                         fock::fixed_point_norm(lam, ctx.t1, ctx.t2);
        const auto v = theta.apply(sum).scaled(factor);
        for (std::size_t i = 0; i < v.size(); ++i) out.s(i, col) = v[i];
        break;
      }
      if (order >= max_order) throw algebra::DomainError("series tail bound violated at the handoff point");
      order = std::min(max_order, order + 20);
    }
    out.order = std::max(out.order, order);
    out.tail_estimate = std::max(out.tail_estimate, tail);
  }
  return out;
}

template <class Real>
struct StepStatistics {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  Real min_step = 0;
  Real max_step = 0;
  Real error_estimate = 0;  // accepted steps x tolerance x max |Phi|
};

template <class Real>
struct RayIntegration {
  FockOperator<Complex<Real>> phi;
  StepStatistics<Real> stats;
};

namespace detail {

/// Precomputed pieces of M_D(-s): the s-independent cut-and-join part and the k m_k table.
template <class Real>
struct EnergyPieces {
  int n;
  std::size_t dim;
  Matrix<Complex<Real>> off;
  std::vector<std::vector<std::pair<int, int>>> mults;
  Complex<Real> t_sum;

  EnergyPieces(int n_, const Complex<Real>& t1, const Complex<Real>& t2) : n(n_), t_sum(t1 + t2) {
    using C = Complex<Real>;
    const auto m = fock::energy_operator<C>(n, t1, t2, [](int) { return C(0); });
    off = m.matrix();
    dim = m.dim();
    for (const auto& mu : m.partitions()) mults.push_back(mu.multiplicities());
  }

  Matrix<Complex<Real>> at(Real s) const {
    using C = Complex<Real>;
    Matrix<C> m = off;
    std::vector<C> f(static_cast<std::size_t>(n) + 1, C(0));
    for (int k = 2; k <= n; ++k) f[static_cast<std::size_t>(k)] = fock::regularized_coefficient<C>(k, C(s));
    for (std::size_t i = 0; i < dim; ++i) {
      C d(0);
      for (const auto& [k, mult] : mults[i]) d += Real(k * mult) * f[static_cast<std::size_t>(k)];
      m(i, i) += t_sum * d;
    }
    return m;
  }
};

}  // namespace detail

/// Integrates z s dPhi/ds = M_D(q = -s) Phi from s = -q0 to s = 1 with an adaptive Dormand-Prince pair.
template <class Real>
RayIntegration<Real> integrate_ray(const FockOperator<Complex<Real>>& phi0, const NumericContext<Real>& ctx, Real s0, Real tol) {
  namespace ode = boost::numeric::odeint;
  using C = Complex<Real>;
  using State = std::vector<Real>;
  const int n = phi0.n();
  const detail::EnergyPieces<Real> pieces(n, ctx.t1, ctx.t2);
  const std::size_t dim = phi0.dim();
  auto unpack = [dim](const State& x) {
    Matrix<C> m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = C(x[2 * (i * dim + j)], x[2 * (i * dim + j) + 1]);
    return m;
  };
  auto rhs = [&](const State& x, State& dx, Real s) {
    const Matrix<C> prod = pieces.at(s) * unpack(x);
    const C scale = C(1) / (ctx.z * s);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const C v = scale * prod(i, j);
        dx[2 * (i * dim + j)] = v.real();
        dx[2 * (i * dim + j) + 1] = v.imag();
      }
  };
  State x(2 * dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      x[2 * (i * dim + j)] = phi0(i, j).real();
      x[2 * (i * dim + j) + 1] = phi0(i, j).imag();
    }
  auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_dopri5<State, Real, State, Real>());
  StepStatistics<Real> stats;
  stats.min_step = std::numeric_limits<Real>::infinity();
  Real s = s0;
  const Real end(1);
  Real dt = (end - s0) / Real(100);
  Real max_abs(0);
  using std::abs;
  while (s < end) {
    if (s + dt > end) dt = end - s;
    const Real before = s;
    if (stepper.try_step(rhs, x, s, dt) == ode::success) {
      ++stats.accepted;
      const Real h = s - before;
      stats.min_step = std::min(stats.min_step, h);
      stats.max_step = std::max(stats.max_step, h);
      for (const Real& v : x) max_abs = std::max(max_abs, abs(v));
    } else {
      ++stats.rejected;
      if (dt < Real(1e3) * std::numeric_limits<Real>::epsilon()) throw algebra::DomainError("step size underflow on the ray");
    }
  }
  stats.error_estimate = Real(stats.accepted) * tol * std::max(max_abs, Real(1));
  return {FockOperator<C>(n, phi0.row_tag(), phi0.col_tag(), unpack(x)), stats};
}

/// The matrix of K in the Nakajima basis from the closed formula; H^lambda_z = H~_lambda at (e^{2 pi i t1/z}, e^{2 pi i t2/z}).
template <class Real>
FockOperator<Complex<Real>> k_formula(int n, const Complex<Real>& t1, const Complex<Real>& t2, const Complex<Real>& z) {
  using C = Complex<Real>;
  const C two_pi_i(0, 2 * algebra::pi<Real>());
  const auto parts = partitions::enumerate(n);
  std::array<C, algebra::kNumVars> at{};
  at[static_cast<std::size_t>(algebra::Var::q)] = std::exp(two_pi_i * t1 / z);
  at[static_cast<std::size_t>(algebra::Var::t)] = std::exp(two_pi_i * t2 / z);
  // Gamma operator on |mu>, including Theta.
  std::vector<C> gamma_theta;
  for (const auto& mu : parts) {
    C g = std::pow(two_pi_i, mu.length()) * std::pow(z, mu.length());
    for (int m : mu.parts()) {
      using std::log;
      const Real lm = log(Real(m));
      g *= std::exp(Real(m) * (t1 + t2) / z * lm) /
           (Real(m) * algebra::cgamma(Real(m) * t1 / z) * algebra::cgamma(Real(m) * t2 / z));
    }
    gamma_theta.push_back(g);
  }
  std::vector<FockVector<C>> cols;
  for (const auto& lam : parts) {
    C pre = std::pow(z, n) / std::pow(two_pi_i, n);
    for (const auto& w : partitions::tangent_weights(lam)) pre *= algebra::cgamma(w.template evaluate<Real>(t1, t2) / z + Real(1));
    const symfun::SymFunc h = symfun::convert(symfun::macdonald_modified(lam), symfun::Basis::p);
    FockVector<C> v(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& c = h.coefficient(parts[i]);
      if (c.is_zero()) continue;
      const C hv = c.template evaluate<C>(at) * algebra::to_real<Real>(Rational(partitions::zfactor(parts[i])));
      v[i] = pre * gamma_theta[i] * hv;
    }
    cols.push_back(v);
  }
  const auto images = FockOperator<C>::from_columns(cols, BasisTag::fixed_point);
  const auto jm = fock::evaluate<Real>(fock::fixed_point_matrix(n), fock::evaluation_point(t1, t2));
  return images * fock::inverse(jm);
}

/// Max over entries of |a - b| / max(|a|, |b|); entries below `floor` times the largest entry compare absolutely against it.
template <class Real>
Real entrywise_deviation(const FockOperator<Complex<Real>>& a, const FockOperator<Complex<Real>>& b, Real floor = Real(1e-12)) {
  using std::abs;
  Real scale(0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) scale = std::max({scale, abs(a(i, j)), abs(b(i, j))});
  Real dev(0);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Real denom = std::max({abs(a(i, j)), abs(b(i, j)), floor * scale});
      if (denom > Real(0)) dev = std::max(dev, abs(a(i, j) - b(i, j)) / denom);
    }
  return dev;
}

template <class Real>
struct ConnectionResult {
  NumericContext<Real> ctx;
  FockOperator<Complex<Real>> b;
  FockOperator<Complex<Real>> k_oracle;
  FockOperator<Complex<Real>> k_formula;
  Real deviation = 0;
  unsigned series_order = 0;
  Real series_tail = 0;
  StepStatistics<Real> stats;
  Real q0 = 0;
};

/// B = S(-1) by series at q0 and continuation along the ray; K_oracle = B A^{-1}.
template <class Real>
ConnectionResult<Real> continue_to_minus_one(int n, const NumericContext<Real>& ctx, Real q0 = Real(-0.2)) {
  using C = Complex<Real>;
  if (!(q0 < Real(0) && q0 > Real(-0.5))) throw std::invalid_argument("handoff point must lie in (-0.5, 0)");
  const Real tol(ctx.tol);
  const auto series = fundamental_s<Real>(n, ctx, C(q0), Real(0.01) * tol);
  const auto ray = integrate_ray<Real>(series.s, ctx, -q0, tol);
  ConnectionResult<Real> r{ctx, ray.phi, ray.phi, ray.phi, Real(0), series.order, series.tail_estimate, ray.stats, q0};
  r.k_oracle = ray.phi * fock::inverse(fock::a_operator<Real>(n, ctx.t1, ctx.t2));
  r.k_formula = k_formula<Real>(n, ctx.t1, ctx.t2, ctx.z);
  r.deviation = entrywise_deviation(r.k_oracle, r.k_formula);
  return r;
}

/// max |(K(-z)^T E K(z) - E)_{ij}| / (|K(-z)|^T |E| |K(z)|)_{ij} with E = diag eta; the scale is the size of the summands.
template <class Real>
Real symplectic_defect(const FockOperator<Complex<Real>>& k_minus, const FockOperator<Complex<Real>>& k_plus,
                       const Complex<Real>& t1, const Complex<Real>& t2) {
  using C = Complex<Real>;
  using std::abs;
  std::vector<C> e;
  for (const auto& mu : k_plus.partitions()) e.push_back(fock::eta_weight<C>(mu, {t1, t2}));
  const std::size_t dim = e.size();
  Real dev(0);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      C sum = i == j ? -e[i] : C(0);
      Real scale = i == j ? Real(abs(e[i])) : Real(0);
      for (std::size_t k = 0; k < dim; ++k) {
        sum += k_minus(k, i) * e[k] * k_plus(k, j);
        scale += abs(k_minus(k, i)) * abs(e[k]) * abs(k_plus(k, j));
      }
      if (scale > Real(0)) dev = std::max(dev, Real(abs(sum)) / scale);
    }
  return dev;
}

/// Frobenius norm of K - Id.
template <class Real>
Real identity_defect(const FockOperator<Complex<Real>>& k) {
  return algebra::frobenius_norm(k.matrix() - Matrix<Complex<Real>>::identity(k.dim()));
}

}  // namespace hilbsym::qde
