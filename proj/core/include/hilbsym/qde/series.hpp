#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hilbsym/algebra/numeric.hpp"
#include "hilbsym/algebra/series.hpp"
#include "hilbsym/fock/classes.hpp"
#include "hilbsym/fock/pairing.hpp"

namespace hilbsym::qde {

using algebra::Complex;
using algebra::RatFunc;
using fock::FockOperator;
using fock::FockVector;
using fock::Params;
using partitions::Partition;

/// Y^lambda(q) = sum_d Y_d q^d with Y^lambda(q) q^{-c(lambda)} solving q dPhi/dq = M_D Phi.
template <class S>
struct SeriesSolution {
  Partition lambda;
  unsigned order = 0;
  std::vector<FockVector<S>> y;                 // Nakajima coefficients Y_0..Y_N
  std::vector<std::vector<S>> j_coordinates;    // Y_d = sum_nu a[d][nu] J^nu
};

/// Per-weight data shared by every series solve at fixed parameters.
template <class S>
struct SeriesData {
  int n = 0;
  Params<S> params;
  std::vector<Partition> parts;
  std::vector<FockVector<S>> j;      // J^nu
  std::vector<S> j_norm2;            // eta(J^nu, J^nu)
  std::vector<S> content;            // c(nu)
};

SeriesData<RatFunc> exact_series_data(int n);

template <class Real>
SeriesData<Complex<Real>> numeric_series_data(int n, const Complex<Real>& t1, const Complex<Real>& t2) {
  using C = Complex<Real>;
  SeriesData<C> d;
  d.n = n;
  d.params = {t1, t2};
  d.parts = partitions::enumerate(n);
  const auto at = fock::evaluation_point(t1, t2);
  for (const auto& nu : d.parts) {
    d.j.push_back(fock::evaluate<Real>(fock::fixed_point_class(nu), at));
    C w(1);
    for (const auto& f : partitions::tangent_weights(nu)) w *= f.template evaluate<Real>(t1, t2);
    d.j_norm2.push_back(w);
    d.content.push_back(partitions::content_sum(nu).template evaluate<Real>(t1, t2));
  }
  return d;
}

/// Integer part of the diagonal of M^(d), d >= 1: (-1)^d (n - sum_{k | d} k^2 m_k).
long series_diagonal(const Partition& mu, unsigned d);

/// Solves (d - c(lambda) - M^(0)) Y_d = sum_{d' >= 1} M^(d') Y_{d-d'} in J-coordinates.
template <class S>
SeriesSolution<S> series_solve(const SeriesData<S>& data, const Partition& lambda, unsigned order) {
  using fock::make_scalar;
  const std::size_t dim = data.parts.size();
  std::size_t pos = dim;
  for (std::size_t i = 0; i < dim; ++i)
    if (data.parts[i] == lambda) pos = i;
  if (pos == dim) throw std::invalid_argument("partition of the wrong size for the series data");

  SeriesSolution<S> sol;
  sol.lambda = lambda;
  sol.order = order;
  sol.y.push_back(data.j[pos]);
  std::vector<S> a0(dim, make_scalar<S>(algebra::Rational(0)));
  a0[pos] = make_scalar<S>(algebra::Rational(1));
  sol.j_coordinates.push_back(a0);

  const S t_sum = data.params.t1 + data.params.t2;
  std::vector<std::vector<S>> diag(order + 1);
  for (unsigned d = 1; d <= order; ++d)
    for (const auto& mu : data.parts) diag[d].push_back(t_sum * make_scalar<S>(algebra::Rational(series_diagonal(mu, d))));

  for (unsigned d = 1; d <= order; ++d) {
    FockVector<S> rhs(data.n);
    for (unsigned dp = 1; dp <= d; ++dp) {
      const FockVector<S>& prev = sol.y[d - dp];
      for (std::size_t i = 0; i < dim; ++i) rhs[i] += diag[dp][i] * prev[i];
    }
    std::vector<S> a(dim, make_scalar<S>(algebra::Rational(0)));
    FockVector<S> yd(data.n);
    for (std::size_t nu = 0; nu < dim; ++nu) {
      const S proj = fock::eta(data.j[nu], rhs, data.params);
      if (algebra::scalar_is_zero_generic(proj)) continue;
      const S shift = make_scalar<S>(algebra::Rational(static_cast<long>(d))) - data.content[pos] + data.content[nu];
      a[nu] = proj / (data.j_norm2[nu] * shift);
      yd += data.j[nu].scaled(a[nu]);
    }
    sol.y.push_back(std::move(yd));
    sol.j_coordinates.push_back(std::move(a));
  }
  return sol;
}

/// Exact solve over Q(t1, t2).
SeriesSolution<RatFunc> series_solve(const Partition& lambda, unsigned order);

/// Exact solves for every partition of n, in parallel.
std::vector<SeriesSolution<RatFunc>> series_solve_all(int n, unsigned order);

/// True when sum_d (d - c(lambda)) Y_d q^d - M_D(q) Y(q) vanishes through order N, using the full M^(d) operators.
bool series_residual_vanishes(const SeriesSolution<RatFunc>& sol);

/// q-coefficients 0..N of <Y^a(q), Y^b(q)>_H.
std::vector<RatFunc> hermitian_series(const SeriesSolution<RatFunc>& a, const SeriesSolution<RatFunc>& b);

}  // namespace hilbsym::qde
