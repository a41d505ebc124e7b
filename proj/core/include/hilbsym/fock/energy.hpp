#pragma once

#include <vector>

#include "hilbsym/algebra/numeric.hpp"
#include "hilbsym/fock/pairing.hpp"

namespace hilbsym::fock {

/// Matrix of (t1+t2) sum_k k m_k f_k on the diagonal plus the cut-and-join part, in the Nakajima basis.
/// `diag(k)` supplies f_k.
template <class S, class Diag>
FockOperator<S> energy_operator(int n, const S& t1, const S& t2, Diag diag) {
  FockOperator<S> m(n, BasisTag::nakajima, BasisTag::nakajima);
  const auto& index = m.index();
  const S half = make_scalar<S>(algebra::make_rational(1, 2));
  const S join = half * t1 * t2;
  const S t_sum = t1 + t2;
  for (std::size_t j = 0; j < index.size(); ++j) {
    const Partition& mu = index[j];
    S d = make_scalar<S>(Rational(0));
    for (const auto& [k, mult] : mu.multiplicities()) d += make_scalar<S>(Rational(static_cast<long>(k) * mult)) * diag(k);
    m(j, j) += t_sum * d;
    for (const auto& [part, mult] : mu.multiplicities()) {
      const Partition rest = mu.without_part(part);
      for (int k = 1; k < part; ++k) {
        const int l = part - k;
        const Partition r1 = rest.with_part(l);
        const Partition r2 = r1.with_part(k);
        const long f = static_cast<long>(l) * (rest.multiplicity(l) + 1) * k * (r1.multiplicity(k) + 1);
        m(index.index(r2), j) += join * make_scalar<S>(Rational(f));
      }
    }
    for (const auto& [k, mk] : mu.multiplicities()) {
      const Partition rest = mu.without_part(k);
      for (const auto& [l, ml] : rest.multiplicities()) {
        const Partition rest2 = rest.without_part(l);
        const int s = k + l;
        const long f = static_cast<long>(s) * (rest2.multiplicity(s) + 1);
        m(index.index(rest2.with_part(s)), j) -= half * make_scalar<S>(Rational(f));
      }
    }
  }
  return m;
}

/// M_D at q = 0, exact in Q(t1, t2).
FockOperator<RatFunc> m_d_at_zero(int n);

/// M_D(q) = sum_d M^(d) q^d for d = 0..order, exact in Q(t1, t2).
std::vector<FockOperator<RatFunc>> m_d_series(int n, unsigned order);

/// M_D with q kept as a variable, exact in Q(t1, t2, q).
FockOperator<RatFunc> m_d_symbolic(int n);

/// f_k(s) = (k/2)(s^k+1)/(s^k-1) - (1/2)(s+1)/(s-1) with s = -q, exact in q without cancellation.
RatFunc combined_coefficient(int k);

/// Numerator and denominator of combined_coefficient(k) over the common denominator 2((-q)^k - 1)(-q - 1).
struct CoefficientFraction {
  algebra::MultiPoly numerator;
  algebra::MultiPoly denominator;
};
CoefficientFraction combined_coefficient_fraction(int k);

/// Integer coefficients of R_k with (k-1)s^k - 2(s + ... + s^{k-1}) + (k-1) = (s-1)^2 R_k(s), lowest degree first.
const std::vector<long>& regularized_numerator(int k);

/// f_k(s) written as (s-1) R_k(s) / (2 (1 + s + ... + s^{k-1})), finite at s = 1.
template <class T>
T regularized_coefficient(int k, const T& s) {
  if (k == 1) return T(0);
  const auto& r = regularized_numerator(k);
  T rv(0);
  for (std::size_t i = r.size(); i-- > 0;) rv = rv * s + T(static_cast<double>(r[i]));
  T g(0);
  for (int j = 0; j < k; ++j) g = g * s + T(1);
  if (g == T(0)) throw algebra::DomainError("M_D evaluated at a pole");
  return (s - T(1)) * rv / (T(2) * g);
}

/// M_D at a numeric q, using the regularized diagonal so that q = -1 is an ordinary point.
template <class Real>
FockOperator<algebra::Complex<Real>> m_d_numeric(int n, const algebra::Complex<Real>& t1, const algebra::Complex<Real>& t2,
                                                 const algebra::Complex<Real>& q) {
  using C = algebra::Complex<Real>;
  const C s = -q;
  return energy_operator<C>(n, t1, t2, [&](int k) { return regularized_coefficient<C>(k, s); });
}

}  // namespace hilbsym::fock
