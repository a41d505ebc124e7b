#pragma once

#include "hilbsym/algebra/numeric.hpp"
#include "hilbsym/partitions/partition.hpp"

namespace hilbsym::integral {

using algebra::Complex;
using partitions::Partition;

/// Relative agreement demanded between two routes to the same quantity.
inline constexpr double kTwoRouteTolerance = 1e-9;

/// Thrown when two independent routes to one quantity disagree; signals a bug.
class RouteDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class Real>
Real relative_difference(const Complex<Real>& a, const Complex<Real>& b) {
  using std::abs;
  const Real scale = std::max(abs(a), abs(b));
  return scale == Real(0) ? Real(0) : Real(abs(a - b) / scale);
}

/// prod over tangent weights w at lambda of Gamma(1 + s w).
template <class Real>
Complex<Real> gamma_hilb(const Partition& lambda, const Complex<Real>& t1, const Complex<Real>& t2,
                         const Complex<Real>& s = Complex<Real>(1)) {
  Complex<Real> g(1);
  for (const auto& w : partitions::tangent_weights(lambda)) g *= algebra::cgamma(Real(1) + s * w.template evaluate<Real>(t1, t2));
  return g;
}

/// Gamma_Sym on I_mu as the eigenbundle product prod_i prod_{l < mu_i} Gamma(1 - l/mu_i + t1) Gamma(1 - l/mu_i + t2).
template <class Real>
Complex<Real> gamma_sym_eigenbundle(const Partition& mu, const Complex<Real>& t1, const Complex<Real>& t2) {
  Complex<Real> g(1);
  for (int m : mu.parts())
    for (int l = 0; l < m; ++l) {
      const Real shift = Real(1) - Real(l) / Real(m);
      g *= algebra::cgamma(shift + t1) * algebra::cgamma(shift + t2);
    }
  return g;
}

/// (t1 t2)^l (2 pi)^{n - l} prod mu_i prod mu_i^{-mu_i (t1 + t2)} prod Gamma(mu_i t1) Gamma(mu_i t2).
template <class Real>
Complex<Real> gamma_sym_closed(const Partition& mu, const Complex<Real>& t1, const Complex<Real>& t2) {
  using std::log;
  Complex<Real> g = std::pow(t1 * t2, mu.length()) * std::pow(Complex<Real>(Real(2) * algebra::pi<Real>()), mu.size() - mu.length());
  for (int m : mu.parts()) {
    const Real rm(m);
    g *= rm * std::exp(-rm * (t1 + t2) * log(rm)) * algebra::cgamma(rm * t1) * algebra::cgamma(rm * t2);
  }
  return g;
}

/// The eigenbundle value, after checking it against the closed form.
template <class Real>
Complex<Real> gamma_sym(const Partition& mu, const Complex<Real>& t1, const Complex<Real>& t2) {
  const Complex<Real> a = gamma_sym_eigenbundle(mu, t1, t2);
  const Complex<Real> b = gamma_sym_closed(mu, t1, t2);
  if (relative_difference(a, b) > Real(kTwoRouteTolerance)) throw RouteDisagreement("Gamma_Sym routes disagree at " + mu.to_string());
  return a;
}

/// |Gamma(x) Gamma(1 - x) sin(pi x) / pi - 1|.
template <class Real>
Real gamma_reflection_defect(const Complex<Real>& x) {
  const Real p = algebra::pi<Real>();
  return relative_difference(algebra::cgamma(x) * algebra::cgamma(Real(1) - x) * std::sin(p * x), Complex<Real>(p));
}

/// Gauss multiplication: prod_{k < m} Gamma(x + k/m) against (2 pi)^{(m-1)/2} m^{1/2 - m x} Gamma(m x).
template <class Real>
Real gamma_multiplication_defect(const Complex<Real>& x, int m) {
  using std::log;
  Complex<Real> lhs(1);
  for (int k = 0; k < m; ++k) lhs *= algebra::cgamma(x + Real(k) / Real(m));
  const Real rm(m);
  const Complex<Real> rhs = std::pow(Complex<Real>(Real(2) * algebra::pi<Real>()), (rm - Real(1)) / Real(2)) *
                            std::exp((Real(0.5) - rm * x) * log(rm)) * algebra::cgamma(rm * x);
  return relative_difference(lhs, rhs);
}

/// Gamma(t)(1 - e^{-2 pi i t}) against -e^{-pi i t} 2 pi i / (t Gamma(-t)).
template <class Real>
Real gamma_phase_defect(const Complex<Real>& t) {
  const Complex<Real> pi_i(0, algebra::pi<Real>());
  const Complex<Real> lhs = algebra::cgamma(t) * (Real(1) - std::exp(Real(-2) * pi_i * t));
  const Complex<Real> rhs = -std::exp(-pi_i * t) * Real(2) * pi_i / (t * algebra::cgamma(-t));
  return relative_difference(lhs, rhs);
}

}  // namespace hilbsym::integral
