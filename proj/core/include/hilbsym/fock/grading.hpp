#pragma once

#include <functional>

#include "hilbsym/algebra/numeric.hpp"
#include "hilbsym/fock/fock_vector.hpp"

namespace hilbsym::fock {

enum class Side { hilb, sym };

/// A localized class as a function of the equivariant parameters.
template <class Real>
using ClassFunction = std::function<FockVector<algebra::Complex<Real>>(const algebra::Complex<Real>&, const algebra::Complex<Real>&)>;

/// Half of deg_0 of the basis vector |mu>: n - l(mu) on Hilb, 0 on Sym.
inline int half_deg0(Side side, const Partition& mu) {
  return side == Side::hilb ? mu.size() - mu.length() : 0;
}

/// Half of the (age-shifted) degree of |mu>, n - l(mu) on both sides.
inline int half_degree(const Partition& mu) { return mu.size() - mu.length(); }

/// s^{deg_0/2}: t_i -> s t_i in the coefficients and s^{half_deg0} on |mu>.
template <class Real>
ClassFunction<Real> deg0_power(Side side, ClassFunction<Real> f, const algebra::Complex<Real>& s) {
  using C = algebra::Complex<Real>;
  return [side, f = std::move(f), s](const C& t1, const C& t2) {
    auto v = f(s * t1, s * t2);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::pow(s, half_deg0(side, v.partition(i)));
    return v;
  };
}

/// z^{-mu} = z^{dim/2} z^{-deg/2}: coefficients at t/z, |mu> scaled by z^{n - (n - l(mu))}.
template <class Real>
ClassFunction<Real> mu_power(ClassFunction<Real> f, const algebra::Complex<Real>& z) {
  using C = algebra::Complex<Real>;
  return [f = std::move(f), z](const C& t1, const C& t2) {
    auto v = f(t1 / z, t2 / z);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= std::pow(z, v.n() - half_degree(v.partition(i)));
    return v;
  };
}

/// z^{rho} on a class supported at a single fixed point or component, where c_1 restricts to n(t1 + t2).
template <class Real>
ClassFunction<Real> rho_power(ClassFunction<Real> f, const algebra::Complex<Real>& z) {
  using C = algebra::Complex<Real>;
  return [f = std::move(f), z](const C& t1, const C& t2) {
    auto v = f(t1, t2);
    const C factor = std::exp(Real(v.n()) * (t1 + t2) * std::log(z));
    for (auto& c : v.coefficients()) c *= factor;
    return v;
  };
}

}  // namespace hilbsym::fock
