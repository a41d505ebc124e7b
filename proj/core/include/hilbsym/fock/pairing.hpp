#pragma once

#include <stdexcept>

#include "hilbsym/fock/fock_vector.hpp"

namespace hilbsym::fock {

/// Values of the equivariant parameters in the scalar ring S.
template <class S>
struct Params {
  S t1;
  S t2;
};

Params<RatFunc> symbolic_params();

/// 1 / ((t1 t2)^l(mu) z(mu)).
template <class S>
S tilde_weight(const Partition& mu, const Params<S>& p) {
  S tt = make_scalar<S>(Rational(1));
  for (int i = 0; i < mu.length(); ++i) tt = tt * p.t1 * p.t2;
  return make_scalar<S>(Rational(1)) / (tt * make_scalar<S>(Rational(partitions::zfactor(mu))));
}

/// (-1)^{|mu| - l(mu)} / ((t1 t2)^l(mu) z(mu)).
template <class S>
S eta_weight(const Partition& mu, const Params<S>& p) {
  const S w = tilde_weight(mu, p);
  return (mu.size() - mu.length()) % 2 == 0 ? w : make_scalar<S>(Rational(-1)) * w;
}

namespace detail {

template <class S, class W>
S diagonal_pairing(const FockVector<S>& x, const FockVector<S>& y, BasisTag expected, W weight) {
  x.check_compatible(y);
  if (x.tag() != expected) throw std::invalid_argument("pairing applied in the wrong basis");
  S acc = make_scalar<S>(Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i] * weight(x.partition(i));
  return acc;
}

}  // namespace detail

template <class S>
S eta(const FockVector<S>& x, const FockVector<S>& y, const Params<S>& p) {
  return detail::diagonal_pairing(x, y, BasisTag::nakajima, [&](const Partition& mu) { return eta_weight(mu, p); });
}

template <class S>
S eta_tilde(const FockVector<S>& x, const FockVector<S>& y, const Params<S>& p) {
  return detail::diagonal_pairing(x, y, BasisTag::tilde, [&](const Partition& mu) { return tilde_weight(mu, p); });
}

/// Sesquilinear pairing sum_mu x_mu bar(y_mu) / ((t1 t2)^l z), bar: (t1, t2) -> (-t1, -t2). Exact layer only.
RatFunc hermitian(const FockVector<RatFunc>& x, const FockVector<RatFunc>& y);

/// alpha_k for k != 0: alpha_{-k}|mu> = k (m_k + 1)|mu + k>, alpha_k|mu> = |mu - k>.
template <class S>
FockVector<S> alpha(int k, const FockVector<S>& x) {
  if (k == 0) throw std::invalid_argument("alpha_0 is not part of the algebra");
  if (x.tag() != BasisTag::nakajima) throw std::invalid_argument("alpha acts in the Nakajima basis");
  if (k > 0) {
    if (x.n() < k) throw std::invalid_argument("annihilation below weight zero");
    FockVector<S> r(x.n() - k);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x.partition(i).contains_part(k)) r.at(x.partition(i).without_part(k)) += x[i];
    return r;
  }
  const int c = -k;
  FockVector<S> r(x.n() + c);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Partition& mu = x.partition(i);
    const S f = make_scalar<S>(Rational(static_cast<long>(c) * (mu.multiplicity(c) + 1)));
    r.at(mu.with_part(c)) += f * x[i];
  }
  return r;
}

}  // namespace hilbsym::fock
