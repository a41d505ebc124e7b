#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <complex>
#include <type_traits>

#include "hilbsym/algebra/rational.hpp"

namespace hilbsym::algebra {

/// 113-bit binary floating point (IEEE quad) used by the extended precision mode.
using Float128 = boost::multiprecision::float128;

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
Real to_real(const Integer& v);

template <class Real>
Real to_real(const Rational& v) {
  if constexpr (std::is_same_v<Real, double>) {
    return v.get_d();
  } else {
    return to_real<Real>(v.get_num()) / to_real<Real>(v.get_den());
  }
}

template <>
inline double to_real<double>(const Integer& v) {
  return v.get_d();
}

template <>
inline Float128 to_real<Float128>(const Integer& v) {
  if (v.fits_slong_p()) return Float128(v.get_si());
  return Float128(v.get_str());
}

template <class T>
struct is_complex : std::false_type {};
template <class R>
struct is_complex<std::complex<R>> : std::true_type {};

/// Converts an exact rational into a scalar type (Rational, a real type, or a complex type).
template <class S>
S from_rational(const Rational& c) {
  if constexpr (std::is_same_v<S, Rational>) {
    return c;
  } else if constexpr (is_complex<S>::value) {
    return S(to_real<typename S::value_type>(c));
  } else {
    return to_real<S>(c);
  }
}

template <class Real>
constexpr Real pi() {
  if constexpr (std::is_same_v<Real, double>) {
    return 3.141592653589793238462643383279502884;
  } else {
    return boost::math::constants::pi<Real>();
  }
}

}  // namespace hilbsym::algebra
