#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hilbsym::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

Integer factorial(unsigned n);

/// Decimal "num/den" (or "num" when den == 1).
std::string to_string(const Rational& r);

/// Exact rational sign of (-1)^k.
inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace hilbsym::algebra
