#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbsym/algebra/rational.hpp"
#include "hilbsym/algebra/real.hpp"

namespace hilbsym::algebra {

/// Raised when a numeric evaluation hits a pole, a zero base, or a non-finite value.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sign of Im log q for q on the negative real axis.
enum class Branch { plus_pi, minus_pi };

std::string to_string(Branch b);
Branch branch_from_string(const std::string& s);

enum class Precision { f64, ext };

template <class Real>
struct NumericContext {
  Complex<Real> t1;
  Complex<Real> t2;
  Complex<Real> z;
  Branch branch = Branch::minus_pi;
  double tol = 1e-10;
};

template <class Real>
Real machine_epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
void require_finite(const Complex<Real>& x, const char* what) {
  using std::isfinite;
  if (!isfinite(x.real()) || !isfinite(x.imag())) throw DomainError(std::string("non-finite value in ") + what);
}

/// log with the principal branch, except that a negative real argument gets Im = +-pi per `branch`.
template <class Real>
Complex<Real> log_branch(const Complex<Real>& x, Branch branch) {
  if (x == Complex<Real>(0)) throw DomainError("log of zero");
  if (x.imag() == Real(0) && x.real() < Real(0)) {
    using std::log;
    const Real sign = branch == Branch::plus_pi ? Real(1) : Real(-1);
    return {log(-x.real()), sign * pi<Real>()};
  }
  return std::log(x);
}

/// base^exponent = exp(exponent * log base) with `log_branch`.
template <class Real>
Complex<Real> cpow(const Complex<Real>& base, const Complex<Real>& exponent, Branch branch) {
  if (base == Complex<Real>(0)) {
    if (exponent.real() > Real(0)) return Complex<Real>(0);
    throw DomainError("zero base with non-positive exponent");
  }
  if (base == Complex<Real>(1)) return Complex<Real>(1);
  Complex<Real> r = std::exp(exponent * log_branch(base, branch));
  require_finite(r, "cpow");
  return r;
}

namespace detail {

/// B_2, B_4, ..., B_{2K} as exact rationals.
inline std::vector<Rational> even_bernoulli(unsigned count) {
  const unsigned m = 2 * count;
  std::vector<Rational> b(m + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    Rational acc = 0;
    Integer binom = 1;
    for (unsigned j = 0; j < k; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    b[k] = -acc / Rational(k + 1);
  }
  std::vector<Rational> out;
  for (unsigned k = 1; k <= count; ++k) out.push_back(b[2 * k]);
  return out;
}

template <class Real>
struct StirlingTable {
  Real shift_to;
  std::vector<Real> coeff;  // B_{2k} / (2k(2k-1))

  StirlingTable() {
    const bool wide = std::numeric_limits<Real>::digits > 60;
    shift_to = wide ? Real(40) : Real(15);
    const auto b = even_bernoulli(wide ? 22 : 11);
    for (std::size_t k = 1; k <= b.size(); ++k) {
      const Rational c = b[k - 1] / Rational(static_cast<long>(2 * k * (2 * k - 1)));
      coeff.push_back(to_real<Real>(c));
    }
  }
};

template <class Real>
const StirlingTable<Real>& stirling_table() {
  static const StirlingTable<Real> table;
  return table;
}

/// log Gamma(x) by the Stirling series; requires Re x >= shift_to.
template <class Real>
Complex<Real> lgamma_stirling(const Complex<Real>& x) {
  const auto& tab = stirling_table<Real>();
  using std::log;
  const Complex<Real> inv = Real(1) / x;
  const Complex<Real> inv2 = inv * inv;
  Complex<Real> sum(0);
  Complex<Real> p = inv;
  for (const Real& c : tab.coeff) {
    sum += c * p;
    p *= inv2;
  }
  const Real half_log_2pi = log(Real(2) * pi<Real>()) / Real(2);
  return (x - Real(0.5)) * std::log(x) - x + half_log_2pi + sum;
}

}  // namespace detail

/// Complex Gamma function: Stirling series after an upward shift, reflection for Re x < 1/2.
template <class Real>
Complex<Real> cgamma(const Complex<Real>& x) {
  using std::abs;
  using std::floor;
  require_finite(x, "cgamma argument");
  const Real nearest = floor(x.real() + Real(0.5));
  if (nearest <= Real(0) && std::abs(x - Complex<Real>(nearest)) < Real(1e3) * machine_epsilon<Real>() * (Real(1) + abs(nearest)))
    throw DomainError("Gamma evaluated at a pole");
  if (x.real() < Real(0.5)) {
    const Complex<Real> s = std::sin(pi<Real>() * x);
    return pi<Real>() / (s * cgamma(Complex<Real>(Real(1)) - x));
  }
  const auto& tab = detail::stirling_table<Real>();
  Complex<Real> y = x;
  Complex<Real> denom(1);
  while (y.real() < tab.shift_to) {
    denom *= y;
    y += Real(1);
  }
  Complex<Real> r = std::exp(detail::lgamma_stirling(y)) / denom;
  require_finite(r, "cgamma");
  return r;
}

/// Relative deviation |a - b| / max(|a|, |b|), zero when both vanish.
template <class Real>
Real relative_deviation(const Complex<Real>& a, const Complex<Real>& b) {
  using std::abs;
  const Real scale = std::max(abs(a), abs(b));
  if (scale == Real(0)) return Real(0);
  return abs(a - b) / scale;
}

}  // namespace hilbsym::algebra
