#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hilbsym/algebra/numeric.hpp"

namespace hilbsym::algebra {

/// Annuli for seeded parameters and the distance kept from degenerate loci.
struct SamplingRules {
  double t_min = 0.3;
  double t_max = 1.2;
  double z_min = 0.8;
  double z_max = 1.5;
  double margin = 0.05;
};

template <class Real>
struct SampledContext {
  NumericContext<Real> ctx;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
};

namespace detail {

/// Uniform double in [0, 1) from the top 53 bits, independent of the standard library.
inline double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::complex<double> annulus_point(std::mt19937_64& rng, double r_min, double r_max) {
  const double r = r_min + (r_max - r_min) * unit_uniform(rng);
  const double theta = 2 * M_PI * unit_uniform(rng);
  return std::polar(r, theta);
}

inline bool near_integer(const std::complex<double>& x, int bound, double margin) {
  for (int k = -bound; k <= bound; ++k)
    if (std::abs(x - std::complex<double>(k)) < margin) return true;
  return false;
}

}  // namespace detail

/// Whether a t1 + b t2, its quotient by z, and the Gamma arguments of the suite stay off the integers, |a|, |b| <= n_max.
inline bool context_is_generic(const std::complex<double>& t1, const std::complex<double>& t2, const std::complex<double>& z, int n_max,
                               double margin) {
  const int bound = 3 * n_max + 1;
  for (int a = -n_max; a <= n_max; ++a)
    for (int b = -n_max; b <= n_max; ++b) {
      if (a == 0 && b == 0) continue;
      const std::complex<double> w = double(a) * t1 + double(b) * t2;
      if (detail::near_integer(w, bound, margin) || detail::near_integer(w / z, bound, margin)) return false;
    }
  return true;
}

/// mt19937_64(seed) draws t1, t2, z uniformly on the annuli by radius and angle, redrawing until generic.
template <class Real>
SampledContext<Real> sample_context(std::uint64_t seed, int n_max, Branch branch = Branch::minus_pi, double tol = 1e-10,
                                    const SamplingRules& rules = {}) {
  std::mt19937_64 rng(seed);
  SampledContext<Real> out;
  out.seed = seed;
  for (;;) {
    ++out.attempts;
    const auto t1 = detail::annulus_point(rng, rules.t_min, rules.t_max);
    const auto t2 = detail::annulus_point(rng, rules.t_min, rules.t_max);
    const auto z = detail::annulus_point(rng, rules.z_min, rules.z_max);
    if (!context_is_generic(t1, t2, z, n_max, rules.margin)) continue;
    auto lift = [](const std::complex<double>& x) { return Complex<Real>(Real(x.real()), Real(x.imag())); };
    out.ctx = NumericContext<Real>{lift(t1), lift(t2), lift(z), branch, tol};
    return out;
  }
}

}  // namespace hilbsym::algebra
