#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hilbsym/algebra/matrix.hpp"
#include "hilbsym/algebra/ratfunc.hpp"
#include "hilbsym/partitions/partition.hpp"

namespace hilbsym::symfun {

using algebra::MultiPoly;
using algebra::RatFunc;
using algebra::Rational;
using partitions::Partition;

enum class Basis { p, m, s };

std::string to_string(Basis b);

/// Degree bound for exact constructions.
inline constexpr int kDefaultDegreeBound = 8;

/// Homogeneous symmetric function of degree n expanded in one of the p, m, s bases.
class SymFunc {
 public:
  SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}

  static SymFunc basis_element(Basis basis, const Partition& lambda);

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const std::map<Partition, RatFunc>& coefficients() const { return coeffs_; }
  RatFunc coefficient(const Partition& lambda) const;

  /// Adds c to the coefficient of lambda; zeros are never stored.
  void add(const Partition& lambda, const RatFunc& c);

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  SymFunc scaled(const RatFunc& c) const;
  /// Applies f to every coefficient.
  SymFunc map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;

  /// Equality as symmetric functions (compares in the p basis when bases differ).
  friend bool operator==(const SymFunc& a, const SymFunc& b);

  std::string to_string() const;

 private:
  Basis basis_;
  int degree_;
  std::map<Partition, RatFunc> coeffs_;
};

/// Exact change of basis.
SymFunc convert(const SymFunc& f, Basis target);

/// <p_l, p_m> = delta z_l prod (1 - q^{l_i}) / (1 - t^{l_i}) in the variables q and t.
RatFunc pairing_qt(const SymFunc& f, const SymFunc& g);
/// <p_l, p_m> = delta z_l alpha^{l(l)}.
RatFunc pairing_alpha(const SymFunc& f, const SymFunc& g);

/// Integral-form Jack polynomial J_lambda(alpha) in the p basis, coefficient of m_{1^n} equal to n!.
SymFunc jack_integral(const Partition& lambda);

/// Integral-form Macdonald polynomial J_lambda(q, t) in the p basis.
SymFunc macdonald_integral(const Partition& lambda);

/// Modified Macdonald polynomial H~_lambda(q, t) in the p basis.
SymFunc macdonald_modified(const Partition& lambda);

/// p_k -> rule(k) p_k, extended multiplicatively.
SymFunc plethysm_scale(const SymFunc& f, const std::function<RatFunc(int)>& rule);

/// The Murnaghan-Nakayama character chi^lambda(mu).
algebra::Integer character(const Partition& lambda, const Partition& mu);

/// Cached exact transition data for degree n; rows and columns follow partitions::enumerate(n).
struct TransitionTables {
  partitions::PartitionIndex index;
  algebra::Matrix<Rational> p_to_m;  // p_mu = sum_lambda p_to_m(mu, lambda) m_lambda
  algebra::Matrix<Rational> m_to_p;  // m_lambda = sum_mu m_to_p(lambda, mu) p_mu
  algebra::Matrix<Rational> s_to_p;  // s_lambda = sum_mu s_to_p(lambda, mu) p_mu
  algebra::Matrix<Rational> p_to_s;  // p_mu = sum_lambda p_to_s(mu, lambda) s_lambda

  explicit TransitionTables(int n);
};

/// Thread-safe, built once per degree.
std::shared_ptr<const TransitionTables> transition_tables(int n);

}  // namespace hilbsym::symfun
