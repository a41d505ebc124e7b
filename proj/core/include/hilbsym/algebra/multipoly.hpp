#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbsym/algebra/rational.hpp"
#include "hilbsym/algebra/real.hpp"

namespace hilbsym::algebra {

/// The fixed variable universe. Lex order follows declaration order (t1 highest).
enum class Var : std::uint8_t { t1 = 0, t2, q, t, alpha, z };
inline constexpr std::size_t kNumVars = 6;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<std::uint16_t, kNumVars>;

/// Sparse multivariate polynomial over Q. No zero coefficients are stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c);             // NOLINT(google-explicit-constructor)
  MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}  // NOLINT

  static MultiPoly variable(Var v, unsigned power = 1);
  static MultiPoly monomial(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool involves(Var v) const { return degree(v) > 0; }
  /// Componentwise minimum exponent over all terms (the monomial content).
  Exponents min_exponents() const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& e) const;

  /// Coefficients c_i with p = sum_i c_i v^i.
  std::vector<MultiPoly> coefficients_in(Var v) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  /// Arbitrary but fixed total order, used to key factor tables.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b) { return a.terms_ < b.terms_; }

  MultiPoly pow(unsigned k) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Exponents& e) const;
  /// Divides every term by x^e; every term must be divisible.
  MultiPoly divided_by_monomial(const Exponents& e) const;
  /// Exact quotient when d divides *this, std::nullopt otherwise.
  std::optional<MultiPoly> exact_divide(const MultiPoly& d) const;

  /// Positive-leading rational c with (*this)/c having coprime integer coefficients.
  Rational content() const;
  MultiPoly primitive() const;

  /// The involution (t1, t2) -> (-t1, -t2).
  MultiPoly bar() const;
  MultiPoly swapped(Var a, Var b) const;
  /// p(x_v -> c * x_v) for a rational constant c.
  MultiPoly rescaled(Var v, const Rational& c) const;
  /// Homogeneous substitution x_v -> num/den, returned as the numerator of p(num/den)*den^degree(v).
  MultiPoly substituted(Var v, const MultiPoly& num, const MultiPoly& den) const;
  /// Partial derivative.
  MultiPoly derivative(Var v) const;

  template <class S>
  S evaluate(const std::array<S, kNumVars>& values) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

/// Greatest common divisor, normalized to be primitive with positive leading coefficient.
/// Recursive primitive polynomial remainder sequence over Z[vars].
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

template <class S>
S MultiPoly::evaluate(const std::array<S, kNumVars>& values) const {
  std::array<std::vector<S>, kNumVars> powers;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned d = degree(static_cast<Var>(v));
    powers[v].reserve(d + 1);
    powers[v].push_back(S(1));
    for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v]);
  }
  S acc(0);
  for (const auto& [e, c] : terms_) {
    S term = from_rational<S>(c);
    for (std::size_t v = 0; v < kNumVars; ++v)
      if (e[v] != 0) term = term * powers[v][e[v]];
    acc = acc + term;
  }
  return acc;
}

}  // namespace hilbsym::algebra
