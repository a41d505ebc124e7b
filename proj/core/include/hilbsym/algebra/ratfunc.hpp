#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "hilbsym/algebra/multipoly.hpp"

namespace hilbsym::algebra {

/// Operands whose term-count product stays below this limit are reduced with a full gcd.
inline constexpr std::size_t kDefaultGcdTermLimit = 4096;

/// Exact rational function num / (f_1^e_1 ... f_k^e_k).
///
/// The denominator is kept as a product of primitive factors with positive leading
/// coefficient; variables appear as their own factors. Factors that divide the
/// numerator are cancelled after every operation. Equality cross-multiplies, so the
/// representation need not be canonical.
class RatFunc {
 public:
  using Factors = std::map<MultiPoly, unsigned>;

  RatFunc() = default;
  RatFunc(MultiPoly num);        // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c);    // NOLINT(google-explicit-constructor)
  RatFunc(long c);               // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)

  static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }
  /// num / den with den != 0; throws std::domain_error otherwise.
  static RatFunc fraction(const MultiPoly& num, const MultiPoly& den,
                          std::size_t gcd_term_limit = kDefaultGcdTermLimit);

  const MultiPoly& numerator() const { return num_; }
  const Factors& denominator_factors() const { return den_; }
  MultiPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// The polynomial value; throws std::logic_error if a denominator remains.
  const MultiPoly& as_polynomial() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(int k) const;

  /// (t1, t2) -> (-t1, -t2).
  RatFunc bar() const;
  RatFunc rescaled(Var v, const Rational& c) const;
  RatFunc swapped(Var a, Var b) const;
  /// x_v -> r.
  RatFunc substitute(Var v, const RatFunc& r) const;

  template <class S>
  S evaluate(const std::array<S, kNumVars>& values) const;

  std::string to_string() const;

 private:
  void divide_by_polynomial(const MultiPoly& p, unsigned exponent, std::size_t gcd_term_limit);
  void add_factor(const MultiPoly& f, unsigned exponent);
  void cancel();

  MultiPoly num_;
  Factors den_;
};

/// Sum of products of rational functions kept unreduced until the zero test.
///
/// Terms sharing a denominator are merged; is_zero() brings the rest onto the least
/// common denominator and inspects the numerator, with no factor cancellation.
class DeferredSum {
 public:
  void add_product(const RatFunc& a, const RatFunc& b, const RatFunc& c = RatFunc(1));
  bool is_zero() const;
  RatFunc value() const;

 private:
  MultiPoly combined_numerator(RatFunc::Factors& lcm) const;

  std::map<RatFunc::Factors, MultiPoly> groups_;
};

template <class S>
S RatFunc::evaluate(const std::array<S, kNumVars>& values) const {
  S den(1);
  for (const auto& [f, e] : den_) {
    const S v = f.evaluate(values);
    for (unsigned k = 0; k < e; ++k) den = den * v;
  }
  return num_.evaluate(values) / den;
}

}  // namespace hilbsym::algebra
