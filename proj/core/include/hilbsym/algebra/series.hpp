#pragma once

#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "hilbsym/algebra/ratfunc.hpp"

namespace hilbsym::algebra {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const MultiPoly& x) { return x.is_zero(); }
inline bool scalar_is_zero(const RatFunc& x) { return x.is_zero(); }

/// Power series c_0 + c_1 x + ... + c_N x^N truncated at order N (inclusive).
template <class S>
class TruncSeries {
 public:
  TruncSeries(std::string var, unsigned order) : var_(std::move(var)), coeffs_(order + 1, S(0)) {}
  TruncSeries(std::string var, unsigned order, std::vector<S> coeffs) : var_(std::move(var)) {
    if (coeffs.size() > order + 1) throw std::invalid_argument("more coefficients than the truncation order admits");
    coeffs.resize(order + 1, S(0));
    coeffs_ = std::move(coeffs);
  }

  const std::string& var() const { return var_; }
  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const S& operator[](unsigned k) const { return coeffs_.at(k); }
  S& operator[](unsigned k) { return coeffs_.at(k); }
  const std::vector<S>& coefficients() const { return coeffs_; }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(a.common_var(b), std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(a.common_var(b), std::min(a.order(), b.order()));
    for (unsigned k = 0; k <= r.order(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(a.common_var(b), std::min(a.order(), b.order()));
    for (unsigned i = 0; i <= r.order(); ++i) {
      if (scalar_is_zero(a.coeffs_[i])) continue;
      for (unsigned j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplicative inverse; the constant term must be invertible.
  TruncSeries inverse() const {
    if (scalar_is_zero(coeffs_[0])) throw std::domain_error("series with non-invertible constant term");
    TruncSeries r(var_, order());
    const S inv0 = S(1) / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (unsigned k = 1; k <= order(); ++k) {
      S acc(0);
      for (unsigned j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -(acc * inv0);
    }
    return r;
  }

  /// x d/dx.
  TruncSeries euler_derivative() const {
    TruncSeries r(var_, order());
    for (unsigned k = 1; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * S(static_cast<long>(k));
    return r;
  }

  /// Horner evaluation after mapping each coefficient with `convert`.
  template <class T, class Convert>
  T evaluate(const T& x, Convert convert) const {
    T acc = convert(coeffs_.back());
    for (unsigned k = order(); k-- > 0;) acc = acc * x + convert(coeffs_[k]);
    return acc;
  }

 private:
  const std::string& common_var(const TruncSeries& o) const {
    if (var_ != o.var_) throw std::invalid_argument("series in different variables");
    return var_;
  }

  std::string var_;
  std::vector<S> coeffs_;
};

}  // namespace hilbsym::algebra

namespace hilbsym::algebra {

/// Exact zero test for exact scalars and a literal zero test for floating-point ones.
template <class S>
bool scalar_is_zero_generic(const S& x) {
  if constexpr (std::is_same_v<S, Rational> || std::is_same_v<S, MultiPoly> || std::is_same_v<S, RatFunc>) {
    return scalar_is_zero(x);
  } else {
    return x == S(0);
  }
}

}  // namespace hilbsym::algebra
