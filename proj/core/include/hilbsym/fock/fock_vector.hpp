#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hilbsym/algebra/matrix.hpp"
#include "hilbsym/algebra/ratfunc.hpp"
#include "hilbsym/algebra/real.hpp"
#include "hilbsym/partitions/partition.hpp"

namespace hilbsym::fock {

using algebra::Matrix;
using algebra::RatFunc;
using algebra::Rational;
using partitions::Partition;
using partitions::PartitionIndex;

/// Which basis the coefficients refer to: |mu> in F, |mu> in the second copy F~, or the fixed-point basis e_lambda.
enum class BasisTag { nakajima, tilde, fixed_point };

std::string to_string(BasisTag tag);

/// Shared, immutable index of the partitions of n.
std::shared_ptr<const PartitionIndex> partition_index(int n);

/// Builds a scalar of type S from an exact rational.
template <class S>
S make_scalar(const Rational& c) {
  if constexpr (std::is_constructible_v<S, Rational> && !algebra::is_complex<S>::value) {
    return S(c);
  } else {
    return algebra::from_rational<S>(c);
  }
}

/// a + b i over a commutative ring S.
template <class S>
struct Gaussian {
  S re;
  S im;

  Gaussian() : re(0), im(0) {}
  Gaussian(S r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(S r, S i) : re(std::move(r)), im(std::move(i)) {}
  Gaussian(const Rational& c) : re(make_scalar<S>(c)), im(0) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long c) : re(make_scalar<S>(Rational(c))), im(0) {}  // NOLINT(google-explicit-constructor)

  /// i^k.
  static Gaussian i_power(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {S(1), S(0)};
      case 1: return {S(0), S(1)};
      case 2: return {-S(1), S(0)};
      default: return {S(0), -S(1)};
    }
  }

  Gaussian conj() const { return {re, -im}; }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  Gaussian operator-() const { return {-re, -im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    const S n = b.re * b.re + b.im * b.im;
    const Gaussian p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

/// Element of the weight-n part of a Fock space, coefficients ordered as enumerate(n).
template <class S>
class FockVector {
 public:
  explicit FockVector(int n, BasisTag tag = BasisTag::nakajima)
      : index_(partition_index(n)), tag_(tag), coeffs_(index_->size(), make_scalar<S>(Rational(0))) {}

  static FockVector basis_vector(const Partition& mu, BasisTag tag = BasisTag::nakajima) {
    FockVector v(mu.size(), tag);
    v.at(mu) = make_scalar<S>(Rational(1));
    return v;
  }

  int n() const { return index_->n(); }
  BasisTag tag() const { return tag_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Partition>& partitions() const { return index_->partitions(); }
  const Partition& partition(std::size_t i) const { return (*index_)[i]; }
  const PartitionIndex& index() const { return *index_; }

  S& operator[](std::size_t i) { return coeffs_[i]; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  S& at(const Partition& mu) { return coeffs_[index_->index(mu)]; }
  const S& at(const Partition& mu) const { return coeffs_[index_->index(mu)]; }
  const std::vector<S>& coefficients() const { return coeffs_; }
  std::vector<S>& coefficients() { return coeffs_; }

  FockVector with_tag(BasisTag tag) const {
    FockVector r = *this;
    r.tag_ = tag;
    return r;
  }

  FockVector& operator+=(const FockVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  FockVector scaled(const S& c) const {
    FockVector r = *this;
    for (auto& x : r.coeffs_) x = c * x;
    return r;
  }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    return a.n() == b.n() && a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
  }

  /// Coefficientwise map into another scalar type.
  template <class F>
  auto map(F f) const -> FockVector<std::decay_t<decltype(f(std::declval<const S&>()))>> {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    FockVector<T> r(n(), tag_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = f(coeffs_[i]);
    return r;
  }

  void check_compatible(const FockVector& o) const {
    if (n() != o.n()) throw std::invalid_argument("Fock vectors of different weight");
    if (tag_ != o.tag_) throw std::invalid_argument("Fock vectors in different bases");
  }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  BasisTag tag_;
  std::vector<S> coeffs_;
};

/// Linear map on the weight-n space with declared row and column bases.
template <class S>
class FockOperator {
 public:
  FockOperator(int n, BasisTag row_tag, BasisTag col_tag)
      : index_(partition_index(n)),
        row_tag_(row_tag),
        col_tag_(col_tag),
        m_(index_->size(), index_->size(), make_scalar<S>(Rational(0))) {}
  FockOperator(int n, BasisTag row_tag, BasisTag col_tag, Matrix<S> m)
      : index_(partition_index(n)), row_tag_(row_tag), col_tag_(col_tag), m_(std::move(m)) {
    if (m_.rows() != index_->size() || m_.cols() != index_->size())
      throw std::invalid_argument("operator matrix has the wrong dimension");
  }

  static FockOperator identity(int n, BasisTag tag) {
    FockOperator r(n, tag, tag);
    for (std::size_t i = 0; i < r.dim(); ++i) r(i, i) = make_scalar<S>(Rational(1));
    return r;
  }
  static FockOperator diagonal(int n, BasisTag row_tag, BasisTag col_tag, const std::vector<S>& d) {
    FockOperator r(n, row_tag, col_tag);
    if (d.size() != r.dim()) throw std::invalid_argument("diagonal of the wrong length");
    for (std::size_t i = 0; i < r.dim(); ++i) r(i, i) = d[i];
    return r;
  }
  /// Columns given as vectors; the column basis is declared.
  static FockOperator from_columns(const std::vector<FockVector<S>>& cols, BasisTag col_tag) {
    if (cols.empty()) throw std::invalid_argument("no columns");
    FockOperator r(cols.front().n(), cols.front().tag(), col_tag);
    if (cols.size() != r.dim()) throw std::invalid_argument("wrong number of columns");
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].tag() != r.row_tag_ || cols[j].n() != r.n()) throw std::invalid_argument("inconsistent columns");
      for (std::size_t i = 0; i < r.dim(); ++i) r(i, j) = cols[j][i];
    }
    return r;
  }

  int n() const { return index_->n(); }
  std::size_t dim() const { return index_->size(); }
  BasisTag row_tag() const { return row_tag_; }
  BasisTag col_tag() const { return col_tag_; }
  const std::vector<Partition>& partitions() const { return index_->partitions(); }
  const PartitionIndex& index() const { return *index_; }
  const Matrix<S>& matrix() const { return m_; }

  S& operator()(std::size_t i, std::size_t j) { return m_(i, j); }
  const S& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  FockVector<S> column(std::size_t j) const {
    FockVector<S> v(n(), row_tag_);
    for (std::size_t i = 0; i < dim(); ++i) v[i] = m_(i, j);
    return v;
  }

  FockVector<S> apply(const FockVector<S>& x) const {
    if (x.n() != n()) throw std::invalid_argument("operator applied at the wrong weight");
    if (x.tag() != col_tag_) throw std::invalid_argument("operator applied to a vector in the wrong basis");
    FockVector<S> r(n(), row_tag_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) r[i] += m_(i, j) * x[j];
    return r;
  }

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    if (a.n() != b.n()) throw std::invalid_argument("composition at different weights");
    if (a.col_tag_ != b.row_tag_) throw std::invalid_argument("composition across mismatched bases");
    return FockOperator(a.n(), a.row_tag_, b.col_tag_, a.m_ * b.m_);
  }
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    a.check_same(b);
    return FockOperator(a.n(), a.row_tag_, a.col_tag_, a.m_ + b.m_);
  }
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    a.check_same(b);
    return FockOperator(a.n(), a.row_tag_, a.col_tag_, a.m_ - b.m_);
  }
  FockOperator scaled(const S& c) const { return FockOperator(n(), row_tag_, col_tag_, c * m_); }
  FockOperator transposed() const { return FockOperator(n(), col_tag_, row_tag_, m_.transposed()); }
  friend bool operator==(const FockOperator& a, const FockOperator& b) {
    return a.n() == b.n() && a.row_tag_ == b.row_tag_ && a.col_tag_ == b.col_tag_ && a.m_ == b.m_;
  }

  template <class F>
  auto map(F f) const -> FockOperator<std::decay_t<decltype(f(std::declval<const S&>()))>> {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    FockOperator<T> r(n(), row_tag_, col_tag_);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) r(i, j) = f(m_(i, j));
    return r;
  }

 private:
  void check_same(const FockOperator& b) const {
    if (n() != b.n() || row_tag_ != b.row_tag_ || col_tag_ != b.col_tag_)
      throw std::invalid_argument("operators with different shapes or bases");
  }

  std::shared_ptr<const PartitionIndex> index_;
  BasisTag row_tag_;
  BasisTag col_tag_;
  Matrix<S> m_;
};

/// Inverse of a complex operator; the row and column bases swap.
template <class Real>
FockOperator<algebra::Complex<Real>> inverse(const FockOperator<algebra::Complex<Real>>& a) {
  return FockOperator<algebra::Complex<Real>>(a.n(), a.col_tag(), a.row_tag(), algebra::inverse(a.matrix()));
}

}  // namespace hilbsym::fock
