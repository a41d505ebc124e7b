#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "hilbsym/algebra/multipoly.hpp"
#include "hilbsym/algebra/rational.hpp"
#include "hilbsym/algebra/real.hpp"

namespace hilbsym::partitions {

using algebra::Integer;
using algebra::Rational;

/// Weakly decreasing tuple of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Sorts the input; throws std::invalid_argument on non-positive parts.
  Partition(std::vector<int> parts);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to k.
  int multiplicity(int k) const;
  /// Distinct parts with multiplicities, largest first.
  std::vector<std::pair<int, int>> multiplicities() const;

  Partition conjugate() const;
  Partition with_part(int k) const;
  /// Removes one copy of k; k must be a part.
  Partition without_part(int k) const;
  bool contains_part(int k) const { return multiplicity(k) > 0; }

  /// Boxes are (i, j), 1-based row and column.
  int arm(int i, int j) const;
  int leg(int i, int j) const;

  /// sum_i (i-1) lambda_i.
  int n_statistic() const;
  /// prod of parts.
  Integer part_product() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Every partition of n, lexicographically decreasing: (n), (n-1,1), ..., (1^n).
std::vector<Partition> enumerate(int n);

/// Positions of enumerate(n) keyed by partition.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n);
  int n() const { return n_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Partition>& partitions() const { return parts_; }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  std::size_t index(const Partition& p) const;

 private:
  int n_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
};

/// |Aut(mu)| * prod mu_i.
Integer zfactor(const Partition& mu);

/// The linear form a*t1 + b*t2.
struct WeightForm {
  Rational a;
  Rational b;

  WeightForm() = default;
  WeightForm(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  WeightForm& operator+=(const WeightForm& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  friend WeightForm operator+(WeightForm x, const WeightForm& y) { return x += y; }
  friend bool operator==(const WeightForm& x, const WeightForm& y) { return x.a == y.a && x.b == y.b; }
  friend auto operator<=>(const WeightForm& x, const WeightForm& y) {
    if (auto c = cmp(x.a, y.a); c != 0) return c <=> 0;
    return cmp(x.b, y.b) <=> 0;
  }

  WeightForm swapped() const { return {b, a}; }
  algebra::MultiPoly to_poly() const;

  template <class Real>
  algebra::Complex<Real> evaluate(const algebra::Complex<Real>& t1, const algebra::Complex<Real>& t2) const {
    return algebra::to_real<Real>(a) * t1 + algebra::to_real<Real>(b) * t2;
  }

  std::string to_string() const;
};

/// c(lambda) = sum over boxes (i, j) of (j-1) t1 + (i-1) t2.
WeightForm content_sum(const Partition& lambda);

/// Tangent weights {(a+1) t1 - l t2, -a t1 + (l+1) t2} over the boxes, in box order.
std::vector<WeightForm> tangent_weights(const Partition& lambda);

}  // namespace hilbsym::partitions
