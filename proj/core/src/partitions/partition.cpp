#include "hilbsym/partitions/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hilbsym::partitions {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    size_ += p;
  }
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return {};
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

Partition Partition::with_part(int k) const {
  std::vector<int> p = parts_;
  p.push_back(k);
  return Partition(std::move(p));
}

Partition Partition::without_part(int k) const {
  std::vector<int> p = parts_;
  auto it = std::find(p.begin(), p.end(), k);
  if (it == p.end()) throw std::invalid_argument("part not present");
  p.erase(it);
  return Partition(std::move(p));
}

int Partition::arm(int i, int j) const { return parts_.at(i - 1) - j; }

int Partition::leg(int i, int j) const {
  int count = 0;
  for (int p : parts_)
    if (p >= j) ++count;
  return count - i;
}

int Partition::n_statistic() const {
  int s = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<int>(i) * parts_[i];
  return s;
}

Integer Partition::part_product() const {
  Integer r = 1;
  for (int p : parts_) r *= p;
  return r;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  os << ")";
  return os.str();
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n) {
  if (n < 0) throw std::invalid_argument("negative partition size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_rec(n, n, prefix, out);
  return out;
}

PartitionIndex::PartitionIndex(int n) : n_(n), parts_(enumerate(n)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], i);
}

std::size_t PartitionIndex::index(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw std::out_of_range("partition " + p.to_string() + " not in index");
  return it->second;
}

Integer zfactor(const Partition& mu) {
  Integer r = 1;
  for (const auto& [part, mult] : mu.multiplicities()) r *= algebra::factorial(static_cast<unsigned>(mult));
  return r * mu.part_product();
}

algebra::MultiPoly WeightForm::to_poly() const {
  using algebra::MultiPoly;
  using algebra::Var;
  return MultiPoly::variable(Var::t1).scaled(a) + MultiPoly::variable(Var::t2).scaled(b);
}

std::string WeightForm::to_string() const { return to_poly().to_string(); }

WeightForm content_sum(const Partition& lambda) {
  WeightForm c;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) c += WeightForm(Rational(j - 1), Rational(i - 1));
  return c;
}

std::vector<WeightForm> tangent_weights(const Partition& lambda) {
  std::vector<WeightForm> w;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      const int a = lambda.arm(i, j);
      const int l = lambda.leg(i, j);
      w.emplace_back(Rational(a + 1), Rational(-l));
      w.emplace_back(Rational(-a), Rational(l + 1));
    }
  }
  return w;
}

}  // namespace hilbsym::partitions
