#include "hilbsym/integral/integral.hpp"

#include <map>
#include <mutex>

namespace hilbsym::integral {

namespace {

using Unit = fock::Gaussian<RatFunc>;

template <class Build>
const FockVector<RatFunc>& cached(std::map<Partition, FockVector<RatFunc>>& cache, std::mutex& mutex, const Partition& lambda,
                                  Build build) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  FockVector<RatFunc> v = build();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(lambda, std::move(v)).first->second;
}

Unit unit_power(const Unit& u, int k) {
  Unit r{RatFunc(1L), RatFunc()};
  const Unit base = k >= 0 ? u : Unit{RatFunc(1L), RatFunc()} / u;
  for (int j = 0; j < std::abs(k); ++j) r = r * base;
  return r;
}

}  // namespace

const symfun::SymFunc& fm_skyscraper(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, symfun::SymFunc> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  symfun::SymFunc h = symfun::macdonald_modified(lambda);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(lambda, std::move(h)).first->second;
}

const FockVector<RatFunc>& macdonald_vector(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, FockVector<RatFunc>> cache;
  return cached(cache, mutex, lambda, [&] {
    const symfun::SymFunc h = symfun::convert(fm_skyscraper(lambda), symfun::Basis::p);
    FockVector<RatFunc> v(lambda.size(), BasisTag::tilde);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = h.coefficient(v.partition(i)) * RatFunc(Rational(partitions::zfactor(v.partition(i))));
    return v;
  });
}

const FockVector<RatFunc>& fm_chern_exact(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, FockVector<RatFunc>> cache;
  return cached(cache, mutex, lambda, [&] { return fock::delta_symbolic(lambda.size()).apply(macdonald_vector(lambda)); });
}

std::pair<PhaseMonomial, PhaseMonomial> final_identity_sides(const Partition& mu) {
  const int n = mu.size();
  const int l = mu.length();
  const Unit minus_one{RatFunc(-1L), RatFunc()};
  const Unit i = Unit::i_power(1);
  const auto c = fock::c_operator_exact(n);
  const std::size_t k = fock::partition_index(n)->index(mu);
  // C|mu> = |mu~> expressed in the |mu> coordinate.
  const Unit tilde = c(k, k);
  PhaseMonomial lhs{n + l, unit_power(minus_one, n + l) * unit_power(i, n + l) * tilde};
  PhaseMonomial rhs{(n - l) + 2 * l, unit_power(i, 2 * l) * unit_power(minus_one, 2 * l)};
  return {lhs, rhs};
}

bool final_identity_holds(const Partition& mu) {
  const auto [lhs, rhs] = final_identity_sides(mu);
  return lhs.two_pi_power == rhs.two_pi_power && lhs.unit == rhs.unit;
}

}  // namespace hilbsym::integral
