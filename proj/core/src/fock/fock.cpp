#include <map>
#include <mutex>

#include "hilbsym/fock/classes.hpp"
#include "hilbsym/fock/energy.hpp"
#include "hilbsym/fock/fock_vector.hpp"
#include "hilbsym/fock/pairing.hpp"
#include "hilbsym/symfun/symfunc.hpp"

namespace hilbsym::fock {

using algebra::Exponents;
using algebra::make_rational;
using algebra::MultiPoly;
using algebra::Var;

std::string to_string(BasisTag tag) {
  switch (tag) {
    case BasisTag::nakajima: return "nakajima";
    case BasisTag::tilde: return "tilde";
    case BasisTag::fixed_point: return "fixed_point";
  }
  return "unknown";
}

std::shared_ptr<const PartitionIndex> partition_index(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const PartitionIndex>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_shared<const PartitionIndex>(n)).first;
  return it->second;
}

Params<RatFunc> symbolic_params() { return {RatFunc::variable(Var::t1), RatFunc::variable(Var::t2)}; }

RatFunc hermitian(const FockVector<RatFunc>& x, const FockVector<RatFunc>& y) {
  x.check_compatible(y);
  if (x.tag() != BasisTag::nakajima) throw std::invalid_argument("pairing applied in the wrong basis");
  const auto p = symbolic_params();
  RatFunc acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) acc += x[i] * y[i].bar() * tilde_weight(x.partition(i), p);
  return acc;
}

namespace {

RatFunc q_power(int k) { return RatFunc(MultiPoly::variable(Var::q, static_cast<unsigned>(k))); }

}  // namespace

FockOperator<RatFunc> m_d_at_zero(int n) {
  const auto p = symbolic_params();
  return energy_operator<RatFunc>(n, p.t1, p.t2, [](int k) { return RatFunc(make_rational(1 - k, 2)); });
}

std::vector<FockOperator<RatFunc>> m_d_series(int n, unsigned order) {
  std::vector<FockOperator<RatFunc>> out;
  out.push_back(m_d_at_zero(n));
  const auto p = symbolic_params();
  const RatFunc t_sum = p.t1 + p.t2;
  for (unsigned d = 1; d <= order; ++d) {
    FockOperator<RatFunc> m(n, BasisTag::nakajima, BasisTag::nakajima);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const Partition& mu = m.partitions()[i];
      long c = n;
      for (const auto& [k, mult] : mu.multiplicities())
        if (d % static_cast<unsigned>(k) == 0) c -= static_cast<long>(k) * k * mult;
      if (d % 2 == 1) c = -c;
      if (c != 0) m(i, i) = t_sum * RatFunc(c);
    }
    out.push_back(std::move(m));
  }
  return out;
}

RatFunc combined_coefficient(int k) {
  const RatFunc s = -RatFunc::variable(Var::q);
  const RatFunc one(1L);
  const RatFunc half(make_rational(1, 2));
  return RatFunc(make_rational(k, 2)) * (s.pow(k) + one) / (s.pow(k) - one) - half * (s + one) / (s - one);
}

CoefficientFraction combined_coefficient_fraction(int k) {
  const MultiPoly s = -MultiPoly::variable(Var::q);
  const MultiPoly one(1L);
  const MultiPoly sk = s.pow(static_cast<unsigned>(k));
  return {MultiPoly(Rational(k)) * (sk + one) * (s - one) - (s + one) * (sk - one), MultiPoly(2L) * (sk - one) * (s - one)};
}

FockOperator<RatFunc> m_d_symbolic(int n) {
  const auto p = symbolic_params();
  return energy_operator<RatFunc>(n, p.t1, p.t2, [](int k) { return k == 1 ? RatFunc() : combined_coefficient(k); });
}

const std::vector<long>& regularized_numerator(int k) {
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // Highest degree first, then synthetic division by (s - 1) twice.
  std::vector<long> c(static_cast<std::size_t>(k) + 1, -2);
  c.front() = k - 1;
  c.back() = k - 1;
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<long> out{c[0]};
    for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i] + out.back());
    if (out.back() != 0) throw std::logic_error("regularized numerator is not divisible by (s-1)^2");
    out.pop_back();
    c = std::move(out);
  }
  std::vector<long> low_first(c.rbegin(), c.rend());
  return cache.emplace(k, std::move(low_first)).first->second;
}

namespace {

FockVector<RatFunc> build_fixed_point_class(const Partition& lambda) {
  const int n = lambda.size();
  const symfun::SymFunc j = symfun::convert(symfun::jack_integral(lambda), symfun::Basis::p);
  const RatFunc t1 = RatFunc::variable(Var::t1);
  const RatFunc t2 = RatFunc::variable(Var::t2);
  const RatFunc alpha_value = -t1 / t2;
  FockVector<RatFunc> v(n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Partition& mu = v.partition(i);
    const RatFunc c = j.coefficient(mu);
    if (c.is_zero()) continue;
    v[i] = c.substitute(Var::alpha, alpha_value) * RatFunc(Rational(partitions::zfactor(mu))) * t2.pow(n) *
           t1.pow(mu.length());
  }
  return v;
}

}  // namespace

const FockVector<RatFunc>& fixed_point_class(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, FockVector<RatFunc>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  FockVector<RatFunc> v = build_fixed_point_class(lambda);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(lambda, std::move(v)).first->second;
}

FockOperator<RatFunc> fixed_point_matrix(int n) {
  std::vector<FockVector<RatFunc>> cols;
  for (const auto& lam : partitions::enumerate(n)) cols.push_back(fixed_point_class(lam));
  return FockOperator<RatFunc>::from_columns(cols, BasisTag::fixed_point);
}

RatFunc tangent_weight_product(const Partition& lambda) {
  MultiPoly r(1L);
  for (const auto& w : partitions::tangent_weights(lambda)) r *= w.to_poly();
  return RatFunc(r);
}

FockOperator<RatFunc> theta_symbolic(int n) {
  FockOperator<RatFunc> r(n, BasisTag::nakajima, BasisTag::nakajima);
  for (std::size_t i = 0; i < r.dim(); ++i)
    r(i, i) = RatFunc(MultiPoly::variable(Var::z, static_cast<unsigned>(r.partitions()[i].length())));
  return r;
}

FockOperator<RatFunc> delta_symbolic(int n) {
  FockOperator<RatFunc> r(n, BasisTag::tilde, BasisTag::tilde);
  const RatFunc one(1L);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    RatFunc d = one;
    for (int k : r.partitions()[i].parts()) d *= (one - q_power(k)) * (one - RatFunc::variable(Var::t).pow(k));
    r(i, i) = d;
  }
  return r;
}

FockOperator<Gaussian<RatFunc>> c_operator_exact(int n) {
  FockOperator<Gaussian<RatFunc>> r(n, BasisTag::tilde, BasisTag::nakajima);
  for (std::size_t i = 0; i < r.dim(); ++i) {
    // (-i)^e = i^{-e} = i^{3e}
    const int e = r.partitions()[i].length() - n;
    r(i, i) = Gaussian<RatFunc>::i_power(3 * e);
  }
  return r;
}

}  // namespace hilbsym::fock
