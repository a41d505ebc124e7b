#include "hilbsym/symfun/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hilbsym::symfun {

using algebra::Integer;
using algebra::Matrix;
using algebra::Exponents;
using algebra::Var;
using partitions::PartitionIndex;

std::string to_string(Basis b) {
  switch (b) {
    case Basis::p: return "p";
    case Basis::m: return "m";
    case Basis::s: return "s";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// SymFunc

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
  SymFunc f(basis, lambda.size());
  f.add(lambda, RatFunc(1L));
  return f;
}

RatFunc SymFunc::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? RatFunc() : it->second;
}

void SymFunc::add(const Partition& lambda, const RatFunc& c) {
  if (lambda.size() != degree_) throw std::invalid_argument("partition size does not match degree");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
  const SymFunc other = o.basis_ == basis_ ? o : convert(o, basis_);
  for (const auto& [lam, c] : other.coeffs_) add(lam, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += o.scaled(RatFunc(-1L)); }

SymFunc SymFunc::scaled(const RatFunc& c) const {
  return map_coefficients([&](const RatFunc& x) { return x * c; });
}

SymFunc SymFunc::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  SymFunc r(basis_, degree_);
  for (const auto& [lam, c] : coeffs_) r.add(lam, f(c));
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_) return false;
  const SymFunc d = convert(a, Basis::p) - convert(b, Basis::p);
  return d.coeffs_.empty();
}

std::string SymFunc::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*" << symfun::to_string(basis_) << lam.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// transitions

namespace {

/// Ordered assignments of the parts of mu to bins whose sizes are lambda, filling every bin.
long count_fillings(const std::vector<int>& parts, std::size_t next, std::vector<int>& room) {
  if (next == parts.size()) {
    return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
  }
  long total = 0;
  for (auto& r : room) {
    if (r >= parts[next]) {
      r -= parts[next];
      total += count_fillings(parts, next + 1, room);
      r += parts[next];
    }
  }
  return total;
}

Matrix<Rational> exact_inverse(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  Matrix<Rational> inv = Matrix<Rational>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("singular transition matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// chi^lambda(mu) via beta-sets: removing a rim hook of length r moves one bead down by r.
Integer mn_character(std::vector<int> beta, const std::vector<int>& mu, std::size_t next) {
  if (next == mu.size()) return 1;
  const int r = mu[next];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    const Integer sub = mn_character(nb, mu, next + 1);
    total += (between % 2 == 0) ? sub : Integer(-sub);
  }
  return total;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character of mismatched sizes");
  std::vector<int> beta;
  const int l = lambda.length();
  for (int i = 0; i < l; ++i) beta.push_back(lambda[i] + (l - 1 - i));
  return mn_character(beta, mu.parts(), 0);
}

TransitionTables::TransitionTables(int n) : index(n) {
  const std::size_t dim = index.size();
  p_to_m = Matrix<Rational>(dim, dim);
  s_to_p = Matrix<Rational>(dim, dim);
  p_to_s = Matrix<Rational>(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<int> room = index[j].parts();
      p_to_m(i, j) = Rational(count_fillings(index[i].parts(), 0, room));
      const Integer chi = character(index[i], index[j]);
      s_to_p(i, j) = Rational(chi) / Rational(partitions::zfactor(index[j]));
      p_to_s(j, i) = Rational(chi);
    }
  }
  m_to_p = exact_inverse(p_to_m);
}

std::shared_ptr<const TransitionTables> transition_tables(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const TransitionTables>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const TransitionTables>(n);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const auto tab = transition_tables(f.degree());
  const std::size_t dim = tab->index.size();
  // To the p basis first.
  std::vector<RatFunc> pc(dim);
  for (const auto& [lam, c] : f.coefficients()) {
    const std::size_t i = tab->index.index(lam);
    if (f.basis() == Basis::p) {
      pc[i] += c;
      continue;
    }
    const Matrix<Rational>& t = f.basis() == Basis::m ? tab->m_to_p : tab->s_to_p;
    for (std::size_t j = 0; j < dim; ++j)
      if (t(i, j) != 0) pc[j] += c * RatFunc(t(i, j));
  }
  SymFunc r(target, f.degree());
  for (std::size_t i = 0; i < dim; ++i) {
    if (pc[i].is_zero()) continue;
    if (target == Basis::p) {
      r.add(tab->index[i], pc[i]);
      continue;
    }
    const Matrix<Rational>& t = target == Basis::m ? tab->p_to_m : tab->p_to_s;
    for (std::size_t j = 0; j < dim; ++j)
      if (t(i, j) != 0) r.add(tab->index[j], pc[i] * RatFunc(t(i, j)));
  }
  return r;
}

// ---------------------------------------------------------------------------
// pairings

namespace {

MultiPoly one_minus_power(Var v, int k) { return MultiPoly(1L) - MultiPoly::variable(v, static_cast<unsigned>(k)); }

RatFunc qt_weight(const Partition& mu) {
  MultiPoly num(Rational(partitions::zfactor(mu)));
  MultiPoly den(1L);
  for (int k : mu.parts()) {
    num *= one_minus_power(Var::q, k);
    den *= one_minus_power(Var::t, k);
  }
  return RatFunc::fraction(num, den);
}

RatFunc alpha_weight(const Partition& mu) {
  return RatFunc(MultiPoly::variable(Var::alpha, static_cast<unsigned>(mu.length())).scaled(Rational(partitions::zfactor(mu))));
}

RatFunc weighted_pairing(const SymFunc& f, const SymFunc& g, RatFunc (*weight)(const Partition&)) {
  if (f.degree() != g.degree()) return RatFunc();
  const SymFunc fp = convert(f, Basis::p);
  const SymFunc gp = convert(g, Basis::p);
  RatFunc acc;
  for (const auto& [mu, c] : fp.coefficients()) {
    const RatFunc d = gp.coefficient(mu);
    if (d.is_zero()) continue;
    acc += c * d * weight(mu);
  }
  return acc;
}

}  // namespace

RatFunc pairing_qt(const SymFunc& f, const SymFunc& g) { return weighted_pairing(f, g, qt_weight); }
RatFunc pairing_alpha(const SymFunc& f, const SymFunc& g) { return weighted_pairing(f, g, alpha_weight); }

// ---------------------------------------------------------------------------
// orthogonal families

namespace {

struct FractionFreeSolution {
  std::vector<MultiPoly> numerators;
  MultiPoly denominator;
};

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.exact_divide(b);
  if (!q) throw std::logic_error("inexact division in fraction-free elimination");
  return *q;
}

/// Bareiss elimination for A x = b; x_i = numerators[i] / denominator.
FractionFreeSolution solve_fraction_free(Matrix<MultiPoly> a, std::vector<MultiPoly> b) {
  const std::size_t k = a.rows();
  MultiPoly prev(1L);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t p = i;
    while (p < k && a(p, i).is_zero()) ++p;
    if (p == k) throw std::domain_error("singular Gram matrix");
    if (p != i) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a(i, j), a(p, j));
      std::swap(b[i], b[p]);
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) a(r, c) = exact_quotient(a(i, i) * a(r, c) - a(r, i) * a(i, c), prev);
      b[r] = exact_quotient(a(i, i) * b[r] - a(r, i) * b[i], prev);
      a(r, i) = MultiPoly();
    }
    prev = a(i, i);
  }
  const MultiPoly det = a(k - 1, k - 1);
  std::vector<MultiPoly> x(k);
  for (std::size_t i = k; i-- > 0;) {
    MultiPoly acc = det * b[i];
    for (std::size_t j = i + 1; j < k; ++j) acc -= a(i, j) * x[j];
    x[i] = exact_quotient(acc, a(i, i));
  }
  return {std::move(x), det};
}

/// Monic m-triangular orthogonal family member for lambda under the p-diagonal weight.
/// Returns m-basis numerators over the common denominator (numerators indexed like enumerate(n)).
FractionFreeSolution orthogonal_member(const Partition& lambda, const std::vector<MultiPoly>& p_weight) {
  const auto tab = transition_tables(lambda.size());
  const std::size_t dim = tab->index.size();
  const std::size_t pos = tab->index.index(lambda);
  // Partitions after pos in enumerate order are lexicographically lower.
  std::vector<std::size_t> lower;
  for (std::size_t i = pos + 1; i < dim; ++i) lower.push_back(i);

  auto gram = [&](std::size_t r, std::size_t c) {
    MultiPoly acc;
    for (std::size_t mu = 0; mu < dim; ++mu) {
      const Rational w = tab->m_to_p(r, mu) * tab->m_to_p(c, mu);
      if (w != 0) acc += p_weight[mu].scaled(w);
    }
    return acc;
  };

  FractionFreeSolution out;
  out.numerators.assign(dim, MultiPoly());
  if (lower.empty()) {
    out.numerators[pos] = MultiPoly(1L);
    out.denominator = MultiPoly(1L);
    return out;
  }
  const std::size_t k = lower.size();
  Matrix<MultiPoly> a(k, k);
  std::vector<MultiPoly> b(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = gram(lower[r], lower[c]);
    b[r] = -gram(lower[r], pos);
  }
  FractionFreeSolution sol = solve_fraction_free(std::move(a), std::move(b));
  out.denominator = sol.denominator;
  out.numerators[pos] = sol.denominator;
  for (std::size_t r = 0; r < k; ++r) out.numerators[lower[r]] = std::move(sol.numerators[r]);
  return out;
}

SymFunc m_polys_to_p(int n, const std::vector<MultiPoly>& m_coeffs) {
  const auto tab = transition_tables(n);
  const std::size_t dim = tab->index.size();
  SymFunc out(Basis::p, n);
  for (std::size_t mu = 0; mu < dim; ++mu) {
    MultiPoly acc;
    for (std::size_t nu = 0; nu < dim; ++nu)
      if (!m_coeffs[nu].is_zero() && tab->m_to_p(nu, mu) != 0) acc += m_coeffs[nu].scaled(tab->m_to_p(nu, mu));
    out.add(tab->index[mu], RatFunc(acc));
  }
  return out;
}

template <class Build>
SymFunc cached(std::map<Partition, SymFunc>& cache, std::mutex& mutex, const Partition& lambda, Build build) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;
  }
  SymFunc f = build();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(lambda, std::move(f)).first->second;
}

void check_bound(const Partition& lambda) {
  if (lambda.size() > kDefaultDegreeBound) throw std::invalid_argument("partition exceeds the exact degree bound");
}

SymFunc build_jack(const Partition& lambda) {
  const int n = lambda.size();
  const auto tab = transition_tables(n);
  const std::size_t dim = tab->index.size();
  std::vector<MultiPoly> weight(dim);
  for (std::size_t mu = 0; mu < dim; ++mu)
    weight[mu] = MultiPoly::variable(Var::alpha, static_cast<unsigned>(tab->index[mu].length()))
                     .scaled(Rational(partitions::zfactor(tab->index[mu])));
  const FractionFreeSolution sol = orthogonal_member(lambda, weight);
  const MultiPoly& lowest = sol.numerators[dim - 1];
  const Rational nfact(algebra::factorial(static_cast<unsigned>(n)));
  std::vector<MultiPoly> m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    if (!sol.numerators[i].is_zero()) m[i] = exact_quotient(sol.numerators[i].scaled(nfact), lowest);
  return m_polys_to_p(n, m);
}

MultiPoly arm_leg_factor(const Partition& lambda) {
  MultiPoly c(1L);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      Exponents e{};
      e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint16_t>(lambda.arm(i, j));
      e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint16_t>(lambda.leg(i, j) + 1);
      c *= MultiPoly(1L) - MultiPoly::monomial(e, Rational(1));
    }
  return c;
}

RatFunc one_minus(int a, int b) {
  Exponents e{};
  e[static_cast<std::size_t>(Var::q)] = static_cast<std::uint16_t>(a);
  e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint16_t>(b);
  return RatFunc(MultiPoly(1L) - MultiPoly::monomial(e, Rational(1)));
}

/// <P_lambda, P_lambda>_{q,t} as a product over boxes.
RatFunc macdonald_norm(const Partition& lambda) {
  RatFunc r(1L);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i - 1]; ++j) {
      const int a = lambda.arm(i, j);
      const int l = lambda.leg(i, j);
      r *= one_minus(a + 1, l) / one_minus(a, l + 1);
    }
  return r;
}

SymFunc macdonald_monic(const Partition& lambda);

SymFunc build_macdonald_monic(const Partition& lambda) {
  const auto parts = partitions::enumerate(lambda.size());
  const SymFunc m = convert(SymFunc::basis_element(Basis::m, lambda), Basis::p);
  SymFunc f = m;
  auto it = std::find(parts.begin(), parts.end(), lambda);
  for (++it; it != parts.end(); ++it) {
    const SymFunc pmu = macdonald_monic(*it);
    const RatFunc c = pairing_qt(m, pmu) / macdonald_norm(*it);
    if (!c.is_zero()) f -= pmu.scaled(c);
  }
  return f;
}

SymFunc macdonald_monic(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, SymFunc> cache;
  return cached(cache, mutex, lambda, [&] { return build_macdonald_monic(lambda); });
}

SymFunc build_macdonald_integral(const Partition& lambda) {
  return macdonald_monic(lambda).scaled(RatFunc(arm_leg_factor(lambda)));
}

SymFunc build_macdonald_modified(const Partition& lambda) {
  const int n = lambda.size();
  const SymFunc j = macdonald_integral(lambda);
  const MultiPoly one(1L);
  const MultiPoly tv = MultiPoly::variable(Var::t);
  SymFunc out(Basis::p, n);
  for (const auto& [rho, c] : j.coefficients()) {
    const MultiPoly& poly = c.as_polynomial();
    const unsigned d = poly.degree(Var::t);
    // t^{n(lambda)} J(q, 1/t) prod_i t^{rho_i} / (t^{rho_i} - 1)
    MultiPoly num = poly.substituted(Var::t, one, tv).times_monomial([&] {
      Exponents e{};
      e[static_cast<std::size_t>(Var::t)] = static_cast<std::uint16_t>(lambda.n_statistic() + n);
      return e;
    }());
    Exponents td{};
    td[static_cast<std::size_t>(Var::t)] = static_cast<std::uint16_t>(d);
    num = num.divided_by_monomial(td);
    MultiPoly den(1L);
    for (int k : rho.parts()) den *= MultiPoly::variable(Var::t, static_cast<unsigned>(k)) - one;
    out.add(rho, RatFunc(exact_quotient(num, den)));
  }
  return out;
}

}  // namespace

SymFunc jack_integral(const Partition& lambda) {
  check_bound(lambda);
  static std::mutex mutex;
  static std::map<Partition, SymFunc> cache;
  return cached(cache, mutex, lambda, [&] { return build_jack(lambda); });
}

SymFunc macdonald_integral(const Partition& lambda) {
  check_bound(lambda);
  static std::mutex mutex;
  static std::map<Partition, SymFunc> cache;
  return cached(cache, mutex, lambda, [&] { return build_macdonald_integral(lambda); });
}

SymFunc macdonald_modified(const Partition& lambda) {
  check_bound(lambda);
  static std::mutex mutex;
  static std::map<Partition, SymFunc> cache;
  return cached(cache, mutex, lambda, [&] { return build_macdonald_modified(lambda); });
}

SymFunc plethysm_scale(const SymFunc& f, const std::function<RatFunc(int)>& rule) {
  const SymFunc fp = convert(f, Basis::p);
  std::map<int, RatFunc> memo;
  SymFunc out(Basis::p, f.degree());
  for (const auto& [mu, c] : fp.coefficients()) {
    RatFunc s = c;
    for (int k : mu.parts()) {
      auto it = memo.find(k);
      if (it == memo.end()) it = memo.emplace(k, rule(k)).first;
      s *= it->second;
    }
    out.add(mu, s);
  }
  return out;
}

}  // namespace hilbsym::symfun
