#include "hilbsym/algebra/multipoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace hilbsym::algebra {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"t1", "t2", "q", "t", "alpha", "z"};

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;
constexpr std::array<std::uint64_t, kNumVars> kProbe = {0x1b873593a3f1cULL, 0x2c1b3c6d5e7f1ULL, 0x3f29ab17c4d3ULL,
                                                       0x5d3e9c1a2b47ULL, 0x7a4f1e3c9d2bULL, 0x19e3779b97f4ULL};

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const Wide x = static_cast<Wide>(a) * b;
  const std::uint64_t lo = static_cast<std::uint64_t>(x & kModulus);
  const std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
  const std::uint64_t r = lo + hi;
  return r >= kModulus ? r - kModulus : r;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t r = a + b;
  return r >= kModulus ? r - kModulus : r;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1U;
  }
  return r;
}

std::optional<std::uint64_t> rational_mod(const Rational& c) {
  const std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kModulus);
  if (den == 0) return std::nullopt;
  const std::uint64_t num = mpz_fdiv_ui(c.get_num_mpz_t(), kModulus);
  return den == 1 ? num : mul_mod(num, pow_mod(den, kModulus - 2));
}

/// Image of p in F_p[x_v] after fixing every other variable at the probe point.
std::optional<std::vector<std::uint64_t>> univariate_image(const MultiPoly::TermMap& terms, std::size_t v,
                                                          unsigned degree) {
  std::vector<std::uint64_t> out(degree + 1, 0);
  std::array<std::vector<std::uint64_t>, kNumVars> powers;
  for (const auto& [e, c] : terms) {
    auto cm = rational_mod(c);
    if (!cm) return std::nullopt;
    std::uint64_t m = *cm;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (i == v || e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e[i]) pw.push_back(mul_mod(pw.back(), kProbe[i]));
      m = mul_mod(m, pw[e[i]]);
    }
    out[e[v]] = add_mod(out[e[v]], m);
  }
  return out;
}

/// False only when d certainly does not divide p: the images in F_p[x_v] must divide when d does.
bool divisibility_possible(const MultiPoly& p, const MultiPoly& d) {
  if (p.is_zero()) return true;
  std::size_t v = kNumVars;
  unsigned dd = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const unsigned k = d.degree(static_cast<Var>(i));
    if (k > dd) {
      dd = k;
      v = i;
    }
  }
  if (v == kNumVars) return true;
  const unsigned dp = p.degree(static_cast<Var>(v));
  if (dp < dd) return false;
  auto dimg = univariate_image(d.terms(), v, dd);
  if (!dimg || dimg->back() == 0) return true;
  auto rem = univariate_image(p.terms(), v, dp);
  if (!rem) return true;
  const std::uint64_t inv_lead = pow_mod(dimg->back(), kModulus - 2);
  for (std::size_t top = dp; top + 1 > dd; --top) {
    const std::uint64_t c = mul_mod((*rem)[top], inv_lead);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::size_t k = top - dd + j;
      (*rem)[k] = add_mod((*rem)[k], kModulus - mul_mod(c, (*dimg)[j]));
    }
  }
  for (std::size_t j = 0; j < dd; ++j)
    if ((*rem)[j] != 0) return false;
  return true;
}

Exponents sub_exponents(const Exponents& e, const Exponents& d) {
  Exponents r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(e[i] - d[i]);
  return r;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(Var v, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

unsigned MultiPoly::degree(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[i]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Exponents MultiPoly::min_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

const Exponents& MultiPoly::leading_exponents() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Exponents{}); }

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  std::vector<MultiPoly> out(degree(v) + 1);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[i] = 0;
    out[e[i]].terms_.emplace(rest, c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term(add_exponents(ea, eb), prod);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result(1L);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& [e, coef] : r.terms_) coef *= c;
  return r;
}

MultiPoly MultiPoly::times_monomial(const Exponents& m) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exponents(e, m), c);
  return r;
}

MultiPoly MultiPoly::divided_by_monomial(const Exponents& m) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (!divides(m, e)) throw std::logic_error("monomial does not divide polynomial");
    r.terms_.emplace_hint(r.terms_.end(), sub_exponents(e, m), c);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (!divisibility_possible(*this, d)) return std::nullopt;
  MultiPoly quotient;
  MultiPoly rem = *this;
  const Exponents& ld = d.leading_exponents();
  const Rational& lc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    if (!divides(ld, lr)) return std::nullopt;
    const Exponents m = sub_exponents(lr, ld);
    const Rational c = rem.leading_coefficient() / lc;
    quotient.add_term(m, c);
    for (const auto& [e, cd] : d.terms_) rem.add_term(add_exponents(e, m), -c * cd);
  }
  return quotient;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer g = 0;
  Integer l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r = make_rational(g, l);
  if (leading_coefficient() < 0) r = -r;
  return r;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return {};
  const Rational c = content();
  if (c == 1) return *this;
  MultiPoly r = *this;
  for (auto& [e, coef] : r.terms_) coef /= c;
  return r;
}

MultiPoly MultiPoly::bar() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_)
    if ((e[0] + e[1]) % 2 != 0) c = -c;
  return r;
}

MultiPoly MultiPoly::swapped(Var a, Var b) const {
  MultiPoly r;
  const auto ia = static_cast<std::size_t>(a);
  const auto ib = static_cast<std::size_t>(b);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    std::swap(f[ia], f[ib]);
    r.terms_.emplace(f, c);
  }
  return r;
}

MultiPoly MultiPoly::rescaled(Var v, const Rational& c) const {
  if (c == 0) {
    MultiPoly r;
    for (const auto& [e, coef] : terms_)
      if (e[static_cast<std::size_t>(v)] == 0) r.terms_.emplace(e, coef);
    return r;
  }
  MultiPoly r = *this;
  const auto iv = static_cast<std::size_t>(v);
  for (auto& [e, coef] : r.terms_) {
    Rational f(1);
    for (unsigned k = 0; k < e[iv]; ++k) f *= c;
    coef *= f;
  }
  return r;
}

MultiPoly MultiPoly::substituted(Var v, const MultiPoly& num, const MultiPoly& den) const {
  const auto coeffs = coefficients_in(v);
  const unsigned d = static_cast<unsigned>(coeffs.size()) - 1;
  std::vector<MultiPoly> num_pows{MultiPoly(1L)};
  std::vector<MultiPoly> den_pows{MultiPoly(1L)};
  for (unsigned k = 1; k <= d; ++k) {
    num_pows.push_back(num_pows.back() * num);
    den_pows.push_back(den_pows.back() * den);
  }
  MultiPoly r;
  for (unsigned k = 0; k <= d; ++k) {
    if (coeffs[k].is_zero()) continue;
    r += coeffs[k] * num_pows[k] * den_pows[d - k];
  }
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const auto iv = static_cast<std::size_t>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[iv] == 0) continue;
    Exponents f = e;
    --f[iv];
    r.add_term(f, c * e[iv]);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool unit_monomial = e == Exponents{};
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    } else if (a < 0 && !unit_monomial && a == -1) {
      os << "-";
      a = 1;
    }
    first = false;
    bool need_star = false;
    if (unit_monomial || a != 1) {
      os << algebra::to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd

namespace {

std::optional<Var> first_variable(const MultiPoly& a, const MultiPoly& b) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const auto v = static_cast<Var>(i);
    if (a.involves(v) || b.involves(v)) return v;
  }
  return std::nullopt;
}

MultiPoly gcd_no_monomial(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, Var v) {
  MultiPoly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd(g, c);
    if (g.is_constant()) return MultiPoly(1L);
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, Var v) {
  const MultiPoly c = content_in(p, v);
  if (c.is_constant()) return p.primitive();
  auto q = p.exact_divide(c);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return q->primitive();
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
  const unsigned db = b.degree(v);
  const MultiPoly lcb = b.coefficients_in(v).back();
  MultiPoly r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    const unsigned dr = r.degree(v);
    const MultiPoly lcr = r.coefficients_in(v).back();
    r = lcb * r - (lcr * b).times_monomial([&] {
      Exponents e{};
      e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(dr - db);
      return e;
    }());
    r = r.primitive();
  }
  return r;
}

MultiPoly gcd_no_monomial(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return MultiPoly(1L);
  const auto var = first_variable(a, b);
  if (!var) return MultiPoly(1L);
  const Var v = *var;
  if (!b.involves(v)) return gcd(content_in(a, v), b);
  if (!a.involves(v)) return gcd(a, content_in(b, v));

  const MultiPoly ca = content_in(a, v);
  const MultiPoly cb = content_in(b, v);
  const MultiPoly c = gcd(ca, cb);
  MultiPoly pa = ca.is_constant() ? a.primitive() : a.exact_divide(ca)->primitive();
  MultiPoly pb = cb.is_constant() ? b.primitive() : b.exact_divide(cb)->primitive();
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);

  MultiPoly g;
  while (true) {
    MultiPoly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (!r.involves(v)) {
      g = MultiPoly(1L);
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  g = primitive_in(g, v);
  return (c * g).primitive();
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  const Exponents ma = a.min_exponents();
  const Exponents mb = b.min_exponents();
  Exponents m{};
  for (std::size_t i = 0; i < kNumVars; ++i) m[i] = std::min(ma[i], mb[i]);
  const MultiPoly ra = a.divided_by_monomial(ma);
  const MultiPoly rb = b.divided_by_monomial(mb);
  MultiPoly g = gcd_no_monomial(ra, rb);
  return g.times_monomial(m).primitive();
}

}  // namespace hilbsym::algebra
