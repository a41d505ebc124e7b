#include "hilbsym/algebra/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbsym::algebra {

namespace {

bool is_variable(const MultiPoly& f) {
  if (f.num_terms() != 1) return false;
  const auto& [e, c] = *f.terms().begin();
  unsigned s = 0;
  for (auto x : e) s += x;
  return s == 1 && c == 1;
}

MultiPoly power_of(const MultiPoly& f, unsigned e) { return e == 1 ? f : f.pow(e); }

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)) {}
RatFunc::RatFunc(const Rational& c) : num_(c) {}
RatFunc::RatFunc(long c) : num_(c) {}

RatFunc RatFunc::fraction(const MultiPoly& num, const MultiPoly& den, std::size_t gcd_term_limit) {
  RatFunc r(num);
  r.divide_by_polynomial(den, 1, gcd_term_limit);
  return r;
}

MultiPoly RatFunc::denominator() const {
  MultiPoly d(1L);
  for (const auto& [f, e] : den_) d *= power_of(f, e);
  return d;
}

const MultiPoly& RatFunc::as_polynomial() const {
  if (!den_.empty()) throw std::logic_error("rational function is not a polynomial: " + to_string());
  return num_;
}

void RatFunc::add_factor(const MultiPoly& f, unsigned exponent) {
  if (exponent == 0) return;
  den_[f] += exponent;
}

void RatFunc::divide_by_polynomial(const MultiPoly& p, unsigned exponent, std::size_t gcd_term_limit) {
  if (p.is_zero()) throw std::domain_error("division by zero polynomial");
  if (exponent == 0) return;
  const Exponents m = p.min_exponents();
  MultiPoly rest = p.divided_by_monomial(m);
  const Rational c = rest.content();
  rest = rest.primitive();
  Rational scale(1);
  for (unsigned k = 0; k < exponent; ++k) scale *= c;
  num_ = num_.scaled(1 / scale);
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (m[i] != 0) add_factor(MultiPoly::variable(static_cast<Var>(i)), m[i] * exponent);
  if (!rest.is_constant()) {
    if (den_.count(rest) == 0 && num_.num_terms() * rest.num_terms() <= gcd_term_limit && !num_.is_zero()) {
      const MultiPoly g = gcd(num_, rest);
      if (!g.is_constant()) {
        num_ = *num_.exact_divide(g);
        rest = *rest.exact_divide(g);
        const Rational cr = rest.content();
        rest = rest.primitive();
        Rational crp(1);
        for (unsigned k = 0; k < exponent; ++k) crp *= cr;
        num_ = num_.scaled(1 / crp);
        if (exponent > 1) {
          divide_by_polynomial(g, exponent - 1, gcd_term_limit);
        }
        if (!rest.is_constant()) add_factor(rest, exponent);
        cancel();
        return;
      }
    }
    add_factor(rest, exponent);
  }
  cancel();
}

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    auto& [f, e] = *it;
    if (is_variable(f)) {
      const Exponents m = num_.min_exponents();
      const Exponents& fe = f.terms().begin()->first;
      std::size_t idx = 0;
      while (fe[idx] == 0) ++idx;
      const unsigned k = std::min<unsigned>(e, m[idx]);
      if (k > 0) {
        Exponents d{};
        d[idx] = static_cast<std::uint16_t>(k);
        num_ = num_.divided_by_monomial(d);
        e -= k;
      }
    } else {
      while (e > 0) {
        auto q = num_.exact_divide(f);
        if (!q) break;
        num_ = std::move(*q);
        --e;
      }
    }
    if (e == 0) {
      it = den_.erase(it);
    } else {
      ++it;
    }
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  MultiPoly mine = num_;
  MultiPoly theirs = o.num_;
  Factors merged = den_;
  for (const auto& [f, e] : o.den_) {
    auto it = merged.find(f);
    if (it == merged.end()) {
      merged.emplace(f, e);
      mine *= power_of(f, e);
    } else if (it->second < e) {
      mine *= power_of(f, e - it->second);
      it->second = e;
    }
  }
  for (const auto& [f, e] : den_) {
    const auto it = o.den_.find(f);
    const unsigned have = it == o.den_.end() ? 0 : it->second;
    if (have < e) theirs *= power_of(f, e - have);
  }
  num_ = mine + theirs;
  den_ = std::move(merged);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  for (const auto& [f, e] : o.den_) den_[f] += e;
  cancel();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  if (is_zero()) return *this;
  for (const auto& [f, e] : o.den_) num_ *= power_of(f, e);
  divide_by_polynomial(o.num_, 1, kDefaultGcdTermLimit);
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

RatFunc RatFunc::inverse() const { return RatFunc(1L) / *this; }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r(1L);
  RatFunc base = *this;
  auto u = static_cast<unsigned>(k);
  while (u > 0) {
    if (u & 1U) r *= base;
    u >>= 1U;
    if (u > 0) base *= base;
  }
  return r;
}

RatFunc RatFunc::bar() const {
  RatFunc r(num_.bar());
  bool negate = false;
  for (const auto& [f, e] : den_) {
    MultiPoly g = f.bar();
    if (g.leading_coefficient() < 0) {
      g = -g;
      if (e % 2 == 1) negate = !negate;
    }
    r.den_.emplace(std::move(g), e);
  }
  if (negate) r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::rescaled(Var v, const Rational& c) const {
  if (c == 0) throw std::domain_error("rescaling by zero");
  RatFunc r(num_.rescaled(v, c));
  for (const auto& [f, e] : den_) r.divide_by_polynomial(f.rescaled(v, c), e, 0);
  return r;
}

RatFunc RatFunc::swapped(Var a, Var b) const {
  RatFunc r(num_.swapped(a, b));
  for (const auto& [f, e] : den_) r.divide_by_polynomial(f.swapped(a, b), e, 0);
  return r;
}

RatFunc RatFunc::substitute(Var v, const RatFunc& value) const {
  // Write value = P/Q with Q a polynomial; then f(P/Q) = f_hom(P, Q) / Q^deg f.
  const MultiPoly& p = value.numerator();
  const MultiPoly q = value.denominator();
  auto sub = [&](const MultiPoly& f) {
    RatFunc r(f.substituted(v, p, q));
    r.divide_by_polynomial(q, f.degree(v), kDefaultGcdTermLimit);
    return r;
  };
  RatFunc r = sub(num_);
  for (const auto& [f, e] : den_) r /= sub(f).pow(static_cast<int>(e));
  return r;
}

std::string RatFunc::to_string() const {
  if (den_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  bool first = true;
  for (const auto& [f, e] : den_) {
    if (!first) os << "*";
    first = false;
    os << "(" << f.to_string() << ")";
    if (e > 1) os << "^" << e;
  }
  os << ")";
  return os.str();
}

void DeferredSum::add_product(const RatFunc& a, const RatFunc& b, const RatFunc& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) return;
  RatFunc::Factors den = a.denominator_factors();
  for (const auto& [f, e] : b.denominator_factors()) den[f] += e;
  for (const auto& [f, e] : c.denominator_factors()) den[f] += e;
  MultiPoly num = a.numerator() * b.numerator();
  if (!c.numerator().is_constant() || c.numerator() != MultiPoly(Rational(1))) num *= c.numerator();
  auto [it, inserted] = groups_.try_emplace(std::move(den), MultiPoly());
  it->second += num;
}

MultiPoly DeferredSum::combined_numerator(RatFunc::Factors& lcm) const {
  lcm.clear();
  for (const auto& [den, num] : groups_) {
    if (num.is_zero()) continue;
    for (const auto& [f, e] : den) {
      unsigned& have = lcm[f];
      have = std::max(have, e);
    }
  }
  MultiPoly total;
  for (const auto& [den, num] : groups_) {
    if (num.is_zero()) continue;
    MultiPoly term = num;
    for (const auto& [f, e] : lcm) {
      const auto it = den.find(f);
      const unsigned have = it == den.end() ? 0 : it->second;
      if (have < e) term *= power_of(f, e - have);
    }
    total += term;
  }
  return total;
}

bool DeferredSum::is_zero() const {
  RatFunc::Factors lcm;
  return combined_numerator(lcm).is_zero();
}

RatFunc DeferredSum::value() const {
  RatFunc::Factors lcm;
  RatFunc r(combined_numerator(lcm));
  if (r.is_zero()) return r;
  RatFunc den(1);
  for (const auto& [f, e] : lcm) den *= RatFunc(power_of(f, e));
  return r / den;
}

}  // namespace hilbsym::algebra
