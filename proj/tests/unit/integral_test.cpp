#include <gtest/gtest.h>

#include <random>

#include "hilbsym/algebra/sampling.hpp"
#include "hilbsym/integral/integral.hpp"

using namespace hilbsym;
using namespace hilbsym::integral;
using partitions::enumerate;
using C = std::complex<double>;

namespace {

NumericContext<double> generic_ctx() { return {C(0.41, 0.23), C(-0.67, 0.31), C(1.1, 0.35)}; }

C random_point(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(rng), u(rng)};
}

symfun::SymFunc schur(int a, int b = 0) {
  return symfun::SymFunc::basis_element(symfun::Basis::s, b == 0 ? Partition({a}) : Partition({a, b}));
}

}  // namespace

TEST(Integral, GammaHilbExamples) {
  const C t1(0.3, 0.2), t2(-0.4, 0.5);
  EXPECT_LT(relative_difference(gamma_hilb(Partition({1}), t1, t2), algebra::cgamma(t1 + 1.0) * algebra::cgamma(t2 + 1.0)), 1e-14);
  EXPECT_LT(std::abs(gamma_hilb(Partition({2, 1}), C(1e-9), C(2e-9)) - 1.0), 1e-7);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : enumerate(n))
      EXPECT_LT(relative_difference(gamma_hilb(lam.conjugate(), t1, t2), gamma_hilb(lam, t2, t1)), 1e-13) << lam.to_string();
}

TEST(Integral, GammaSymTwoRoutes) {
  const C t1(0.37, -0.21), t2(0.52, 0.44);
  const double two_pi = 2 * algebra::pi<double>();
  const C closed2 = t1 * t2 * two_pi * 2.0 * std::exp(-2.0 * (t1 + t2) * std::log(2.0)) * algebra::cgamma(2.0 * t1) * algebra::cgamma(2.0 * t2);
  const C eigen2 = algebra::cgamma(1.0 + t1) * algebra::cgamma(1.0 + t2) * algebra::cgamma(0.5 + t1) * algebra::cgamma(0.5 + t2);
  EXPECT_LT(relative_difference(gamma_sym_closed(Partition({2}), t1, t2), closed2), 1e-14);
  EXPECT_LT(relative_difference(gamma_sym_eigenbundle(Partition({2}), t1, t2), eigen2), 1e-14);
  EXPECT_LT(relative_difference(closed2, eigen2), 1e-10);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const C a = random_point(rng, -0.8, 0.8), b = random_point(rng, -0.8, 0.8);
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : enumerate(n))
        EXPECT_LT(relative_difference(gamma_sym_eigenbundle(mu, a, b), gamma_sym_closed(mu, a, b)), 1e-9) << mu.to_string();
  }
  EXPECT_NO_THROW(gamma_sym(Partition({3, 1}), t1, t2));
}

TEST(Integral, ChernCharacterOfSkyscraper) {
  const C t1(0.3, 0.1), t2(-0.2, 0.6);
  const auto c = ch_skyscraper(Partition({1}), t1, t2);
  const C expected = (1.0 - std::exp(-t1)) * (1.0 - std::exp(-t2)) / (t1 * t2);
  EXPECT_LT(relative_difference(c.value[0], expected * t1 * t2), 1e-14);
  EXPECT_EQ(c.support, Partition({1}));
  const auto tiny = ch_skyscraper(Partition({2}), C(1e-7), C(3e-7));
  const auto j = fock::evaluate<double>(fock::fixed_point_class(Partition({2})), fock::evaluation_point(C(1e-7), C(3e-7)));
  for (std::size_t i = 0; i < j.size(); ++i) EXPECT_LT(relative_difference(tiny.value[i], j[i]), 1e-6);
  const fock::Params<C> p{t1, t2};
  for (const auto& lam : enumerate(3))
    for (const auto& mu : enumerate(3)) {
      const auto jm = fock::evaluate<double>(fock::fixed_point_class(mu), fock::evaluation_point(t1, t2));
      const C e = fock::eta(ch_skyscraper(lam, t1, t2).value, jm, p);
      if (lam == mu) EXPECT_GT(std::abs(e), 1e-6);
      else EXPECT_LT(std::abs(e), 1e-12);
    }
}

TEST(Integral, PsiHilbTwoRoutes) {
  auto ctx = generic_ctx();
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : enumerate(n)) {
      EXPECT_LT(psi_hilb_routes(lam, ctx).deviation, 1e-10) << lam.to_string();
      const auto half = psi_hilb_routes(lam, NumericContext<double>{ctx.t1, ctx.t2, 2.0 * ctx.z});
      EXPECT_LT(half.deviation, 1e-10) << lam.to_string();
    }
}

TEST(Integral, FourierMukaiOfSkyscrapers) {
  const symfun::SymFunc p1 = symfun::SymFunc::basis_element(symfun::Basis::p, Partition({1}));
  EXPECT_EQ(fm_skyscraper(Partition({1})), p1);
  const RatFunc q = RatFunc::variable(algebra::Var::q);
  const RatFunc t = RatFunc::variable(algebra::Var::t);
  EXPECT_EQ(fm_skyscraper(Partition({2})), schur(2) + schur(1, 1).scaled(q));
  EXPECT_EQ(fm_skyscraper(Partition({1, 1})), schur(2) + schur(1, 1).scaled(t));
}

TEST(Integral, DeltaMultipliesByCycleFactors) {
  const auto& h = macdonald_vector(Partition({2, 1}));
  const auto& d = fm_chern_exact(Partition({2, 1}));
  const RatFunc one(1L);
  const RatFunc q = RatFunc::variable(algebra::Var::q);
  const RatFunc t = RatFunc::variable(algebra::Var::t);
  const std::size_t k = d.index().index(Partition({2, 1}));
  EXPECT_EQ(d[k], h[k] * (one - q.pow(2)) * (one - t.pow(2)) * (one - q) * (one - t));
}

TEST(Integral, PsiSymTwoRoutes) {
  const auto ctx = generic_ctx();
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : enumerate(n)) EXPECT_LT(psi_sym_fm_routes(lam, ctx).deviation, 1e-10) << lam.to_string();
}

TEST(Integral, GammaPhaseIdentity) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) EXPECT_LT(gamma_phase_defect(random_point(rng, -1.5, 1.5)), 1e-10);
}

TEST(Integral, GammaReflectionAndMultiplication) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const C x = random_point(rng, -2.5, 2.5);
    EXPECT_LT(gamma_reflection_defect(x), 1e-10) << x;
    EXPECT_LT(gamma_multiplication_defect(x, 2 + trial % 4), 1e-10) << x;
  }
}

TEST(Integral, Delta3EqualsDeltaHilb) {
  const auto ctx = generic_ctx();
  for (int n = 1; n <= 4; ++n) {
    const auto a = delta3_operator(n, ctx);
    const auto b = delta_hilb_operator(n, ctx);
    for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_LT(relative_difference(a(i, i), b(i, i)), 1e-10);
  }
}

TEST(Integral, HilbSideIsDeltaHilbOfMacdonald) {
  const auto ctx = generic_ctx();
  for (const auto& lam : enumerate(3)) {
    const auto lhs = fock::c_operator<double>(3).apply(qde::k_formula<double>(3, ctx.t1, ctx.t2, -ctx.z).apply(psi_hilb(lam, ctx)));
    const auto h = h_minus_z(lam, ctx).with_tag(BasisTag::nakajima);
    const auto rhs = delta_hilb_operator(3, ctx).apply(h);
    EXPECT_LT(detail::vector_deviation(lhs, rhs), 1e-10) << lam.to_string();
  }
}

TEST(Integral, DiagramCommutesOnSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto ctx = algebra::sample_context<double>(seed, 3).ctx;
    for (int n = 1; n <= 3; ++n)
      for (const auto& lam : enumerate(n)) {
        const auto r = diagram_check(lam, ctx);
        EXPECT_LT(r.deviation, 1e-8) << seed << " " << lam.to_string();
        EXPECT_EQ(r.component_deviation.size(), r.hilb_side.size());
      }
  }
}

TEST(Integral, DiagramDetectsWrongSignOfZ) {
  const auto ctx = generic_ctx();
  const Partition lam({2, 1});
  const auto k_plus = qde::k_formula<double>(3, ctx.t1, ctx.t2, ctx.z);
  const auto wrong = fock::c_operator<double>(3).apply(k_plus.apply(psi_hilb(lam, ctx)));
  EXPECT_GT(detail::vector_deviation(wrong, psi_sym_fm(lam, ctx)), 1e-3);
}

TEST(Integral, FinalIdentityExact) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : enumerate(n)) {
      EXPECT_TRUE(final_identity_holds(mu)) << mu.to_string();
      const auto [lhs, rhs] = final_identity_sides(mu);
      EXPECT_EQ(lhs.two_pi_power, n + mu.length());
      const int l = mu.length();
      EXPECT_EQ(rhs.unit, fock::Gaussian<RatFunc>::i_power(2 * l));
    }
}

TEST(Integral, SamplerIsDeterministicAndInsideAnnuli) {
  const auto a = algebra::sample_context<double>(7, 4);
  const auto b = algebra::sample_context<double>(7, 4);
  EXPECT_EQ(a.ctx.t1, b.ctx.t1);
  EXPECT_EQ(a.ctx.z, b.ctx.z);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = algebra::sample_context<double>(seed, 4).ctx;
    EXPECT_GT(std::abs(s.t1), 0.3);
    EXPECT_LT(std::abs(s.t2), 1.2);
    EXPECT_GT(std::abs(s.z), 0.8);
    EXPECT_LT(std::abs(s.z), 1.5);
  }
}
