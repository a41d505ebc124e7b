#include <gtest/gtest.h>

#include <complex>

#include "hilbsym/fock/classes.hpp"
#include "hilbsym/fock/energy.hpp"
#include "hilbsym/fock/grading.hpp"
#include "hilbsym/fock/pairing.hpp"

using namespace hilbsym::fock;
using hilbsym::algebra::make_rational;
using hilbsym::algebra::MultiPoly;
using hilbsym::algebra::Var;
using hilbsym::partitions::content_sum;
using hilbsym::partitions::enumerate;
using C = std::complex<double>;

namespace {

const RatFunc T1 = RatFunc::variable(Var::t1);
const RatFunc T2 = RatFunc::variable(Var::t2);
const C kT1(0.83, 0.21);
const C kT2(-0.47, 0.59);
const C kZ(1.13, -0.35);

FockVector<RatFunc> ket(std::initializer_list<int> parts) { return FockVector<RatFunc>::basis_vector(Partition(parts)); }

double max_dev(const FockVector<C>& a, const FockVector<C>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST(Fock, PairingExamples) {
  const auto p = symbolic_params();
  EXPECT_EQ(eta(ket({1}), ket({1}), p), (T1 * T2).inverse());
  const auto two = ket({2}).with_tag(BasisTag::tilde);
  EXPECT_EQ(eta_tilde(two, two, p), (RatFunc(2L) * T1 * T2).inverse());
  EXPECT_EQ(eta(ket({2}), ket({2}), p), -(RatFunc(2L) * T1 * T2).inverse());
  EXPECT_THROW(eta(two, two, p), std::invalid_argument);
}

TEST(Fock, AlphaExamples) {
  EXPECT_EQ(alpha(1, ket({1})), FockVector<RatFunc>::basis_vector(Partition{}));
  EXPECT_EQ(alpha(-2, ket({1})), ket({2, 1}).scaled(RatFunc(2L)));
  EXPECT_EQ(alpha(-1, ket({1})), ket({1, 1}).scaled(RatFunc(2L)));
  EXPECT_TRUE(alpha(2, ket({1, 1})).coefficients()[0].is_zero());
}

TEST(Fock, HeisenbergCommutators) {
  for (int n = 0; n <= 5; ++n)
    for (const auto& mu : enumerate(n)) {
      const auto x = FockVector<RatFunc>::basis_vector(mu);
      for (int k = 1; k <= 3; ++k)
        for (int l = -3; l <= 3; ++l) {
          if (l == 0) continue;
          if (n - l < 0 || n - l - k < 0 || n - k < 0) continue;
          const auto lhs = alpha(k, alpha(l, x)) - alpha(l, alpha(k, x));
          const auto rhs = (k + l == 0) ? x.scaled(RatFunc(static_cast<long>(k))) : FockVector<RatFunc>(n - k - l);
          EXPECT_EQ(lhs, rhs) << mu.to_string() << " k=" << k << " l=" << l;
        }
    }
}

TEST(Fock, CreationAnnihilationAdjointByBruteForce) {
  // Ratio eta(alpha_{-k} x, y) / eta(x, alpha_k y) over all basis pairs with non-zero value.
  const auto p = symbolic_params();
  for (int k = 1; k <= 4; ++k) {
    std::vector<RatFunc> ratios;
    for (int n = 0; n + k <= 4; ++n)
      for (const auto& mu : enumerate(n))
        for (const auto& nu : enumerate(n + k)) {
          const auto x = FockVector<RatFunc>::basis_vector(mu);
          const auto y = FockVector<RatFunc>::basis_vector(nu);
          const RatFunc lhs = eta(alpha(-k, x), y, p);
          const RatFunc rhs = eta(x, alpha(k, y), p);
          EXPECT_EQ(lhs.is_zero(), rhs.is_zero());
          if (!rhs.is_zero()) ratios.push_back(lhs / rhs);
        }
    ASSERT_FALSE(ratios.empty());
    for (const auto& r : ratios) EXPECT_EQ(r, ratios.front());
    EXPECT_EQ(ratios.front(), RatFunc(k % 2 == 1 ? 1L : -1L) / (T1 * T2));
  }
}

TEST(Fock, FixedPointClassExamples) {
  EXPECT_EQ(fixed_point_class(Partition({1})), ket({1}).scaled(T1 * T2));
  const auto expected = ket({1, 1}).scaled(RatFunc(2L) * T1.pow(2) * T2.pow(2)) - ket({2}).scaled(RatFunc(2L) * T1.pow(2) * T2);
  EXPECT_EQ(fixed_point_class(Partition({2})), expected);
}

TEST(Fock, FixedPointClassDivisibility) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : enumerate(n)) {
      const auto& j = fixed_point_class(lam);
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i].is_zero()) continue;
        const int l = j.partition(i).length();
        ASSERT_TRUE(j[i].is_polynomial());
        const auto q = j[i].as_polynomial().exact_divide((T1 * T2).pow(l).as_polynomial());
        ASSERT_TRUE(q.has_value());
        for (const auto& [e, c] : q->terms())
          EXPECT_EQ(e[static_cast<std::size_t>(Var::t1)] + e[static_cast<std::size_t>(Var::t2)], n - l);
      }
    }
}

TEST(Fock, JackEigenvectors) {
  for (int n = 1; n <= 4; ++n) {
    const auto m0 = m_d_at_zero(n);
    for (const auto& lam : enumerate(n)) {
      const auto& j = fixed_point_class(lam);
      const RatFunc c = RatFunc(content_sum(lam).to_poly());
      EXPECT_EQ(m0.apply(j), j.scaled(-c)) << lam.to_string();
    }
  }
}

TEST(Fock, JackPairings) {
  const auto p = symbolic_params();
  for (int n = 1; n <= 4; ++n) {
    const auto parts = enumerate(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        const RatFunc e = eta(fixed_point_class(a), fixed_point_class(b), p);
        const RatFunc h = hermitian(fixed_point_class(a), fixed_point_class(b));
        EXPECT_EQ(e, h);
        EXPECT_EQ(e, a == b ? tangent_weight_product(a) : RatFunc());
      }
  }
}

TEST(Fock, EnergyOperatorIsAntiSelfAdjointForHermitianPairing) {
  for (int n = 1; n <= 3; ++n) {
    const auto m = m_d_symbolic(n);
    for (const auto& mu : enumerate(n))
      for (const auto& nu : enumerate(n)) {
        const auto x = FockVector<RatFunc>::basis_vector(mu);
        const auto y = FockVector<RatFunc>::basis_vector(nu);
        EXPECT_EQ(hermitian(m.apply(x), y), -hermitian(x, m.apply(y))) << mu.to_string() << nu.to_string();
      }
  }
}

TEST(Fock, PoleCancellationAtMinusOne) {
  const MultiPoly qp1 = MultiPoly::variable(Var::q) + MultiPoly(1L);
  for (int k = 1; k <= 5; ++k) {
    const auto f = combined_coefficient_fraction(k);
    if (k == 1) {
      EXPECT_TRUE(f.numerator.is_zero());
      continue;
    }
    EXPECT_TRUE(f.numerator.exact_divide(qp1.pow(3)).has_value());
    EXPECT_TRUE(f.denominator.exact_divide(qp1.pow(2)).has_value());
    EXPECT_FALSE(f.denominator.exact_divide(qp1.pow(3)).has_value());
    EXPECT_EQ(regularized_coefficient<C>(k, C(1)), C(0));
  }
}

TEST(Fock, RegularizedCoefficientMatchesDirectFormula) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_NEAR(std::abs(regularized_coefficient<C>(k, C(0)) - C((1.0 - k) / 2)), 0, 1e-15);
    for (C s : {C(0.3, 0.1), C(-0.7, 0.2), C(0.99, 0)}) {
      const C direct = C(k / 2.0) * (std::pow(s, k) + 1.0) / (std::pow(s, k) - 1.0) - 0.5 * (s + 1.0) / (s - 1.0);
      EXPECT_LT(std::abs(regularized_coefficient<C>(k, s) - direct), 1e-10);
      std::array<C, hilbsym::algebra::kNumVars> at{};
      at[static_cast<std::size_t>(Var::q)] = -s;
      if (k > 1) EXPECT_LT(std::abs(combined_coefficient(k).evaluate<C>(at) - direct), 1e-10);
    }
  }
}

TEST(Fock, SeriesCoefficientsSumToOperator) {
  const C q(-0.15, 0.05);
  for (int n = 1; n <= 3; ++n) {
    const auto series = m_d_series(n, 60);
    const auto at = evaluation_point(kT1, kT2);
    FockOperator<C> sum(n, BasisTag::nakajima, BasisTag::nakajima);
    C qd(1);
    for (const auto& md : series) {
      sum = sum + evaluate<double>(md, at).scaled(qd);
      qd *= q;
    }
    const auto direct = m_d_numeric<double>(n, kT1, kT2, q);
    for (std::size_t i = 0; i < sum.dim(); ++i)
      for (std::size_t j = 0; j < sum.dim(); ++j) EXPECT_LT(std::abs(sum(i, j) - direct(i, j)), 1e-12);
  }
}

TEST(Fock, ThetaConjugation) {
  const RatFunc z = RatFunc::variable(Var::z);
  for (int n = 0; n <= 4; ++n)
    for (const auto& mu : enumerate(n)) {
      const auto x = FockVector<RatFunc>::basis_vector(mu);
      const auto tx = theta_symbolic(n).apply(x);
      for (int k = 1; k <= 4; ++k) {
        const auto up = theta_symbolic(n + k).apply(alpha(-k, x));
        EXPECT_EQ(up, alpha(-k, tx).scaled(z));
        if (k <= n) {
          const auto down = theta_symbolic(n - k).apply(alpha(k, x));
          EXPECT_EQ(down, alpha(k, tx).scaled(z.inverse()));
        }
      }
    }
}

TEST(Fock, CIsAnIsometry) {
  using G = Gaussian<RatFunc>;
  const Params<G> pg{G(T1), G(T2)};
  for (int n = 1; n <= 4; ++n) {
    const auto c = c_operator_exact(n);
    for (const auto& mu : enumerate(n))
      for (const auto& nu : enumerate(n)) {
        const auto x = FockVector<G>::basis_vector(mu);
        const auto y = FockVector<G>::basis_vector(nu);
        EXPECT_EQ(eta_tilde(c.apply(x), c.apply(y), pg), eta(x, y, pg));
      }
    // C^{-1} is diagonal with the inverse entries.
    FockOperator<G> cinv(n, BasisTag::nakajima, BasisTag::tilde);
    for (std::size_t i = 0; i < c.dim(); ++i) cinv(i, i) = G(1L) / c(i, i);
    EXPECT_EQ(cinv * c, FockOperator<G>::identity(n, BasisTag::nakajima));
  }
}

TEST(Fock, NumericBasisOperators) {
  hilbsym::algebra::NumericContext<double> ctx{kT1, kT2, kZ};
  const C q(-0.2, 0);
  for (int n = 1; n <= 3; ++n) {
    const auto a = a_operator<double>(n, kT1, kT2);
    const auto conj = a * l0_operator<double>(n, ctx, q) * inverse(a);
    for (const auto& lam : enumerate(n)) {
      const auto j = evaluate<double>(fixed_point_class(lam), evaluation_point(kT1, kT2));
      const C c = content_sum(lam).evaluate<double>(kT1, kT2);
      const C expected = std::exp(-c * hilbsym::algebra::log_branch(q, ctx.branch) / kZ);
      EXPECT_LT(max_dev(conj.apply(j), j.scaled(expected)), 1e-12);
      const auto jz = evaluate<double>(fixed_point_class(lam), evaluation_point(kT1 / kZ, kT2 / kZ));
      EXPECT_LT(max_dev(theta<double>(n, kZ).apply(jz).scaled(std::pow(kZ, n)), j), 1e-12);
    }
    EXPECT_THROW(a * a, std::invalid_argument);
  }
}

TEST(Fock, DegreeOperatorOnFixedPointClasses) {
  const C two_pi_i(0, 2 * M_PI);
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : enumerate(n)) {
      ClassFunction<double> f = [lam](const C& t1, const C& t2) {
        return evaluate<double>(fixed_point_class(lam), evaluation_point(t1, t2));
      };
      const auto g = deg0_power<double>(Side::hilb, f, two_pi_i);
      EXPECT_LT(max_dev(g(kT1, kT2), f(kT1, kT2).scaled(std::pow(two_pi_i, 2 * n))), 1e-9 * std::pow(2 * M_PI, 2 * n));
    }
}

TEST(Fock, MuGradingOfChernClassPower) {
  // z^{-deg_0/2} takes z^{n(t1+t2)} to z^{n(t1+t2)/z}; the constant class |()> at n = 0 carries no z^{dim/2}.
  const int n = 2;
  ClassFunction<double> f = [n](const C& t1, const C& t2) {
    FockVector<C> v(0);
    v[0] = std::exp(double(n) * (t1 + t2) * std::log(kZ));
    return v;
  };
  const auto g = mu_power<double>(f, kZ);
  EXPECT_LT(std::abs(g(kT1, kT2)[0] - std::exp(double(n) * (kT1 + kT2) / kZ * std::log(kZ))), 1e-12);
}

TEST(Fock, DeltaNumericMatchesSymbolic) {
  const C q(0.3, 0.2);
  const C t(-0.4, 0.5);
  for (int n = 1; n <= 4; ++n) {
    std::array<C, hilbsym::algebra::kNumVars> at{};
    at[static_cast<std::size_t>(Var::q)] = q;
    at[static_cast<std::size_t>(Var::t)] = t;
    const auto ds = evaluate<double>(delta_symbolic(n), at);
    const auto dn = delta_operator<double>(n, q, t);
    for (std::size_t i = 0; i < ds.dim(); ++i) EXPECT_LT(std::abs(ds(i, i) - dn(i, i)), 1e-14);
  }
}
