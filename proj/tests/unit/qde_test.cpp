#include <gtest/gtest.h>

#include <chrono>
#include <complex>

#include "hilbsym/algebra/sampling.hpp"
#include "hilbsym/qde/connection.hpp"
#include "hilbsym/qde/series.hpp"

using namespace hilbsym;
using namespace hilbsym::qde;
using algebra::Float128;
using partitions::enumerate;
using C = std::complex<double>;

namespace {

NumericContext<double> generic_ctx() {
  NumericContext<double> ctx{C(0.83, 0.21), C(-0.47, 0.59), C(1.13, -0.35)};
  ctx.tol = 1e-12;
  return ctx;
}

}  // namespace

TEST(Qde, SeriesStartsAtFixedPointClass) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : enumerate(n)) EXPECT_EQ(series_solve(lam, 3).y[0], fock::fixed_point_class(lam));
}

TEST(Qde, WeightOneSeriesIsConstant) {
  const auto sol = series_solve(Partition({1}), 12);
  for (unsigned d = 1; d <= 12; ++d) EXPECT_TRUE(sol.y[d][0].is_zero()) << d;
}

TEST(Qde, ResidualVanishesThroughOrder) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& sol : series_solve_all(n, 12)) EXPECT_TRUE(series_residual_vanishes(sol)) << sol.lambda.to_string();
}

TEST(Qde, ResidualDetectsCorruption) {
  auto sol = series_solve(Partition({2}), 4);
  sol.y[3][0] += RatFunc(1L);
  EXPECT_FALSE(series_residual_vanishes(sol));
}

TEST(Qde, HermitianOrthogonalityOfSeries) {
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 3; ++n) {
    const auto sols = series_solve_all(n, 12);
    for (const auto& a : sols)
      for (const auto& b : sols) {
        const auto h = hermitian_series(a, b);
        EXPECT_EQ(h[0], a.lambda == b.lambda ? fock::tangent_weight_product(a.lambda) : RatFunc());
        for (unsigned d = 1; d <= 12; ++d) EXPECT_TRUE(h[d].is_zero()) << a.lambda.to_string() << b.lambda.to_string() << d;
      }
  }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 120.0);
}

TEST(Qde, NumericSeriesMatchesExactSeries) {
  const auto ctx = generic_ctx();
  const auto data = numeric_series_data<double>(3, ctx.t1, ctx.t2);
  const auto at = fock::evaluation_point(ctx.t1, ctx.t2);
  for (const auto& lam : enumerate(3)) {
    const auto exact = series_solve(lam, 6);
    const auto num = series_solve(data, lam, 6);
    for (unsigned d = 0; d <= 6; ++d) {
      const auto ev = fock::evaluate<double>(exact.y[d], at);
      for (std::size_t i = 0; i < ev.size(); ++i) EXPECT_LT(std::abs(ev[i] - num.y[d][i]), 1e-10 * (1 + std::abs(ev[i])));
    }
  }
}

TEST(Qde, FundamentalSolutionAtZeroIsNormalizedClasses) {
  // Theta Y_z L^{-1} at q = 0 sends e_lambda to J^lambda / ||J^lambda||.
  const auto ctx = generic_ctx();
  for (int n = 1; n <= 3; ++n) {
    const auto data = numeric_series_data<double>(n, ctx.t1 / ctx.z, ctx.t2 / ctx.z);
    const auto a = fock::a_operator<double>(n, ctx.t1, ctx.t2);
    for (std::size_t col = 0; col < data.parts.size(); ++col) {
      const auto v = fock::theta<double>(n, ctx.z).apply(data.j[col]).scaled(
          std::pow(ctx.z, n) / fock::fixed_point_norm(data.parts[col], ctx.t1, ctx.t2));
      for (std::size_t i = 0; i < v.size(); ++i) EXPECT_LT(std::abs(v[i] - a(i, col)), 1e-12);
    }
  }
}

TEST(Qde, FundamentalSolutionSolvesRescaledEquation) {
  // z q dS/dq = M_D S at q0, with the derivative taken from the series term by term.
  const auto ctx = generic_ctx();
  const int n = 3;
  const double q0 = -0.2;
  const auto data = numeric_series_data<double>(n, ctx.t1 / ctx.z, ctx.t2 / ctx.z);
  const auto s = fundamental_s<double>(n, ctx, C(q0), 1e-14);
  const auto m = fock::m_d_numeric<double>(n, ctx.t1, ctx.t2, C(q0));
  const C log_q = algebra::log_branch(C(q0), ctx.branch);
  for (std::size_t col = 0; col < data.parts.size(); ++col) {
    const auto sol = series_solve(data, data.parts[col], s.order);
    FockVector<C> y(n), qdy(n);
    for (unsigned d = sol.order + 1; d-- > 0;) {
      y = y.scaled(C(q0)) + sol.y[d];
      qdy = qdy.scaled(C(q0)) + sol.y[d].scaled(C(double(d)));
    }
    const C c = data.content[col];
    const C factor = std::pow(ctx.z, n) * std::exp(-c * log_q) / fock::fixed_point_norm(data.parts[col], ctx.t1, ctx.t2);
    const auto theta = fock::theta<double>(n, ctx.z);
    const auto lhs = theta.apply(qdy - y.scaled(c)).scaled(factor * ctx.z);
    const auto rhs = m.apply(s.s.column(col).with_tag(fock::BasisTag::nakajima));
    for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-10 * (1 + std::abs(rhs[i])));
  }
}

TEST(Qde, KFormulaIsIdentityInWeightOne) {
  const auto ctx = generic_ctx();
  const auto k = k_formula<double>(1, ctx.t1, ctx.t2, ctx.z);
  EXPECT_LT(std::abs(k(0, 0) - C(1)), 1e-13);
  const auto r = continue_to_minus_one<double>(1, ctx);
  EXPECT_LT(std::abs(r.k_oracle(0, 0) - C(1)), 1e-10);
}

TEST(Qde, OracleMatchesFormula) {
  const auto ctx = generic_ctx();
  for (int n = 2; n <= 3; ++n) EXPECT_LT(continue_to_minus_one<double>(n, ctx).deviation, 1e-8) << n;
}

TEST(Qde, FlippedBranchIsANegativeControl) {
  auto ctx = generic_ctx();
  ctx.branch = algebra::Branch::plus_pi;
  EXPECT_GT(continue_to_minus_one<double>(2, ctx).deviation, 1e-3);
}

TEST(Qde, ExtendedPrecisionOracle) {
  using CQ = std::complex<Float128>;
  NumericContext<Float128> ctx{CQ(Float128(0.83), Float128(0.21)), CQ(Float128(-0.47), Float128(0.59)),
                               CQ(Float128(1.13), Float128(-0.35))};
  ctx.tol = 1e-20;
  const auto r = continue_to_minus_one<Float128>(2, ctx);
  EXPECT_LT(static_cast<double>(r.deviation), 1e-17);
}

TEST(Qde, Symplecticity) {
  const auto ctx = generic_ctx();
  for (int n = 1; n <= 3; ++n) {
    const auto kp = k_formula<double>(n, ctx.t1, ctx.t2, ctx.z);
    const auto km = k_formula<double>(n, ctx.t1, ctx.t2, -ctx.z);
    EXPECT_LT(symplectic_defect<double>(km, kp, ctx.t1, ctx.t2), 1e-8);
    if (n >= 2) EXPECT_GT(symplectic_defect<double>(kp, kp, ctx.t1, ctx.t2), 1e-3);
  }
}

TEST(Qde, SymplecticityOnIllConditionedSeed) {
  const auto ctx = algebra::sample_context<double>(2, 3).ctx;
  const auto kp = k_formula<double>(3, ctx.t1, ctx.t2, ctx.z);
  const auto km = k_formula<double>(3, ctx.t1, ctx.t2, -ctx.z);
  EXPECT_LT(symplectic_defect<double>(km, kp, ctx.t1, ctx.t2), 1e-8);
  EXPECT_GT(symplectic_defect<double>(kp, kp, ctx.t1, ctx.t2), 1e-3);
}

TEST(Qde, DecayInInverseZ) {
  auto ctx = generic_ctx();
  const C dir = ctx.z / std::abs(ctx.z);
  std::vector<double> defects;
  for (double r : {10.0, 20.0, 40.0}) {
    ctx.z = dir * r;
    const auto res = continue_to_minus_one<double>(2, ctx);
    EXPECT_LT(res.deviation, 1e-8);
    defects.push_back(identity_defect(res.k_oracle));
  }
  EXPECT_NEAR(defects[1] / defects[0], 0.5, 0.1);
  EXPECT_NEAR(defects[2] / defects[1], 0.5, 0.1);
}

TEST(Qde, IntegratorSelfConsistency) {
  auto ctx = generic_ctx();
  ctx.tol = 1e-9;
  const auto s = fundamental_s<double>(2, ctx, C(-0.2), 1e-14);
  const auto coarse = integrate_ray<double>(s.s, ctx, 0.2, 1e-9);
  const auto fine = integrate_ray<double>(s.s, ctx, 0.2, 0.5e-9);
  double diff = 0;
  for (std::size_t i = 0; i < coarse.phi.dim(); ++i)
    for (std::size_t j = 0; j < coarse.phi.dim(); ++j) diff = std::max(diff, std::abs(coarse.phi(i, j) - fine.phi(i, j)));
  EXPECT_LT(diff, coarse.stats.error_estimate);
  EXPECT_GT(fine.stats.accepted, coarse.stats.accepted);
}
