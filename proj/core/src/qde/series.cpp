#include "hilbsym/qde/series.hpp"

#include "hilbsym/algebra/parallel.hpp"
#include "hilbsym/fock/energy.hpp"

namespace hilbsym::qde {

SeriesData<RatFunc> exact_series_data(int n) {
  SeriesData<RatFunc> d;
  d.n = n;
  d.params = fock::symbolic_params();
  d.parts = partitions::enumerate(n);
  for (const auto& nu : d.parts) {
    d.j.push_back(fock::fixed_point_class(nu));
    d.j_norm2.push_back(fock::tangent_weight_product(nu));
    d.content.push_back(RatFunc(partitions::content_sum(nu).to_poly()));
  }
  return d;
}

long series_diagonal(const Partition& mu, unsigned d) {
  long c = mu.size();
  for (const auto& [k, mult] : mu.multiplicities())
    if (d % static_cast<unsigned>(k) == 0) c -= static_cast<long>(k) * k * mult;
  return d % 2 == 1 ? -c : c;
}

SeriesSolution<RatFunc> series_solve(const Partition& lambda, unsigned order) {
  return series_solve(exact_series_data(lambda.size()), lambda, order);
}

std::vector<SeriesSolution<RatFunc>> series_solve_all(int n, unsigned order) {
  const SeriesData<RatFunc> data = exact_series_data(n);
  std::vector<SeriesSolution<RatFunc>> out(data.parts.size());
  algebra::parallel_for(data.parts.size(), [&](std::size_t i) { out[i] = series_solve(data, data.parts[i], order); });
  return out;
}

bool series_residual_vanishes(const SeriesSolution<RatFunc>& sol) {
  const int n = sol.lambda.size();
  const auto m = fock::m_d_series(n, sol.order);
  const RatFunc c(partitions::content_sum(sol.lambda).to_poly());
  for (unsigned d = 0; d <= sol.order; ++d) {
    FockVector<RatFunc> r = sol.y[d].scaled(RatFunc(static_cast<long>(d)) - c);
    for (unsigned dp = 0; dp <= d; ++dp) r -= m[dp].apply(sol.y[d - dp]);
    for (const auto& x : r.coefficients())
      if (!x.is_zero()) return false;
  }
  return true;
}

std::vector<RatFunc> hermitian_series(const SeriesSolution<RatFunc>& a, const SeriesSolution<RatFunc>& b) {
  const unsigned order = std::min(a.order, b.order);
  std::vector<RatFunc> out(order + 1);
  const auto p = fock::symbolic_params();
  std::vector<RatFunc> weights;
  std::vector<std::vector<RatFunc>> barred(order + 1);
  for (const auto& mu : a.y[0].partitions()) weights.push_back(fock::tilde_weight(mu, p));
  for (unsigned j = 0; j <= order; ++j)
    for (std::size_t k = 0; k < b.y[j].size(); ++k) barred[j].push_back(b.y[j][k].bar());
  for (unsigned d = 0; d <= order; ++d) {
    algebra::DeferredSum acc;
    for (unsigned i = 0; i <= d; ++i)
      for (std::size_t k = 0; k < weights.size(); ++k) acc.add_product(a.y[i][k], barred[d - i][k], weights[k]);
    out[d] = acc.value();
  }
  return out;
}

}  // namespace hilbsym::qde
