#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "hilbsym/algebra/parallel.hpp"
#include "hilbsym/algebra/sampling.hpp"
#include "hilbsym/fock/energy.hpp"
#include "hilbsym/fock/pairing.hpp"
#include "hilbsym/integral/integral.hpp"
#include "hilbsym/qde/series.hpp"

namespace hilbsym::cli {

namespace {

using algebra::Float128;
using algebra::MultiPoly;
using algebra::NumericContext;
using algebra::RatFunc;
using algebra::Var;
using nlohmann::ordered_json;
using partitions::enumerate;
using partitions::Partition;

constexpr double kNegativeControl = 1e-3;
constexpr double kSymplecticTolerance = 1e-8;
constexpr double kGammaTolerance = 1e-10;
constexpr unsigned kGammaPoints = 100;

using Task = std::function<std::vector<CheckRecord>()>;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CheckRecord exact(std::string name, std::string index, bool ok) {
  CheckRecord r;
  r.name = std::move(name);
  r.index = std::move(index);
  r.passed = ok;
  return r;
}

CheckRecord below(std::string name, std::string index, double value, double threshold) {
  CheckRecord r;
  r.name = std::move(name);
  r.index = std::move(index);
  r.value = value;
  r.relation = "<";
  r.threshold = threshold;
  r.passed = value < threshold;
  return r;
}

CheckRecord at_least(std::string name, std::string index, double value, double threshold) {
  CheckRecord r = below(std::move(name), std::move(index), value, threshold);
  r.relation = ">=";
  r.passed = value >= threshold;
  return r;
}

/// Runs one task, turning numeric-domain failures into a failed record.
std::vector<CheckRecord> guarded(const std::string& name, const std::string& index, const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<CheckRecord> out;
  try {
    out = task();
  } catch (const algebra::DomainError& e) {
    CheckRecord r = exact(name, index, false);
    r.error = e.what();
    out = {r};
  } catch (const integral::RouteDisagreement& e) {
    CheckRecord r = exact(name, index, false);
    r.error = e.what();
    out = {r};
  }
  const double elapsed = seconds_since(start);
  for (auto& r : out) r.runtime = elapsed / static_cast<double>(out.size());
  return out;
}

struct NamedTask {
  std::string name;
  std::string index;
  Task task;
};

std::vector<CheckRecord> run_tasks(const std::vector<NamedTask>& tasks) {
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  algebra::parallel_for(tasks.size(), [&](std::size_t i) { results[i] = guarded(tasks[i].name, tasks[i].index, tasks[i].task); });
  std::vector<CheckRecord> flat;
  for (auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

std::string pair_index(const Partition& a, const Partition& b) { return a.to_string() + ";" + b.to_string(); }

ordered_json parts_json(const Partition& p) { return ordered_json(p.parts()); }

template <class Real>
ordered_json complex_json(const algebra::Complex<Real>& c) {
  return ordered_json::array({static_cast<double>(c.real()), static_cast<double>(c.imag())});
}

ordered_json poly_json(const MultiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(ordered_json{{"exponents", ordered_json(e)}, {"coefficient", algebra::to_string(c)}});
  return terms;
}

ordered_json ratfunc_json(const RatFunc& f) { return ordered_json{{"num", poly_json(f.numerator())}, {"den", poly_json(f.denominator())}}; }

// Parameter points.

template <class Real>
struct Point {
  std::string label;
  NumericContext<Real> ctx;
};

template <class Real>
algebra::Complex<Real> lift(const std::complex<double>& x) {
  return {Real(x.real()), Real(x.imag())};
}

template <class Real>
std::vector<Point<Real>> parameter_points(const RunConfig& config, int n_max, double integration_tol, ordered_json& record) {
  std::vector<Point<Real>> out;
  if (config.seeds.empty()) {
    NumericContext<Real> ctx{lift<Real>({0.41, 0.23}), lift<Real>({-0.67, 0.31}), lift<Real>({1.1, 0.35}), config.branch,
                             integration_tol};
    out.push_back({"fixed", ctx});
    record.push_back(ordered_json{{"label", "fixed"},
                                  {"t1", complex_json(ctx.t1)},
                                  {"t2", complex_json(ctx.t2)},
                                  {"z", complex_json(ctx.z)}});
    return out;
  }
  for (std::uint64_t seed : config.seeds) {
    const auto s = algebra::sample_context<Real>(seed, n_max, config.branch, integration_tol);
    const std::string label = "seed=" + std::to_string(seed);
    out.push_back({label, s.ctx});
    record.push_back(ordered_json{{"label", label},
                                  {"seed", seed},
                                  {"prng", "mt19937_64"},
                                  {"attempts", s.attempts},
                                  {"t1", complex_json(s.ctx.t1)},
                                  {"t2", complex_json(s.ctx.t2)},
                                  {"z", complex_json(s.ctx.z)}});
  }
  return out;
}

// verify-jack

void verify_jack(Report& report) {
  std::vector<NamedTask> tasks;
  for (int n = 1; n <= report.config.n; ++n) {
    for (const auto& lam : enumerate(n))
      tasks.push_back({"jack_eigenvector", lam.to_string(), [lam] {
                         const auto& j = fock::fixed_point_class(lam);
                         const RatFunc c(partitions::content_sum(lam).to_poly());
                         return std::vector<CheckRecord>{
                             exact("jack_eigenvector", lam.to_string(), fock::m_d_at_zero(lam.size()).apply(j) == j.scaled(-c))};
                       }});
    for (const auto& a : enumerate(n))
      for (const auto& b : enumerate(n))
        tasks.push_back({"jack_pairing", pair_index(a, b), [a, b] {
                           const auto& ja = fock::fixed_point_class(a);
                           const auto& jb = fock::fixed_point_class(b);
                           const RatFunc expected = a == b ? fock::tangent_weight_product(a) : RatFunc();
                           return std::vector<CheckRecord>{
                               exact("eta_pairing", pair_index(a, b), fock::eta(ja, jb, fock::symbolic_params()) == expected),
                               exact("hermitian_pairing", pair_index(a, b), fock::hermitian(ja, jb) == expected)};
                         }});
  }
  report.checks = run_tasks(tasks);
}

// verify-qde-series

void verify_qde_series(Report& report) {
  const unsigned order = report.config.order;
  for (int n = 1; n <= report.config.n; ++n) {
    const auto sols = qde::series_solve_all(n, order);
    std::vector<NamedTask> tasks;
    for (const auto& sol : sols)
      tasks.push_back({"qde_residual", sol.lambda.to_string(), [&sol] {
                         return std::vector<CheckRecord>{exact("qde_residual", sol.lambda.to_string(), qde::series_residual_vanishes(sol))};
                       }});
    for (const auto& a : sols)
      for (const auto& b : sols)
        tasks.push_back({"series_orthogonality", pair_index(a.lambda, b.lambda), [&a, &b, order] {
                           const auto h = qde::hermitian_series(a, b);
                           bool ok = h[0] == (a.lambda == b.lambda ? fock::tangent_weight_product(a.lambda) : RatFunc());
                           for (unsigned d = 1; d <= order; ++d) ok = ok && h[d].is_zero();
                           return std::vector<CheckRecord>{exact("series_orthogonality", pair_index(a.lambda, b.lambda), ok)};
                         }});
    const auto records = run_tasks(tasks);
    report.checks.insert(report.checks.end(), records.begin(), records.end());
  }
}

// verify-connection

template <class Real>
void verify_connection(Report& report) {
  const RunConfig& config = report.config;
  const double tol = config.tol.value_or(1e-6);
  const double integration_tol = std::is_same_v<Real, double> ? std::clamp(1e-4 * tol, 1e-12, 1e-10) : 1e-20;
  const auto points = parameter_points<Real>(config, config.n, integration_tol, report.parameters);
  const int n = config.n;
  std::vector<NamedTask> tasks;
  std::vector<ordered_json> stats(points.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& pt = points[p];
    tasks.push_back({"k_oracle_vs_formula", pt.label, [&pt, &stats, p, n, tol] {
                       const auto r = qde::continue_to_minus_one<Real>(n, pt.ctx);
                       stats[p] = ordered_json{{"label", pt.label},
                                               {"series_order", r.series_order},
                                               {"series_tail", static_cast<double>(r.series_tail)},
                                               {"accepted_steps", r.stats.accepted},
                                               {"rejected_steps", r.stats.rejected},
                                               {"min_step", static_cast<double>(r.stats.min_step)},
                                               {"max_step", static_cast<double>(r.stats.max_step)},
                                               {"error_estimate", static_cast<double>(r.stats.error_estimate)}};
                       return std::vector<CheckRecord>{below("k_oracle_vs_formula", pt.label, static_cast<double>(r.deviation), tol)};
                     }});
    tasks.push_back({"flipped_branch_control", pt.label, [&pt, n] {
                       auto ctx = pt.ctx;
                       ctx.branch = ctx.branch == algebra::Branch::plus_pi ? algebra::Branch::minus_pi : algebra::Branch::plus_pi;
                       const auto r = qde::continue_to_minus_one<Real>(n, ctx);
                       return std::vector<CheckRecord>{
                           at_least("flipped_branch_control", pt.label, static_cast<double>(r.deviation), kNegativeControl)};
                     }});
    for (int m = 1; m <= n; ++m)
      tasks.push_back({"symplecticity", pt.label + ";n=" + std::to_string(m), [&pt, m] {
                         const auto& c = pt.ctx;
                         const auto kp = qde::k_formula<Real>(m, c.t1, c.t2, c.z);
                         const auto km = qde::k_formula<Real>(m, c.t1, c.t2, -c.z);
                         const double d = static_cast<double>(qde::symplectic_defect<Real>(km, kp, c.t1, c.t2));
                         return std::vector<CheckRecord>{below("symplecticity", pt.label + ";n=" + std::to_string(m), d, kSymplecticTolerance)};
                       }});
    tasks.push_back({"k_decay", pt.label, [&pt, tol] {
                       constexpr int n = 2;
                       using std::abs;
                       auto ctx = pt.ctx;
                       const auto dir = ctx.z / Real(abs(ctx.z));
                       std::vector<CheckRecord> out;
                       std::vector<double> defects;
                       for (double radius : {10.0, 20.0, 40.0}) {
                         ctx.z = dir * Real(radius);
                         const auto r = qde::continue_to_minus_one<Real>(n, ctx);
                         const std::string idx = pt.label + ";|z|=" + std::to_string(static_cast<int>(radius));
                         out.push_back(below("k_oracle_vs_formula_large_z", idx, static_cast<double>(r.deviation), tol));
                         defects.push_back(static_cast<double>(qde::identity_defect(r.k_oracle)));
                       }
                       out.push_back(below("k_decay_ratio", pt.label + ";20/10", std::abs(defects[1] / defects[0] - 0.5), 0.1));
                       out.push_back(below("k_decay_ratio", pt.label + ";40/20", std::abs(defects[2] / defects[1] - 0.5), 0.1));
                       return out;
                     }});
  }
  report.checks = run_tasks(tasks);
  report.data["integration"] = ordered_json::array();
  for (auto& s : stats)
    if (!s.is_null()) report.data["integration"].push_back(s);
}

// verify-theorem2

template <class Real>
void verify_theorem2(Report& report) {
  const RunConfig& config = report.config;
  const double tol = config.tol.value_or(1e-8);
  const auto points = parameter_points<Real>(config, config.n, 1e-10, report.parameters);
  std::vector<NamedTask> tasks;
  for (const auto& pt : points) {
    for (int n = 1; n <= config.n; ++n) {
      for (const auto& lam : enumerate(n)) {
        const std::string idx = pt.label + ";" + lam.to_string();
        tasks.push_back({"diagram", idx, [&pt, lam, idx, tol] {
                           const auto d = integral::diagram_check(lam, pt.ctx);
                           const auto h = integral::psi_hilb_routes(lam, pt.ctx);
                           const auto s = integral::psi_sym_fm_routes(lam, pt.ctx);
                           const double route = integral::kTwoRouteTolerance;
                           return std::vector<CheckRecord>{below("diagram", idx, static_cast<double>(d.deviation), tol),
                                                           below("psi_hilb_two_route", idx, static_cast<double>(h.deviation), route),
                                                           below("psi_sym_two_route", idx, static_cast<double>(s.deviation), route)};
                         }});
        tasks.push_back({"gamma_sym_two_route", idx, [&pt, lam, idx] {
                           const double d = static_cast<double>(integral::relative_difference(
                               integral::gamma_sym_eigenbundle(lam, pt.ctx.t1, pt.ctx.t2), integral::gamma_sym_closed(lam, pt.ctx.t1, pt.ctx.t2)));
                           return std::vector<CheckRecord>{below("gamma_sym_two_route", idx, d, integral::kTwoRouteTolerance)};
                         }});
      }
      const std::string idx = pt.label + ";n=" + std::to_string(n);
      tasks.push_back({"delta3_vs_delta_hilb", idx, [&pt, n, idx] {
                         const auto a = integral::delta3_operator(n, pt.ctx);
                         const auto b = integral::delta_hilb_operator(n, pt.ctx);
                         Real worst(0);
                         for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, integral::relative_difference(a(i, i), b(i, i)));
                         return std::vector<CheckRecord>{below("delta3_vs_delta_hilb", idx, static_cast<double>(worst), integral::kTwoRouteTolerance)};
                       }});
    }
    if (config.n >= 2) {
      const Partition lam = enumerate(config.n).front();
      const std::string idx = pt.label + ";" + lam.to_string();
      tasks.push_back({"diagram_control_unflipped_z", idx, [&pt, lam, idx] {
                         const int n = lam.size();
                         const auto k_plus = qde::k_formula<Real>(n, pt.ctx.t1, pt.ctx.t2, pt.ctx.z);
                         const auto wrong = fock::c_operator<Real>(n).apply(k_plus.apply(integral::psi_hilb(lam, pt.ctx)));
                         const double d = static_cast<double>(integral::detail::vector_deviation(wrong, integral::psi_sym_fm(lam, pt.ctx)));
                         return std::vector<CheckRecord>{at_least("diagram_control_unflipped_z", idx, d, kNegativeControl)};
                       }});
    }
  }
  report.checks = run_tasks(tasks);
}

// verify-identities

bool theta_conjugation_holds(int n) {
  const RatFunc z = RatFunc::variable(Var::z);
  for (const auto& mu : enumerate(n)) {
    const auto x = fock::FockVector<RatFunc>::basis_vector(mu);
    const auto tx = fock::theta_symbolic(n).apply(x);
    for (int k = 1; k <= 4; ++k) {
      if (fock::theta_symbolic(n + k).apply(fock::alpha(-k, x)) != fock::alpha(-k, tx).scaled(z)) return false;
      if (k <= n && fock::theta_symbolic(n - k).apply(fock::alpha(k, x)) != fock::alpha(k, tx).scaled(z.inverse())) return false;
    }
  }
  return true;
}

unsigned multiplicity(MultiPoly p, const MultiPoly& f) {
  unsigned m = 0;
  while (!p.is_zero()) {
    auto q = p.exact_divide(f);
    if (!q) break;
    p = std::move(*q);
    ++m;
  }
  return m;
}

/// The q = -1 singular parts of the M_D(q) coefficient cancel: the combined fraction vanishes there.
bool pole_cancels(int k) {
  const auto f = fock::combined_coefficient_fraction(k);
  if (f.numerator.is_zero()) return true;
  const MultiPoly qp1 = MultiPoly::variable(Var::q) + MultiPoly(1L);
  return multiplicity(f.numerator, qp1) > multiplicity(f.denominator, qp1);
}

std::complex<double> gamma_point(std::mt19937_64& rng) {
  for (;;) {
    const std::complex<double> x(-2.5 + 5 * algebra::detail::unit_uniform(rng), -2.5 + 5 * algebra::detail::unit_uniform(rng));
    if (!algebra::detail::near_integer(x, 10, 0.05)) return x;
  }
}

void verify_identities(Report& report) {
  const int n_max = report.config.n;
  const double tol = report.config.tol.value_or(kGammaTolerance);
  const std::uint64_t seed = report.config.seeds.empty() ? 0 : report.config.seeds.front();
  std::vector<NamedTask> tasks;
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& mu : enumerate(n))
      tasks.push_back({"final_identity", mu.to_string(), [mu] {
                         return std::vector<CheckRecord>{exact("final_identity", mu.to_string(), integral::final_identity_holds(mu))};
                       }});
  }
  for (int n = 0; n <= n_max; ++n)
    tasks.push_back({"theta_conjugation", "n=" + std::to_string(n), [n] {
                       return std::vector<CheckRecord>{exact("theta_conjugation", "n=" + std::to_string(n), theta_conjugation_holds(n))};
                     }});
  for (int k = 1; k <= 5; ++k)
    tasks.push_back({"pole_cancellation", "k=" + std::to_string(k), [k] {
                       return std::vector<CheckRecord>{exact("pole_cancellation", "k=" + std::to_string(k), pole_cancels(k))};
                     }});
  const std::string idx = "seed=" + std::to_string(seed) + ";points=" + std::to_string(kGammaPoints);
  tasks.push_back({"gamma_identities", idx, [seed, idx, tol] {
                     std::mt19937_64 rng(seed);
                     double reflection = 0, multiplication = 0, phase = 0;
                     for (unsigned i = 0; i < kGammaPoints; ++i) {
                       const auto x = gamma_point(rng);
                       reflection = std::max(reflection, integral::gamma_reflection_defect(x));
                       multiplication = std::max(multiplication, integral::gamma_multiplication_defect(x, 2 + static_cast<int>(i % 4)));
                       phase = std::max(phase, integral::gamma_phase_defect(x));
                     }
                     return std::vector<CheckRecord>{below("gamma_reflection", idx, reflection, tol),
                                                     below("gamma_multiplication", idx, multiplication, tol),
                                                     below("gamma_phase_identity", idx, phase, tol)};
                   }});
  report.checks = run_tasks(tasks);
}

// dump

void dump(Report& report) {
  const int n_max = report.config.n;
  ordered_json& d = report.data;
  d["variables"] = ordered_json::array();
  for (std::size_t v = 0; v < algebra::kNumVars; ++v) d["variables"].push_back(std::string(algebra::var_name(static_cast<Var>(v))));
  d["fixed_point_classes"] = ordered_json::array();
  d["macdonald_modified_schur"] = ordered_json::array();
  for (int n = 1; n <= n_max; ++n)
    for (const auto& lam : enumerate(n)) {
      ordered_json coeffs = ordered_json::array();
      const auto& j = fock::fixed_point_class(lam);
      for (std::size_t i = 0; i < j.size(); ++i)
        if (!j[i].is_zero()) coeffs.push_back(ordered_json{{"basis", parts_json(j.partition(i))}, {"value", ratfunc_json(j[i])}});
      d["fixed_point_classes"].push_back(ordered_json{{"lambda", parts_json(lam)}, {"nakajima", coeffs}});
      const auto h = symfun::convert(integral::fm_skyscraper(lam), symfun::Basis::s);
      ordered_json hs = ordered_json::array();
      for (const auto& mu : enumerate(n)) {
        const RatFunc c = h.coefficient(mu);
        if (!c.is_zero()) hs.push_back(ordered_json{{"schur", parts_json(mu)}, {"value", ratfunc_json(c)}});
      }
      d["macdonald_modified_schur"].push_back(ordered_json{{"lambda", parts_json(lam)}, {"coefficients", hs}});
    }
  ordered_json series = ordered_json::array();
  const auto terms = fock::m_d_series(n_max, report.config.order);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < terms[k].dim(); ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < terms[k].dim(); ++j) row.push_back(ratfunc_json(terms[k](i, j)));
      rows.push_back(row);
    }
    series.push_back(ordered_json{{"q_power", k}, {"matrix", rows}});
  }
  ordered_json basis = ordered_json::array();
  for (const auto& mu : enumerate(n_max)) basis.push_back(parts_json(mu));
  d["m_d_series"] = ordered_json{{"n", n_max}, {"basis", basis}, {"coefficients", series}};
}

}  // namespace

std::string to_string(Precision p) { return p == Precision::f64 ? "f64" : "ext"; }

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"verify-jack",     "verify-qde-series", "verify-connection",
                                                 "verify-theorem2", "verify-identities", "dump"};
  return names;
}

void validate(const RunConfig& config) {
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), config.command) == names.end()) throw ConfigError("unknown command: " + config.command);
  if (config.n < 1) throw ConfigError("--n must be at least 1");
  if (config.order < 4) throw ConfigError("--order must be at least 4");
  if (config.tol && !(*config.tol > 0)) throw ConfigError("--tol must be positive");
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

Report run(const RunConfig& config) {
  validate(config);
  Report report;
  report.config = config;
  const bool ext = config.precision == Precision::ext;
  if (config.command == "verify-jack") {
    verify_jack(report);
  } else if (config.command == "verify-qde-series") {
    verify_qde_series(report);
  } else if (config.command == "verify-connection") {
    ext ? verify_connection<Float128>(report) : verify_connection<double>(report);
  } else if (config.command == "verify-theorem2") {
    ext ? verify_theorem2<Float128>(report) : verify_theorem2<double>(report);
  } else if (config.command == "verify-identities") {
    verify_identities(report);
  } else {
    dump(report);
  }
  return report;
}

ordered_json to_json(const Report& report) {
  const RunConfig& c = report.config;
  ordered_json config{{"n", c.n},
                      {"order", c.order},
                      {"tol", c.tol ? ordered_json(*c.tol) : ordered_json(nullptr)},
                      {"parameter_mode", c.seeds.empty() ? "fixed" : "seeded"},
                      {"seeds", c.seeds},
                      {"branch", algebra::to_string(c.branch)},
                      {"precision", to_string(c.precision)}};
  ordered_json checks = ordered_json::array();
  for (const auto& r : report.checks) {
    ordered_json j{{"name", r.name}, {"index", r.index}};
    if (r.value) {
      j["max_relative_deviation"] = *r.value;
      j["relation"] = r.relation;
      j["threshold"] = r.threshold;
    } else {
      j["result"] = r.passed ? "exact-pass" : "exact-fail";
    }
    j["passed"] = r.passed;
    if (!r.error.empty()) j["error"] = r.error;
    if (c.timings) j["runtime_s"] = r.runtime;
    checks.push_back(j);
  }
  ordered_json out{{"command", c.command}, {"config", config}};
  if (!report.parameters.empty()) out["parameters"] = report.parameters;
  out["checks"] = checks;
  if (!report.data.empty()) out["data"] = report.data;
  out["passed"] = report.passed();
  return out;
}

}  // namespace hilbsym::cli
