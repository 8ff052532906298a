#include "cyclecollide/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cyclecollide/analytic.hpp"
#include "cyclecollide/montecarlo.hpp"
#include "cyclecollide/report.hpp"

namespace cyclecollide::verify {

namespace {

using analytic::IntegrandKind;
using analytic::QuadratureConfig;

struct Outcome {
  bool passed = false;
  std::string measured;
};

std::string fmt(double v) { return report::format_double(v); }

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

QuadratureConfig pick(const VerifyOptions& o, QuadratureConfig fallback) {
  return o.quad_override.value_or(fallback);
}

Outcome brute_force_equivalence(const VerifyOptions& o) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const auto hist = brute_force_cycle_histogram(n);
    const exact::StirlingRow row = o.row_builder(n);
    if (row.coeffs.size() != n) {
      return {false, "row " + std::to_string(n) + " has wrong length"};
    }
    for (std::uint32_t k = 1; k <= n; ++k) {
      if (row[k] != hist[k - 1]) {
        return {false, "mismatch at [" + std::to_string(n) + " " + std::to_string(k) +
                           "]: row " + row[k].get_str() + " vs enumeration " +
                           std::to_string(hist[k - 1])};
      }
    }
  }
  return {true, "rows 1..8 match enumeration of all n! permutations"};
}

Outcome row_sum_identity(const VerifyOptions& o) {
  exact::Natural nfact = 1;
  for (std::uint32_t n = 1; n <= 500; ++n) {
    nfact *= n;
    const exact::StirlingRow row = o.row_builder(n);
    exact::Natural sum = 0;
    for (const auto& c : row.coeffs) sum += c;
    if (row.coeffs.size() != n || sum != nfact) {
      return {false, "row sum differs from n! at n = " + std::to_string(n)};
    }
  }
  return {true, "sum_k [n k] = n! for n = 1..500"};
}

Outcome parseval_exactness(const VerifyOptions& o) {
  const QuadratureConfig q = pick(o, {1e-12, 0.0, 1'000'000});
  double worst = 0.0;
  std::ostringstream detail;
  for (std::uint32_t n : {2u, 5u, 10u, 50u, 100u, 512u}) {
    const double exact = exact::p_exact(n).approx;
    const double quad = analytic::p_quadrature(n, IntegrandKind::ExactProduct, q);
    worst = std::max(worst, std::fabs(quad - exact) / exact);
  }
  detail << "max rel diff " << sci(worst) << " (limit 1e-09)";
  return {worst <= 1e-9, detail.str()};
}

Outcome integrand_agreement(const VerifyOptions&) {
  double worst = 0.0;
  for (double n : {10.0, 200.0, 1e4}) {
    for (int i = 0; i < 32; ++i) {
      const double theta = 2.0 * std::numbers::pi * (i + 0.5) / 32.0;
      const double a = analytic::integrand(IntegrandKind::ExactProduct, n, theta);
      const double b = analytic::integrand(IntegrandKind::GammaRatio, n, theta);
      worst = std::max(worst, std::fabs(a - b) / std::fabs(a));
    }
  }
  return {worst <= 1e-9, "max rel diff " + sci(worst) + " (limit 1e-09)"};
}

Outcome laplace_estimate(const VerifyOptions& o) {
  const QuadratureConfig q = pick(o, {1e-12, 0.0, 1'000'000});
  bool ok = true;
  std::ostringstream detail;
  for (double n : {1e2, 1e3, 1e4, 1e6}) {
    const double dev = std::fabs(analytic::I_n(n, q).value / analytic::laplace_I(n) - 1.0);
    const double bound = 1.5 / std::log(n);
    ok = ok && dev <= bound;
    detail << (n == 1e2 ? "" : "; ") << "n=" << n << ": " << sci(dev) << " <= " << sci(bound);
  }
  return {ok, detail.str()};
}

Outcome theorem_convergence(const VerifyOptions& o) {
  const QuadratureConfig q = pick(o, {1e-12, 0.0, 1'000'000});
  std::vector<double> ratios;
  std::ostringstream detail;
  detail << "r(n) =";
  for (std::uint32_t n : {100u, 10'000u, 1'000'000u, 100'000'000u}) {
    const double p = analytic::p_quadrature(n, IntegrandKind::GammaRatio, q);
    ratios.push_back(p / analytic::p_asymptotic(n));
    detail << ' ' << std::setprecision(8) << ratios.back();
  }
  const bool decreasing = std::adjacent_find(ratios.begin(), ratios.end(),
                                             [](double a, double b) { return b >= a; }) ==
                          ratios.end();
  const double band = std::fabs(ratios.back() - 1.0);
  detail << "; |r(1e8) - 1| = " << sci(band) << " (limit 0.1)";
  return {decreasing && band <= 0.1, detail.str()};
}

Outcome monte_carlo_consistency(const VerifyOptions& o) {
  const double exact10 = exact::p_exact(10).approx;
  const auto est = mc::estimate_collision(10, 1'000'000, mc::SamplerKind::PermutationDirect,
                                          mc::Seed{0}, o.workers);
  const double z = std::fabs(est.p_hat - exact10) / est.std_err;
  bool ok = z <= 4.0;
  std::ostringstream detail;
  detail << "n=10 p_hat " << fmt(est.p_hat) << " vs " << fmt(exact10) << " (" << sci(z)
         << " std errs); chi-square p-values:";
  for (std::uint32_t n : {2u, 6u, 12u}) {
    const auto dist = exact::cycle_distribution(n);
    std::vector<double> probs;
    for (const auto& q : dist.probs) probs.push_back(exact::to_double(q));
    for (auto kind : {mc::SamplerKind::PermutationDirect, mc::SamplerKind::BernoulliSum}) {
      const std::uint64_t seed = 2 * n + (kind == mc::SamplerKind::BernoulliSum ? 1 : 0);
      const auto hist = mc::cycle_count_histogram(kind, n, 1'000'000, mc::Seed{seed}, o.workers);
      const auto chi = mc::chi_square_gof(hist, probs);
      ok = ok && chi.p_value >= 1e-6;
      detail << ' ' << mc::to_string(kind)[0] << n << '=' << sci(chi.p_value);
    }
  }
  return {ok, detail.str()};
}

Outcome weierstrass_product(const VerifyOptions&) {
  bool ok = true;
  std::ostringstream detail;
  for (double theta : {0.5, 1.0, 2.0}) {
    const analytic::Complex z = std::polar(1.0, theta);
    const analytic::Complex limit = analytic::weierstrass_limit(z);
    double previous = INFINITY;
    for (std::uint64_t r : {1000ull, 2000ull, 4000ull, 8000ull, 16000ull, 32000ull, 64000ull,
                            100000ull}) {
      const double err = std::abs(analytic::weierstrass_partial(z, r) - limit) / std::abs(limit);
      ok = ok && err < previous;
      previous = err;
    }
    ok = ok && previous <= 1e-4;
    detail << (theta == 0.5 ? "" : "; ") << "theta=" << theta << ": rel err " << sci(previous);
  }
  return {ok, detail.str()};
}

Outcome table_determinism(const VerifyOptions& o) {
  report::ReportConfig cfg;
  cfg.n_values = {3, 10, 100, 512, 1000};
  cfg.methods = {report::Method::Exact, report::Method::Quadrature, report::Method::Eq2,
                 report::Method::Asymptotic, report::Method::MonteCarlo};
  cfg.mc_pairs = 20'000;
  cfg.seed = mc::Seed{0};
  cfg.workers = o.workers;
  if (o.quad_override) cfg.quad = *o.quad_override;
  std::string first[2];
  std::string second[2];
  for (int run = 0; run < 2; ++run) {
    const auto rows = report::run_report(cfg);
    auto& slot = run == 0 ? first : second;
    slot[0] = report::render_csv(rows);
    slot[1] = report::render_json(rows, cfg);
  }
  const bool ok = first[0] == second[0] && first[1] == second[1];
  return {ok, ok ? "csv and json byte-identical across two runs"
                 : "output differs between runs"};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;
  Outcome (*run)(const VerifyOptions&);
};

constexpr Criterion kCriteria[] = {
    {1, "brute-force equivalence", 5.0, brute_force_equivalence},
    {2, "row-sum identity", 30.0, row_sum_identity},
    {3, "Parseval exactness", 60.0, parseval_exactness},
    {4, "integrand dual-route agreement", 10.0, integrand_agreement},
    {5, "Laplace estimate", 30.0, laplace_estimate},
    {6, "theorem convergence", 60.0, theorem_convergence},
    {7, "Monte Carlo consistency", 60.0, monte_carlo_consistency},
    {8, "Weierstrass product", 10.0, weierstrass_product},
    {9, "determinism", 60.0, table_determinism},
};

}  // namespace

std::vector<std::uint64_t> brute_force_cycle_histogram(std::uint32_t n) {
  if (n == 0 || n > 10) {
    throw std::domain_error("brute_force_cycle_histogram: n must be in 1..10");
  }
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::uint64_t> hist(n, 0);
  std::vector<bool> seen(n);
  do {
    std::fill(seen.begin(), seen.end(), false);
    std::uint32_t cycles = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (std::uint32_t x = s; !seen[x]; x = perm[x]) seen[x] = true;
    }
    ++hist[cycles - 1];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return hist;
}

bool VerifySummary::all_passed() const {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

const CriterionResult* VerifySummary::find(int id) const {
  for (const auto& r : results) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

VerifySummary run_verify(const VerifyOptions& options, std::ostream* log) {
  VerifySummary summary;
  for (const auto& c : kCriteria) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    CriterionResult result;
    result.id = c.id;
    result.name = c.name;
    result.time_limit = c.time_limit;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run(options);
    } catch (const analytic::ConvergenceError& e) {
      outcome = {false, std::string("convergence error: ") + e.what() +
                            " (best " + fmt(e.best().value) + " +/- " +
                            fmt(e.best().abs_error_estimate) + ")"};
    } catch (const std::exception& e) {
      outcome = {false, std::string("error: ") + e.what()};
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.passed = outcome.passed && result.seconds < c.time_limit;
    result.measured = outcome.measured;
    if (outcome.passed && !result.passed) {
      result.measured += " [over time limit]";
    }
    if (log != nullptr) {
      *log << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ". " << result.name
           << ": " << result.measured << " (" << std::fixed << std::setprecision(2)
           << result.seconds << "s / " << std::setprecision(0) << c.time_limit << "s)"
           << std::defaultfloat << std::setprecision(6) << '\n';
    }
    summary.results.push_back(std::move(result));
  }
  return summary;
}

}  // namespace cyclecollide::verify
