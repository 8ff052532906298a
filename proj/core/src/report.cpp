#include "cyclecollide/report.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cyclecollide::report {

namespace {

using analytic::ConvergenceError;
using analytic::IntegrandKind;

void fill_exact(CollisionReportRow& row, const ReportConfig& config,
                std::optional<double>& p_exact_value) {
  if (row.n > config.exact_ceiling) {
    row.notes.push_back("exact: n exceeds the exact-route ceiling " +
                        std::to_string(config.exact_ceiling) + "; use quadrature");
    return;
  }
  const exact::ExactProbability p = exact::p_exact(row.n);
  row.p_exact = exact::to_decimal_string(p.as_rational(), kExactDigits);
  p_exact_value = p.approx;
}

void fill_quadrature(CollisionReportRow& row, const ReportConfig& config) {
  const IntegrandKind kind =
      row.n <= kExactProductLimit ? IntegrandKind::ExactProduct : IntegrandKind::GammaRatio;
  analytic::QuadratureResult result;
  try {
    result = analytic::p_quadrature_result(row.n, kind, config.quad);
  } catch (const ConvergenceError& e) {
    result = e.best();
    row.notes.push_back(std::string("quadrature: ") + e.what() + "; best estimate reported");
  }
  row.p_quadrature = result.value;
  row.quad_error_estimate = result.abs_error_estimate;

  if (row.n == kExactProductLimit) {
    try {
      const auto other = analytic::p_quadrature_result(row.n, IntegrandKind::GammaRatio,
                                                        config.quad);
      const double tol = std::max(10.0 * (result.abs_error_estimate + other.abs_error_estimate),
                                  1e-12);
      if (std::fabs(other.value - result.value) > tol) {
        row.notes.push_back("quadrature: exact-product and gamma-ratio disagree at n = " +
                            std::to_string(row.n) + " (" + format_double(result.value) +
                            " vs " + format_double(other.value) + ")");
      }
    } catch (const ConvergenceError& e) {
      row.notes.push_back(std::string("quadrature: gamma-ratio cross-check: ") + e.what());
    }
  }
}

void fill_eq2(CollisionReportRow& row, const ReportConfig& config) {
  if (row.n < 2) {
    row.notes.push_back("eq2: route needs n >= 2");
    return;
  }
  analytic::QuadratureResult result;
  try {
    result = analytic::I_n(static_cast<double>(row.n), config.quad);
  } catch (const ConvergenceError& e) {
    result = e.best();
    row.notes.push_back(std::string("eq2: ") + e.what() + "; best estimate reported");
  }
  row.p_eq2 = result.value / (2.0 * std::numbers::pi);
}

void fill_montecarlo(CollisionReportRow& row, const ReportConfig& config) {
  const mc::SamplerKind kind = config.sampler.value_or(mc::default_sampler(row.n));
  const mc::McEstimate est =
      mc::estimate_collision(row.n, config.mc_pairs, kind, config.seed, config.workers);
  row.mc_p_hat = est.p_hat;
  row.mc_std_err = est.std_err;
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Exact:
      return "exact";
    case Method::Quadrature:
      return "quadrature";
    case Method::Eq2:
      return "eq2";
    case Method::Asymptotic:
      return "asymptotic";
    case Method::MonteCarlo:
      return "montecarlo";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat f) {
  return f == OutputFormat::Csv ? "csv" : "json";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::Exact, Method::Quadrature, Method::Eq2, Method::Asymptotic,
                   Method::MonteCarlo}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text) {
  const std::string owned(trim(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (owned.empty() || used != owned.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a number: '" + owned + "'");
  }
  return v;
}

std::uint32_t parse_positive(std::string_view text) {
  const double v = parse_number(text);
  if (v < 1.0 || v > 4294967295.0 || std::floor(v) != v) {
    throw std::invalid_argument("n must be an integer in [1, 2^32): '" + std::string(text) + "'");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<std::uint32_t> parse_n_values(std::string_view spec) {
  std::vector<std::uint32_t> out;
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) {
      throw std::invalid_argument("geometric n spec must be start:stop:factor");
    }
    const std::uint32_t start = parse_positive(parts[0]);
    const std::uint32_t stop = parse_positive(parts[1]);
    const double factor = parse_number(parts[2]);
    if (!(factor > 1.0)) throw std::invalid_argument("geometric factor must be > 1");
    if (stop < start) throw std::invalid_argument("geometric stop must be >= start");
    for (double v = start; std::llround(v) <= static_cast<long long>(stop); v *= factor) {
      const auto n = static_cast<std::uint32_t>(std::llround(v));
      if (out.empty() || n > out.back()) out.push_back(n);
    }
    return out;
  }
  for (auto part : split(spec, ',')) {
    out.push_back(parse_positive(part));
  }
  return out;
}

std::set<Method> parse_methods(std::string_view list) {
  std::set<Method> out;
  for (auto part : split(list, ',')) {
    out.insert(parse_method(trim(part)));
  }
  return out;
}

void ReportConfig::validate() const {
  if (n_values.empty()) {
    throw std::invalid_argument("report: n_values must be non-empty");
  }
  if (n_values.front() == 0) {
    throw std::invalid_argument("report: n values must be >= 1");
  }
  if (std::adjacent_find(n_values.begin(), n_values.end(),
                         [](auto a, auto b) { return a >= b; }) != n_values.end()) {
    throw std::invalid_argument("report: n_values must be strictly increasing");
  }
  if (methods.empty()) {
    throw std::invalid_argument("report: at least one method is required");
  }
  if (methods.contains(Method::Asymptotic) && n_values.front() < 2) {
    throw std::invalid_argument("report: the asymptotic method needs every n >= 2");
  }
  if (methods.contains(Method::MonteCarlo) && mc_pairs == 0) {
    throw std::invalid_argument("report: mc_pairs must be >= 1");
  }
  quad.validate();
}

std::vector<CollisionReportRow> run_report(const ReportConfig& config) {
  config.validate();
  std::vector<CollisionReportRow> rows;
  rows.reserve(config.n_values.size());

  for (std::uint32_t n : config.n_values) {
    CollisionReportRow row;
    row.n = n;
    std::optional<double> p_exact_value;

    if (config.methods.contains(Method::Exact)) fill_exact(row, config, p_exact_value);
    if (config.methods.contains(Method::Quadrature)) fill_quadrature(row, config);
    if (config.methods.contains(Method::Eq2)) fill_eq2(row, config);
    if (config.methods.contains(Method::MonteCarlo)) fill_montecarlo(row, config);

    if (config.methods.contains(Method::Asymptotic)) {
      const double pa = analytic::p_asymptotic(static_cast<double>(n));
      row.p_asymptotic = pa;
      const std::optional<double> best = p_exact_value  ? p_exact_value
                                         : row.p_quadrature ? row.p_quadrature
                                         : row.p_eq2        ? row.p_eq2
                                                            : row.mc_p_hat;
      if (best) row.ratio_to_asymptotic = *best / pa;
    }

    if (p_exact_value && row.p_quadrature) {
      const double tol = std::max(10.0 * row.quad_error_estimate.value_or(0.0), 1e-12);
      if (std::fabs(*row.p_quadrature - *p_exact_value) > tol) {
        row.notes.push_back("quadrature: differs from exact by more than " + format_double(tol));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cyclecollide::report
