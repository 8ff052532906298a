#pragma once

// Multi-method convergence table for the collision probability p(n).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cyclecollide/analytic.hpp"
#include "cyclecollide/exact.hpp"
#include "cyclecollide/montecarlo.hpp"

namespace cyclecollide::report {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Method { Exact, Quadrature, Eq2, Asymptotic, MonteCarlo };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Method m);
std::string_view to_string(OutputFormat f);
/// Throws std::invalid_argument on unknown names.
Method parse_method(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Largest n routed through the O(n) exact-product integrand; GammaRatio
/// is used above, and both are computed and compared at this n.
inline constexpr std::uint32_t kExactProductLimit = 512;

/// Significant digits of the decimal p_exact column.
inline constexpr int kExactDigits = 20;

struct ReportConfig {
  std::vector<std::uint32_t> n_values;
  std::set<Method> methods;
  analytic::QuadratureConfig quad{};
  std::uint64_t mc_pairs = 10'000;
  mc::Seed seed{};
  OutputFormat output_format = OutputFormat::Csv;
  std::optional<std::filesystem::path> output_path;
  /// Rows with n above this skip the exact route and record a note.
  std::uint32_t exact_ceiling = exact::kPracticalExactCeiling;
  /// Unset means mc::default_sampler(n).
  std::optional<mc::SamplerKind> sampler;
  /// Monte Carlo worker threads, 0 = hardware concurrency. Never affects output.
  unsigned workers = 0;

  /// Throws std::invalid_argument when n_values is empty, not strictly
  /// increasing or contains 0, methods is empty, or the asymptotic method is
  /// requested with some n < 2.
  void validate() const;
};

struct CollisionReportRow {
  std::uint32_t n = 0;
  std::optional<std::string> p_exact;
  std::optional<double> p_quadrature;
  std::optional<double> quad_error_estimate;
  std::optional<double> p_eq2;
  std::optional<double> p_asymptotic;
  std::optional<double> ratio_to_asymptotic;
  std::optional<double> mc_p_hat;
  std::optional<double> mc_std_err;
  /// Per-row method errors and cross-check failures.
  std::vector<std::string> notes;
};

/// One row per n in ascending order. Method failures are recorded in the
/// row's notes; only an invalid config throws.
std::vector<CollisionReportRow> run_report(const ReportConfig& config);

inline constexpr std::string_view kCsvHeader =
    "n,p_exact,p_quadrature,quad_error_estimate,p_eq2,p_asymptotic,"
    "ratio_to_asymptotic,mc_p_hat,mc_std_err";

/// Parses "3,10,100" or a geometric spec "start:stop:factor" (factor > 1,
/// terms rounded to integers, duplicates dropped, terms <= stop).
/// Throws std::invalid_argument on malformed input.
std::vector<std::uint32_t> parse_n_values(std::string_view spec);

/// Parses a comma-separated method list, e.g. "exact,quadrature".
std::set<Method> parse_methods(std::string_view list);

/// %.17g, the rendering used for every float column.
std::string format_double(double v);

std::string render_csv(const std::vector<CollisionReportRow>& rows);
std::string render_json(const std::vector<CollisionReportRow>& rows, const ReportConfig& config);
std::string render(const std::vector<CollisionReportRow>& rows, const ReportConfig& config);

}  // namespace cyclecollide::report
