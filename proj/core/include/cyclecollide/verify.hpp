#pragma once

// Acceptance suite: runs every criterion, reports measured values, never throws.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclecollide/exact.hpp"
#include "cyclecollide/quadrature.hpp"

namespace cyclecollide::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string measured;
  double seconds = 0.0;
  double time_limit = 0.0;
};

struct VerifyOptions {
  /// Row source checked by the brute-force and row-sum criteria.
  std::function<exact::StirlingRow(std::uint32_t)> row_builder = exact::stirling_row;
  /// Replaces every criterion's quadrature config when set.
  std::optional<analytic::QuadratureConfig> quad_override;
  /// Monte Carlo worker threads, 0 = hardware concurrency.
  unsigned workers = 0;
  /// Restrict to these criterion ids; empty runs all.
  std::vector<int> only;
};

struct VerifySummary {
  std::vector<CriterionResult> results;

  bool all_passed() const;
  const CriterionResult* find(int id) const;
};

/// Runs the criteria in order, printing one PASS/FAIL line per criterion to
/// `log` when it is non-null.
VerifySummary run_verify(const VerifyOptions& options = {}, std::ostream* log = nullptr);

/// Cycle-count histogram of all n! permutations by exhaustive enumeration.
std::vector<std::uint64_t> brute_force_cycle_histogram(std::uint32_t n);

}  // namespace cyclecollide::verify
