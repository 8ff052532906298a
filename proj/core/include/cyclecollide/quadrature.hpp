#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

namespace cyclecollide::analytic {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::uint64_t max_subdivisions = 1'000'000;

  /// Throws std::invalid_argument unless rel_tol > 0, abs_tol >= 0 and
  /// max_subdivisions >= 1.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

/// Thrown when the panel budget runs out before the tolerance is met.
/// best() is the estimate at the point of failure.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}

  const QuadratureResult& best() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (10/21-point) quadrature of f over [a, b].
///
/// The panel with the largest error estimate is bisected until the summed
/// estimate is <= max(abs_tol, rel_tol * |value|). Per-panel errors use the
/// QUADPACK heuristic plus a round-off floor of a few epsilon times
/// int |f|, so that the returned estimate bounds the true error on smooth
/// integrands. A tolerance below that floor fails fast. Evaluation
/// order and the final reduction (panels summed left to right) are fixed, so
/// results are bit-stable for a given config.
///
/// Throws std::invalid_argument if a >= b or the config is invalid,
/// std::domain_error if f returns a non-finite value, and ConvergenceError if
/// the tolerance is not met within max_subdivisions panels or lies below the
/// round-off floor.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& config = {});

}  // namespace cyclecollide::analytic
