#pragma once

// Integral and asymptotic routes to the cycle-count collision probability.

#include <cstdint>
#include <string_view>

#include "cyclecollide/gamma.hpp"
#include "cyclecollide/quadrature.hpp"

namespace cyclecollide::analytic {

enum class IntegrandKind {
  /// |prod_{j<n} (e^{i theta} + j)|^2 / (n!)^2, O(n) per call.
  ExactProduct,
  /// Same quantity via Gamma(z + n) / Gamma(z), O(1) per call.
  GammaRatio,
  /// e^{2 (cos theta - 1) log n} / |Gamma(e^{i theta})|^2, real n > 1.
  Eq2Kernel,
};

std::string_view to_string(IntegrandKind kind);

/// H_m = sum_{r=1}^m 1/r. Compensated summation up to 1e6 terms, the
/// asymptotic expansion beyond.
double harmonic(std::uint64_t m);

/// Evaluates the chosen integrand at theta in [0, 2 pi].
///
/// ExactProduct and GammaRatio need integral n >= 1; Eq2Kernel accepts any
/// real n > 1. Throws std::domain_error otherwise or for theta out of range.
double integrand(IntegrandKind kind, double n, double theta);

/// I(n) = int_0^{2 pi} e^{2 (cos theta - 1) log n} / |Gamma(e^{i theta})|^2,
/// integrated over [0, pi] and doubled. Requires n >= 2.
QuadratureResult I_n(double n, const QuadratureConfig& config = {});

/// (1 / 2 pi) int_0^{2 pi} integrand(kind, n, .) over the circle; by the
/// Parseval identity this equals p(n) exactly. Value and error estimate are
/// both on the probability scale. kind must not be Eq2Kernel.
QuadratureResult p_quadrature_result(std::uint32_t n, IntegrandKind kind,
                                     const QuadratureConfig& config = {});

double p_quadrature(std::uint32_t n, IntegrandKind kind,
                    const QuadratureConfig& config = {});

/// sqrt(pi / log n); the Laplace-method estimate of I(n). Requires n > 1.
double laplace_I(double n);

/// 1 / (2 sqrt(pi log n)). Requires n > 1.
double p_asymptotic(double n);

}  // namespace cyclecollide::analytic
