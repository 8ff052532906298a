#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace cyclecollide::analytic {

using Complex = std::complex<double>;

/// Fixed mathematical constants used by the analytic routes.
struct AnalyticConstants {
  /// Euler-Mascheroni constant, 100 significant digits.
  static constexpr std::string_view euler_gamma_text =
      "0.5772156649015328606065120900824024310421593359399235988057672348848677267776646709369470632917467495";
  static constexpr double euler_gamma = 0.57721566490153286060651209008240243104215933593992;
};

/// Principal branch of log Gamma(z), branch cut along the negative real axis.
///
/// For Re w >= 15 the Stirling series is summed with Bernoulli terms through
/// B_20; smaller arguments are first shifted upward,
///   log Gamma(z) = log Gamma(z + m) - sum_{k<m} log(z + k),
/// using principal logarithms, which fixes the branch without a reflection
/// formula. Relative accuracy is about 1e-15 on Re z in [-0.5, 1e9],
/// |Im z| <= 2 (absolute near the zeros at z = 1, 2).
///
/// Throws std::domain_error at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// log Gamma(n + z) - log Gamma(n + 1) for real n >= 1.
///
/// For n >= 16 this is evaluated as a difference of Stirling series written
/// in log1p form, so it stays accurate at n ~ 1e8 where each log Gamma is of
/// order 1e9.
Complex log_gamma_ratio(double n, Complex z);

/// 1 / |Gamma(e^{i theta})|^2 for theta in [0, 2 pi].
///
/// Evaluated as |z (z + 1)|^2 / |Gamma(z + 2)|^2, which is entire in z, so
/// the value tends smoothly to 0 at theta = pi (z = -1). The double nearest
/// pi is treated as the pole and returns exactly 0.
double recip_gamma_abs_sq(double theta);

/// |1 + e^{i theta}|^2 = 4 cos^2(theta / 2); exactly 0 at theta == pi.
double unit_circle_gap_sq(double theta);

/// z * prod_{r=1}^{terms} (1 + z/r) e^{-z/r}, accumulated in log space.
/// Throws std::domain_error for z == 0 or terms == 0.
Complex weierstrass_partial(Complex z, std::uint64_t terms);

/// Limit of weierstrass_partial as terms -> infinity: e^{-gamma z} / Gamma(z),
/// computed from log_gamma.
Complex weierstrass_limit(Complex z);

/// log(1 + u) with full relative accuracy for small |u|.
Complex log1p(Complex u);

}  // namespace cyclecollide::analytic
