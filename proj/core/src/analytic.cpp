#include "cyclecollide/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cyclecollide::analytic {

namespace {

constexpr std::uint64_t kHarmonicDirectLimit = 1'000'000;

void require_theta(double theta) {
  if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi)) {
    throw std::domain_error("integrand: theta outside [0, 2 pi]");
  }
}

void require_integral_n(double n, const char* what) {
  if (!(n >= 1.0) || std::floor(n) != n) {
    throw std::domain_error(std::string(what) + ": n must be an integer >= 1");
  }
}

// sum_{j<n} log(|e^{i theta} + j|^2 / (j + 1)^2), with
// |e^{i theta} + j|^2 = (j - 1)^2 + j |1 + e^{i theta}|^2.
double exact_product(double n, double theta) {
  const double gap = unit_circle_gap_sq(theta);
  const auto terms = static_cast<std::uint64_t>(n);
  double acc = 0.0;
  for (std::uint64_t j = 0; j < terms; ++j) {
    const double jd = static_cast<double>(j);
    const double mod_sq = (jd - 1.0) * (jd - 1.0) + jd * gap;
    if (mod_sq == 0.0) {
      return 0.0;
    }
    const double denom = jd + 1.0;
    acc += std::log(mod_sq / (denom * denom));
  }
  return std::exp(acc);
}

double gamma_ratio(double n, double theta) {
  const double recip = recip_gamma_abs_sq(theta);
  if (recip == 0.0) {
    return 0.0;
  }
  const Complex z = std::polar(1.0, theta);
  return std::exp(2.0 * log_gamma_ratio(n, z).real()) * recip;
}

double eq2_kernel(double n, double theta) {
  const double s = std::sin(0.5 * theta);
  // cos theta - 1 = -2 sin^2(theta / 2)
  return std::exp(-4.0 * s * s * std::log(n)) * recip_gamma_abs_sq(theta);
}

}  // namespace

std::string_view to_string(IntegrandKind kind) {
  switch (kind) {
    case IntegrandKind::ExactProduct:
      return "exact-product";
    case IntegrandKind::GammaRatio:
      return "gamma-ratio";
    case IntegrandKind::Eq2Kernel:
      return "eq2-kernel";
  }
  return "unknown";
}

double harmonic(std::uint64_t m) {
  if (m == 0) {
    return 0.0;
  }
  if (m <= kHarmonicDirectLimit) {
    // Neumaier summation, smallest terms first.
    double sum = 0.0;
    double comp = 0.0;
    for (std::uint64_t r = m; r >= 1; --r) {
      const double term = 1.0 / static_cast<double>(r);
      const double t = sum + term;
      if (std::fabs(sum) >= std::fabs(term)) {
        comp += (sum - t) + term;
      } else {
        comp += (term - t) + sum;
      }
      sum = t;
    }
    return sum + comp;
  }
  const double md = static_cast<double>(m);
  const double inv = 1.0 / md;
  const double inv2 = inv * inv;
  return std::log(md) + AnalyticConstants::euler_gamma + 0.5 * inv -
         inv2 / 12.0 + inv2 * inv2 / 120.0;
}

double integrand(IntegrandKind kind, double n, double theta) {
  require_theta(theta);
  switch (kind) {
    case IntegrandKind::ExactProduct:
      require_integral_n(n, "integrand(ExactProduct)");
      return exact_product(n, theta);
    case IntegrandKind::GammaRatio:
      require_integral_n(n, "integrand(GammaRatio)");
      return gamma_ratio(n, theta);
    case IntegrandKind::Eq2Kernel:
      if (!(n > 1.0) || !std::isfinite(n)) {
        throw std::domain_error("integrand(Eq2Kernel): n must be > 1");
      }
      return eq2_kernel(n, theta);
  }
  throw std::invalid_argument("integrand: unknown kind");
}

QuadratureResult I_n(double n, const QuadratureConfig& config) {
  if (!(n >= 2.0) || !std::isfinite(n)) {
    throw std::domain_error("I_n: n must be >= 2");
  }
  auto twice = [](QuadratureResult r) {
    r.value *= 2.0;
    r.abs_error_estimate *= 2.0;
    return r;
  };
  try {
    return twice(integrate([n](double theta) { return eq2_kernel(n, theta); }, 0.0,
                           std::numbers::pi, config));
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what(), twice(e.best()));
  }
}

QuadratureResult p_quadrature_result(std::uint32_t n, IntegrandKind kind,
                                     const QuadratureConfig& config) {
  if (n == 0) {
    throw std::domain_error("p_quadrature: n must be >= 1");
  }
  if (kind == IntegrandKind::Eq2Kernel) {
    throw std::invalid_argument("p_quadrature: Eq2Kernel is not an identity route");
  }
  const double nd = static_cast<double>(n);
  // (1 / 2 pi) * 2 * int_0^pi = (1 / pi) * int_0^pi
  auto scale = [](QuadratureResult r) {
    r.value /= std::numbers::pi;
    r.abs_error_estimate /= std::numbers::pi;
    return r;
  };
  try {
    if (kind == IntegrandKind::ExactProduct) {
      return scale(integrate([nd](double t) { return exact_product(nd, t); }, 0.0,
                             std::numbers::pi, config));
    }
    return scale(integrate([nd](double t) { return gamma_ratio(nd, t); }, 0.0,
                           std::numbers::pi, config));
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(e.what(), scale(e.best()));
  }
}

double p_quadrature(std::uint32_t n, IntegrandKind kind, const QuadratureConfig& config) {
  return p_quadrature_result(n, kind, config).value;
}

double laplace_I(double n) {
  if (!(n > 1.0)) {
    throw std::domain_error("laplace_I: n must be > 1");
  }
  return std::sqrt(std::numbers::pi / std::log(n));
}

double p_asymptotic(double n) {
  if (!(n > 1.0)) {
    throw std::domain_error("p_asymptotic: n must be > 1");
  }
  return 1.0 / (2.0 * std::sqrt(std::numbers::pi * std::log(n)));
}

}  // namespace cyclecollide::analytic
