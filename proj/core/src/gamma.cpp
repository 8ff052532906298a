#include "cyclecollide/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cyclecollide::analytic {

namespace {

constexpr double kShiftTarget = 15.0;

// B_{2k} / (2k (2k - 1)), k = 1..10.
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// sum_k c_k / w^{2k-1}
Complex stirling_tail(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex acc = 0.0;
  for (auto it = kStirlingCoeffs.rbegin(); it != kStirlingCoeffs.rend(); ++it) {
    acc = acc * inv2 + *it;
  }
  return acc * inv;
}

Complex stirling_log_gamma(Complex w) {
  const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (w - 0.5) * std::log(w) - w + half_log_two_pi + stirling_tail(w);
}

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

}  // namespace

Complex log1p(Complex u) {
  const double x = u.real();
  const double y = u.imag();
  const double re = 0.5 * std::log1p(2.0 * x + (x * x + y * y));
  const double im = std::atan2(y, 1.0 + x);
  return {re, im};
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("log_gamma: non-finite argument");
  }
  if (is_pole(z)) {
    throw std::domain_error("log_gamma: pole at non-positive integer");
  }
  if (z.real() >= kShiftTarget) {
    return stirling_log_gamma(z);
  }
  const double shift = std::ceil(kShiftTarget - z.real());
  const auto steps = static_cast<std::int64_t>(shift);
  Complex log_prod = 0.0;
  for (std::int64_t k = 0; k < steps; ++k) {
    log_prod += std::log(z + static_cast<double>(k));
  }
  return stirling_log_gamma(z + shift) - log_prod;
}

Complex log_gamma_ratio(double n, Complex z) {
  if (!(n >= 1.0)) {
    throw std::domain_error("log_gamma_ratio: n must be >= 1");
  }
  if (n < 16.0 || std::abs(z) > 0.5 * n) {
    return log_gamma(n + z) - log_gamma(Complex(n + 1.0, 0.0)).real();
  }
  const Complex w1 = n + z;
  const Complex w2 = n + 1.0;
  const Complex l1 = log1p(z / n);
  const double l2 = std::log1p(1.0 / n);
  return (z - 1.0) * (std::log(n) - 1.0) + (w1 - 0.5) * l1 - (w2 - 0.5) * l2 +
         (stirling_tail(w1) - stirling_tail(w2));
}

double unit_circle_gap_sq(double theta) {
  if (theta == std::numbers::pi) {
    return 0.0;
  }
  const double c = std::cos(0.5 * theta);
  return 4.0 * c * c;
}

double recip_gamma_abs_sq(double theta) {
  if (!(theta >= 0.0 && theta <= 2.0 * std::numbers::pi)) {
    throw std::domain_error("recip_gamma_abs_sq: theta outside [0, 2 pi]");
  }
  const double gap = unit_circle_gap_sq(theta);
  if (gap == 0.0) {
    return 0.0;
  }
  const Complex z = std::polar(1.0, theta);
  return gap * std::exp(-2.0 * log_gamma(z + 2.0).real());
}

Complex weierstrass_partial(Complex z, std::uint64_t terms) {
  if (z == Complex(0.0, 0.0)) {
    throw std::domain_error("weierstrass_partial: z must be non-zero");
  }
  if (terms == 0) {
    throw std::domain_error("weierstrass_partial: terms must be >= 1");
  }
  Complex acc = 0.0;
  for (std::uint64_t r = 1; r <= terms; ++r) {
    const Complex u = z / static_cast<double>(r);
    acc += log1p(u) - u;
  }
  return z * std::exp(acc);
}

Complex weierstrass_limit(Complex z) {
  return std::exp(-AnalyticConstants::euler_gamma * z - log_gamma(z));
}

}  // namespace cyclecollide::analytic
