#include "cyclecollide/analytic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cyclecollide/exact.hpp"

namespace {

namespace an = cyclecollide::analytic;
namespace ex = cyclecollide::exact;
using an::IntegrandKind;

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

TEST(Harmonic, Examples) {
  EXPECT_EQ(an::harmonic(0), 0.0);
  EXPECT_EQ(an::harmonic(1), 1.0);
  EXPECT_NEAR(an::harmonic(3), 11.0 / 6.0, 1e-16);
}

TEST(Harmonic, MatchesExactRational) {
  ex::Rational h = 0;
  for (unsigned r = 1; r <= 2000; ++r) {
    h += ex::Rational(1, r);
    if (r % 250 == 0) {
      EXPECT_LE(rel(an::harmonic(r), h.get_d()), 4.5e-16) << "m=" << r;
    }
  }
}

TEST(Harmonic, AsymptoticBranchIsContinuous) {
  const double below = an::harmonic(1'000'000);
  const double above = an::harmonic(1'000'001);
  EXPECT_NEAR(above - below, 1.0 / 1'000'001.0, 1e-14);
  EXPECT_NEAR(an::harmonic(10'000'000) - std::log(1e7), std::numbers::egamma + 0.5e-7, 1e-14);
}

TEST(Integrand, Examples) {
  EXPECT_NEAR(an::integrand(IntegrandKind::ExactProduct, 2, 0.0), 1.0, 1e-15);
  EXPECT_EQ(an::integrand(IntegrandKind::ExactProduct, 2, kPi), 0.0);
  EXPECT_NEAR(an::integrand(IntegrandKind::Eq2Kernel, kE, 0.0), 1.0, 1e-14);
  const double exact = an::integrand(IntegrandKind::ExactProduct, 50, 1.0);
  const double gamma = an::integrand(IntegrandKind::GammaRatio, 50, 1.0);
  EXPECT_LE(rel(gamma, exact), 1e-10);
}

TEST(Integrand, OneLetterIsConstant) {
  for (double t = 0.0; t <= 2.0 * kPi; t += 0.3) {
    EXPECT_NEAR(an::integrand(IntegrandKind::ExactProduct, 1, t), 1.0, 1e-15);
    EXPECT_NEAR(an::integrand(IntegrandKind::GammaRatio, 1, t), 1.0, 1e-13);
  }
}

TEST(Integrand, DualRoutesAgree) {
  for (double n : {10.0, 50.0, 200.0, 1e4}) {
    for (int i = 0; i < 32; ++i) {
      const double t = 2.0 * kPi * (i + 0.5) / 32.0;
      const double a = an::integrand(IntegrandKind::ExactProduct, n, t);
      const double b = an::integrand(IntegrandKind::GammaRatio, n, t);
      EXPECT_LE(rel(b, a), 1e-9) << "n=" << n << " theta=" << t;
    }
  }
}

TEST(Integrand, GammaRatioTendsToZeroAtPi) {
  EXPECT_EQ(an::integrand(IntegrandKind::GammaRatio, 100, kPi), 0.0);
  const double near = an::integrand(IntegrandKind::GammaRatio, 100, kPi - 1e-6);
  EXPECT_GT(near, 0.0);
  EXPECT_LT(near, 1e-12);
}

// |prod_{j=1}^{n-1}(z + j)|^2 = (n-1)!^2 e^{2 H_{n-1} cos theta} |prod (1 + z/j) e^{-z/j}|^2
TEST(Integrand, HarmonicWeierstrassFactorisation) {
  const unsigned n = 30;
  const double log_fact = std::lgamma(static_cast<double>(n));  // log (n-1)!
  for (double t : {0.3, 1.1, 2.0, 2.9}) {
    const auto z = std::polar(1.0, t);
    const double w = std::abs(an::weierstrass_partial(z, n - 1));
    const double rhs_log = 2.0 * log_fact + 2.0 * an::harmonic(n - 1) * std::cos(t) +
                           2.0 * std::log(w);
    // ExactProduct carries the 1/(n!)^2 normalisation.
    const double lhs_log = std::log(an::integrand(IntegrandKind::ExactProduct, n, t)) +
                           2.0 * std::lgamma(n + 1.0);
    EXPECT_NEAR(lhs_log, rhs_log, 1e-11) << "theta=" << t;
  }
}

TEST(Integrand, DomainErrors) {
  EXPECT_THROW(an::integrand(IntegrandKind::ExactProduct, 3, -0.1), std::domain_error);
  EXPECT_THROW(an::integrand(IntegrandKind::GammaRatio, 3, 6.3), std::domain_error);
  EXPECT_THROW(an::integrand(IntegrandKind::ExactProduct, 2.5, 1.0), std::domain_error);
  EXPECT_THROW(an::integrand(IntegrandKind::GammaRatio, 0, 1.0), std::domain_error);
  EXPECT_THROW(an::integrand(IntegrandKind::Eq2Kernel, 1.0, 1.0), std::domain_error);
}

TEST(PQuadrature, SmallExamples) {
  for (auto kind : {IntegrandKind::ExactProduct, IntegrandKind::GammaRatio}) {
    EXPECT_NEAR(an::p_quadrature(1, kind), 1.0, 1e-12);
    EXPECT_NEAR(an::p_quadrature(2, kind), 0.5, 1e-12);
    EXPECT_NEAR(an::p_quadrature(3, kind), 7.0 / 18.0, 1e-12);
  }
  EXPECT_THROW(an::p_quadrature(0, IntegrandKind::ExactProduct), std::domain_error);
  EXPECT_THROW(an::p_quadrature(5, IntegrandKind::Eq2Kernel), std::invalid_argument);
}

TEST(PQuadrature, ParsevalReproducesExactValues) {
  const an::QuadratureConfig tight{1e-12, 0.0, 1'000'000};
  for (unsigned n = 1; n <= 100; ++n) {
    const double exact = ex::p_exact(n).approx;
    const double quad = an::p_quadrature(n, IntegrandKind::ExactProduct, tight);
    EXPECT_LE(rel(quad, exact), 1e-9) << "n=" << n;
  }
}

TEST(PQuadrature, LargeNAgainstHighPrecisionReference) {
  // mpmath quadrature of |Gamma(n + z) / (Gamma(z) n!)|^2 at 25 digits.
  const std::pair<unsigned, double> refs[] = {
      {100u, 0.1509759758365813984},
      {10'000u, 0.099452000961491317231},
      {1'000'000u, 0.079344061216230311792},
      {100'000'000u, 0.067938515183190088101},
  };
  for (const auto& [n, p] : refs) {
    EXPECT_LE(rel(an::p_quadrature(n, IntegrandKind::GammaRatio, {1e-12, 0.0, 100000}), p), 1e-9)
        << "n=" << n;
  }
}

TEST(IN, AgainstHighPrecisionReference) {
  const std::pair<double, double> refs[] = {
      {10.0, 1.5622743086455554309},  {100.0, 0.95033558862562703669},
      {1e3, 0.73888121490329265552},  {1e4, 0.62488079773877048574},
      {1e6, 0.49853346801916436681},  {1e8, 0.42687028057079991857},
  };
  for (const auto& [n, v] : refs) {
    const auto r = an::I_n(n, {1e-12, 0.0, 100000});
    EXPECT_LE(rel(r.value, v), 1e-12) << "n=" << n;
    EXPECT_LE(r.abs_error_estimate, 1e-12 * r.value);
  }
}

TEST(IN, FullRangeEqualsDoubledHalfRange) {
  const double n = 100.0;
  const auto full = an::integrate(
      [n](double t) { return an::integrand(IntegrandKind::Eq2Kernel, n, t); }, 0.0, 2.0 * kPi,
      {1e-12, 0.0, 100000});
  EXPECT_LE(rel(full.value, an::I_n(n).value), 1e-10);
}

TEST(IN, ApproachesLaplaceEstimate) {
  double previous = INFINITY;
  for (double n : {1e2, 1e3, 1e4, 1e6, 1e8}) {
    const double dev = std::fabs(an::I_n(n).value / an::laplace_I(n) - 1.0);
    EXPECT_LE(dev, 1.5 / std::log(n));
    EXPECT_LT(dev, previous);
    previous = dev;
  }
  EXPECT_THROW(an::I_n(1.5), std::domain_error);
}

TEST(Asymptotics, Examples) {
  EXPECT_NEAR(an::laplace_I(kE), std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(an::laplace_I(std::exp(4.0)), 0.8862269254527580, 1e-15);
  EXPECT_NEAR(an::laplace_I(100.0), 0.82594683661899249007, 1e-15);
  EXPECT_NEAR(an::p_asymptotic(kE), 0.28209479177387814, 1e-15);
  EXPECT_NEAR(an::p_asymptotic(10.0), 0.18590335332160661886, 1e-15);
}

TEST(Asymptotics, LaplaceIdentity) {
  for (double n = 1.01; n < 1e12; n *= 1.9) {
    EXPECT_LE(rel(an::p_asymptotic(n) * 2.0 * kPi, an::laplace_I(n)), 1e-15) << "n=" << n;
  }
}

TEST(Asymptotics, DomainErrors) {
  EXPECT_THROW(an::laplace_I(1.0), std::domain_error);
  EXPECT_THROW(an::laplace_I(0.5), std::domain_error);
  EXPECT_THROW(an::p_asymptotic(1.0), std::domain_error);
}

}  // namespace
