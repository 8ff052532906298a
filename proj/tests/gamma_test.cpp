#include "cyclecollide/gamma.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace {

namespace an = cyclecollide::analytic;
using an::Complex;

constexpr double kPi = std::numbers::pi;

void expect_close(double actual, double expected, double tol, const std::string& what = "") {
  const double scale = std::max(1.0, std::fabs(expected));
  EXPECT_LE(std::fabs(actual - expected), tol * scale)
      << what << " actual=" << actual << " expected=" << expected;
}

TEST(Constants, EulerGammaText) {
  const auto text = an::AnalyticConstants::euler_gamma_text;
  EXPECT_TRUE(text.starts_with("0.57721566490153286060651209008240"));
  EXPECT_GE(text.size(), 32u);
  EXPECT_EQ(std::stod(std::string(text)), an::AnalyticConstants::euler_gamma);
  EXPECT_EQ(an::AnalyticConstants::euler_gamma, std::numbers::egamma);
}

TEST(LogGamma, Examples) {
  expect_close(an::log_gamma(1.0).real(), 0.0, 1e-14);
  expect_close(an::log_gamma(0.5).real(), 0.5 * std::log(kPi), 1e-14);
  expect_close(an::log_gamma(Complex(3.0, 0.0)).real(), std::log(2.0), 1e-14);
  EXPECT_EQ(an::log_gamma(Complex(3.0, 0.0)).imag(), 0.0);
}

TEST(LogGamma, RealAxisAgainstLibm) {
  for (double x = 0.05; x < 2e6; x *= 1.37) {
    expect_close(an::log_gamma(x).real(), std::lgamma(x), 1e-13, "x=" + std::to_string(x));
  }
  for (double x : {-0.5, -0.25, -0.1, 0.3, 1.5, 2.5}) {
    expect_close(an::log_gamma(x).real(), std::lgamma(x), 1e-13, "x=" + std::to_string(x));
  }
}

TEST(LogGamma, ModulusIdentitiesOnVerticalLines) {
  for (double y = 0.1; y <= 2.0; y += 0.1) {
    // |Gamma(iy)|^2 = pi / (y sinh(pi y))
    expect_close(an::log_gamma(Complex(0.0, y)).real(),
                 0.5 * std::log(kPi / (y * std::sinh(kPi * y))), 1e-13);
    // |Gamma(1/2 + iy)|^2 = pi / cosh(pi y)
    expect_close(an::log_gamma(Complex(0.5, y)).real(), 0.5 * std::log(kPi / std::cosh(kPi * y)),
                 1e-13);
    // |Gamma(1 + iy)|^2 = pi y / sinh(pi y)
    expect_close(an::log_gamma(Complex(1.0, -y)).real(),
                 0.5 * std::log(kPi * y / std::sinh(kPi * y)), 1e-13);
  }
}

TEST(LogGamma, RecurrenceHolds) {
  for (double re = 0.05; re < 40.0; re += 1.7) {
    for (double im = -2.0; im <= 2.0; im += 0.45) {
      const Complex z(re, im);
      const Complex lhs = an::log_gamma(z + 1.0) - an::log_gamma(z);
      const Complex rhs = std::log(z);
      expect_close(lhs.real(), rhs.real(), 1e-13);
      expect_close(lhs.imag(), rhs.imag(), 1e-13);
    }
  }
}

// Reference values from mpmath.loggamma at 40 digits.
TEST(LogGamma, FrozenHighPrecisionValues) {
  struct Case {
    Complex z;
    double re;
    double im;
  };
  const Case cases[] = {
      {std::polar(1.0, 1.0), -0.41526262989531400821, -0.87021911660169634722},
      {Complex(-0.4, 1.5), -1.8385194846233827029, -2.540976665093998652},
      {Complex(1e8, 0.5), 1742068066.103834708, 9.210340369476182734},
      {Complex(-0.5, 0.0), 1.2655121234846453965, -3.1415926535897932385},
      {Complex(0.25, -2.0), -2.3938973305351360403, 1.0011752595176815177},
      {Complex(7.5, 0.3), 7.5279484681959931605, 0.58411856918890904112},
  };
  for (const auto& c : cases) {
    const Complex v = an::log_gamma(c.z);
    expect_close(v.real(), c.re, 1e-13);
    expect_close(v.imag(), c.im, 1e-13);
  }
}

TEST(LogGamma, PolesThrow) {
  EXPECT_THROW(an::log_gamma(0.0), std::domain_error);
  EXPECT_THROW(an::log_gamma(-1.0), std::domain_error);
  EXPECT_THROW(an::log_gamma(-2.0), std::domain_error);
  EXPECT_NO_THROW(an::log_gamma(Complex(-1.0, 1e-3)));
}

TEST(LogGammaRatio, FrozenValues) {
  // mpmath: loggamma(n + z) - loggamma(n + 1)
  const Complex big = an::log_gamma_ratio(1e8, std::polar(1.0, 1.0));
  expect_close(big.real(), -8.4679444671163087324, 1e-14);
  expect_close(big.imag(), 15.50046836678458487, 1e-14);
  const Complex mid = an::log_gamma_ratio(20.0, std::polar(1.0, 2.5));
  expect_close(mid.real(), -5.3684384122722767074, 1e-14);
  expect_close(mid.imag(), 1.752776506207276286, 1e-14);
}

TEST(LogGammaRatio, BothBranchesAgreeNearSwitch) {
  for (double n : {16.0, 17.0, 30.0, 100.0}) {
    for (double theta = 0.1; theta < 6.2; theta += 0.7) {
      const Complex z = std::polar(1.0, theta);
      const Complex fast = an::log_gamma_ratio(n, z);
      const Complex direct = an::log_gamma(n + z) - an::log_gamma(n + 1.0);
      expect_close(fast.real(), direct.real(), 1e-13);
      expect_close(fast.imag(), direct.imag(), 1e-13);
    }
  }
}

TEST(RecipGammaAbsSq, Examples) {
  expect_close(an::recip_gamma_abs_sq(0.0), 1.0, 1e-14);
  EXPECT_EQ(an::recip_gamma_abs_sq(kPi), 0.0);
  expect_close(an::recip_gamma_abs_sq(2.0 * kPi), 1.0, 1e-14);
}

TEST(RecipGammaAbsSq, FrozenValuesAndSign) {
  // mpmath |rgamma(e^{i theta})|^2
  expect_close(an::recip_gamma_abs_sq(1.0), 2.2945236448017873859, 1e-13);
  EXPECT_NEAR(an::recip_gamma_abs_sq(3.0) / 0.020904263771864908128, 1.0, 1e-12);
  EXPECT_NEAR(an::recip_gamma_abs_sq(3.1) / 0.001736347305231562807, 1.0, 1e-12);
  for (int i = 0; i <= 1000; ++i) {
    EXPECT_GE(an::recip_gamma_abs_sq(2.0 * kPi * i / 1000.0), 0.0);
  }
  EXPECT_THROW(an::recip_gamma_abs_sq(-1e-9), std::domain_error);
  EXPECT_THROW(an::recip_gamma_abs_sq(7.0), std::domain_error);
}

TEST(RecipGammaAbsSq, SymmetricAboutPi) {
  for (double t = 0.05; t < kPi; t += 0.11) {
    EXPECT_NEAR(an::recip_gamma_abs_sq(t) / an::recip_gamma_abs_sq(2.0 * kPi - t), 1.0, 1e-12);
  }
}

TEST(Weierstrass, OneTermProduct) {
  const Complex v = an::weierstrass_partial(1.0, 1);
  expect_close(v.real(), 2.0 / std::exp(1.0), 1e-15);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(Weierstrass, Limits) {
  // mpmath: e^{-gamma}, e^{-2 gamma}
  expect_close(an::weierstrass_limit(1.0).real(), 0.56145948356688516982, 1e-14);
  expect_close(an::weierstrass_limit(2.0).real(), 0.31523675168719339806, 1e-14);
}

TEST(Weierstrass, PartialProductsConverge) {
  for (double theta : {0.5, 1.0, 2.0}) {
    const Complex z = std::polar(1.0, theta);
    const Complex limit = an::weierstrass_limit(z);
    double previous = INFINITY;
    for (std::uint64_t r = 1000; r <= 128000; r *= 2) {
      const double err = std::abs(an::weierstrass_partial(z, r) - limit) / std::abs(limit);
      EXPECT_LT(err, previous) << "theta=" << theta << " R=" << r;
      previous = err;
    }
    EXPECT_LT(std::abs(an::weierstrass_partial(z, 100000) - limit) / std::abs(limit), 1e-4);
  }
}

TEST(Weierstrass, DomainErrors) {
  EXPECT_THROW(an::weierstrass_partial(0.0, 10), std::domain_error);
  EXPECT_THROW(an::weierstrass_partial(1.0, 0), std::domain_error);
}

TEST(Log1p, SmallArguments) {
  const Complex u(1e-12, -3e-12);
  const Complex v = an::log1p(u);
  EXPECT_NEAR(v.real() / (u.real() - 0.5 * (u * u).real()), 1.0, 1e-12);
  EXPECT_NEAR(v.imag() / (u.imag() - 0.5 * (u * u).imag()), 1.0, 1e-12);
}

}  // namespace
