#pragma once

// Exact arbitrary-precision Stirling cycle numbers and the cycle-count
// collision probability of two independent uniform permutations.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclecollide::exact {

using Natural = mpz_class;
using Rational = mpq_class;

/// Row n of the unsigned Stirling numbers of the first kind.
///
/// coeffs[k - 1] holds [n k], the number of permutations of n letters with
/// exactly k cycles, for k = 1..n. Every entry is strictly positive and the
/// row sums to n!.
struct StirlingRow {
  std::uint32_t n = 0;
  std::vector<Natural> coeffs;

  /// [n k] for 1 <= k <= n.
  const Natural& operator[](std::uint32_t k) const { return coeffs.at(k - 1); }
};

/// p(n) = f(n) / (n!)^2 in lowest terms, with a double rendering.
struct ExactProbability {
  Natural numerator;
  Natural denominator;
  double approx = 0.0;

  Rational as_rational() const { return Rational(numerator, denominator); }
};

/// Law of the cycle count of a uniform permutation: probs[k - 1] = [n k] / n!.
struct CycleDistribution {
  std::uint32_t n = 0;
  std::vector<Rational> probs;
};

/// Documented practical ceiling for the exact route. Not enforced here;
/// callers (the report) use it to steer large n toward quadrature.
inline constexpr std::uint32_t kPracticalExactCeiling = 20000;

/// Builds row n by the recurrence [m k] = (m-1)[m-1 k] + [m-1 k-1], updating
/// a single buffer in place. Throws std::domain_error for n = 0.
StirlingRow stirling_row(std::uint32_t n);

/// Product x (x+1) ... (x+n-1), evaluated directly.
Rational rising_factorial_eval(std::uint32_t n, const Rational& x);

/// Sum_k [n k] x^k from a previously built row (Horner).
Rational stirling_polynomial_eval(const StirlingRow& row, const Rational& x);

/// f(n) = Sum_k [n k]^2. Squares are accumulated as the final row is read,
/// so no second row-sized buffer is allocated.
Natural f_exact(std::uint32_t n);

/// Sum of squares of an existing row.
Natural sum_of_squares(const StirlingRow& row);

ExactProbability p_exact(std::uint32_t n);

/// Builds the probability from f(n) and n, reducing f(n)/(n!)^2.
ExactProbability make_probability(const Natural& f, std::uint32_t n);

CycleDistribution cycle_distribution(std::uint32_t n);

Natural factorial(std::uint32_t n);

/// Conversion of a rational to double, truncated toward zero (within 1 ulp).
double to_double(const Rational& q);

/// Decimal rendering of a rational in [0, 1] rounded half-up to `sig_digits`
/// significant digits, e.g. 7/18 -> "0.38888888888888888889" at 20 digits.
std::string to_decimal_string(const Rational& q, int sig_digits);

}  // namespace cyclecollide::exact
