#include "cyclecollide/exact.hpp"

#include <stdexcept>
#include <string>

namespace cyclecollide::exact {

namespace {

void require_positive(std::uint32_t n, const char* what) {
  if (n == 0) {
    throw std::domain_error(std::string(what) + ": n must be >= 1");
  }
}

// Advances `row` (holding row m-1 in its first m-1 slots) to row m.
void advance_row(std::vector<Natural>& row, std::uint32_t m) {
  row.emplace_back(1);
  const unsigned long factor = m - 1;
  // k runs downward so row[k-1] still holds the previous row's value.
  for (std::uint32_t k = m - 1; k >= 2; --k) {
    row[k - 1] *= factor;
    row[k - 1] += row[k - 2];
  }
  if (m >= 2) {
    row[0] *= factor;
  }
}

}  // namespace

StirlingRow stirling_row(std::uint32_t n) {
  require_positive(n, "stirling_row");
  StirlingRow out;
  out.n = n;
  out.coeffs.reserve(n);
  out.coeffs.emplace_back(1);
  for (std::uint32_t m = 2; m <= n; ++m) {
    advance_row(out.coeffs, m);
  }
  return out;
}

Rational rising_factorial_eval(std::uint32_t n, const Rational& x) {
  require_positive(n, "rising_factorial_eval");
  Rational acc = x;
  for (std::uint32_t j = 1; j < n; ++j) {
    acc *= Rational(x + j);
  }
  acc.canonicalize();
  return acc;
}

Rational stirling_polynomial_eval(const StirlingRow& row, const Rational& x) {
  // No constant term: Sum_{k>=1} c_k x^k = x * (c_1 + x (c_2 + ...)).
  Rational acc = 0;
  for (auto it = row.coeffs.rbegin(); it != row.coeffs.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  acc *= x;
  acc.canonicalize();
  return acc;
}

Natural sum_of_squares(const StirlingRow& row) {
  Natural acc = 0;
  Natural sq;
  for (const auto& c : row.coeffs) {
    sq = c * c;
    acc += sq;
  }
  return acc;
}

Natural f_exact(std::uint32_t n) {
  require_positive(n, "f_exact");
  std::vector<Natural> row;
  row.reserve(n);
  row.emplace_back(1);
  for (std::uint32_t m = 2; m <= n; ++m) {
    advance_row(row, m);
  }
  Natural acc = 0;
  Natural sq;
  for (auto& c : row) {
    sq = c * c;
    acc += sq;
    c = 0;  // release limbs as we go
  }
  return acc;
}

Natural factorial(std::uint32_t n) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

double to_double(const Rational& q) { return q.get_d(); }

ExactProbability make_probability(const Natural& f, std::uint32_t n) {
  const Natural nf = factorial(n);
  Rational q(f, nf * nf);
  q.canonicalize();
  ExactProbability out;
  out.numerator = q.get_num();
  out.denominator = q.get_den();
  out.approx = to_double(q);
  return out;
}

ExactProbability p_exact(std::uint32_t n) {
  require_positive(n, "p_exact");
  return make_probability(f_exact(n), n);
}

CycleDistribution cycle_distribution(std::uint32_t n) {
  require_positive(n, "cycle_distribution");
  const StirlingRow row = stirling_row(n);
  const Natural nf = factorial(n);
  CycleDistribution out;
  out.n = n;
  out.probs.reserve(n);
  for (const auto& c : row.coeffs) {
    Rational q(c, nf);
    q.canonicalize();
    out.probs.push_back(std::move(q));
  }
  return out;
}

std::string to_decimal_string(const Rational& q, int sig_digits) {
  if (sig_digits < 1) {
    throw std::invalid_argument("to_decimal_string: sig_digits must be >= 1");
  }
  if (sgn(q) <= 0 || q > 1) {
    throw std::domain_error("to_decimal_string: value must lie in (0, 1]");
  }
  const Natural& num = q.get_num();
  const Natural& den = q.get_den();

  Natural lo;  // 10^(sig-1)
  Natural hi;  // 10^sig
  mpz_ui_pow_ui(lo.get_mpz_t(), 10, static_cast<unsigned long>(sig_digits - 1));
  hi = lo * 10;

  // Find t with 10^(sig-1) <= floor(q * 10^t) < 10^sig.
  long t = sig_digits - 1;
  {
    const long gap = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) -
                     static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10));
    if (gap > 1) t += gap - 1;
  }
  Natural scale;
  Natural scaled;
  auto floor_at = [&](long e) {
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(e));
    scaled = num * scale;
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  };
  floor_at(t);
  while (scaled < lo) {
    ++t;
    floor_at(t);
  }
  while (scaled >= hi) {
    --t;
    floor_at(t);
  }

  // Round half up: floor((2 num 10^t + den) / (2 den)).
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(t));
  Natural rounded = 2 * num * scale + den;
  Natural twice_den = 2 * den;
  mpz_fdiv_q(rounded.get_mpz_t(), rounded.get_mpz_t(), twice_den.get_mpz_t());
  if (rounded >= hi) {
    rounded = lo;
    --t;
  }

  const std::string digits = rounded.get_str();
  const long width = sig_digits;
  if (t >= width) {
    return "0." + std::string(static_cast<std::size_t>(t - width), '0') + digits;
  }
  // t == sig-1: a single digit before the point (only q == 1 reaches here).
  return digits.substr(0, 1) + "." + digits.substr(1);
}

}  // namespace cyclecollide::exact
