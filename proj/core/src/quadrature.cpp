#include "cyclecollide/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace cyclecollide::analytic {

namespace {

// Kronrod 21-point abscissae on [0, 1); odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208292251530, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

constexpr std::uint64_t kPointsPerPanel = 21;

// Round-off floor per panel, in units of epsilon * int |f| (QUADPACK uses 50).
constexpr double kRoundoffUlps = 4.0;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double roundoff;  // error floor that bisection cannot reduce
};

struct LargerError {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw std::domain_error("quadrature: integrand not finite at x = " + std::to_string(x));
  }
  return y;
}

Panel gauss_kronrod(const Integrand& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::fabs(half);

  std::array<double, 10> f1{};
  std::array<double, 10> f2{};

  const double fc = checked(f, center);
  double res_k = kWgk[10] * fc;
  double res_g = 0.0;
  double res_abs = std::fabs(res_k);

  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double lo = checked(f, center - dx);
    const double hi = checked(f, center + dx);
    f1[j] = lo;
    f2[j] = hi;
    res_k += kWgk[j] * (lo + hi);
    res_abs += kWgk[j] * (std::fabs(lo) + std::fabs(hi));
    if (j % 2 == 1) {
      res_g += kWg[j / 2] * (lo + hi);
    }
  }

  const double mean = 0.5 * res_k;
  double res_asc = kWgk[10] * std::fabs(fc - mean);
  for (std::size_t j = 0; j < 10; ++j) {
    res_asc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));
  }

  const double value = res_k * half;
  res_abs *= abs_half;
  res_asc *= abs_half;
  double err = std::fabs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  double floor = 0.0;
  if (res_abs > uflow / (kRoundoffUlps * eps)) {
    floor = kRoundoffUlps * eps * res_abs;
    err = std::max(floor, err);
  }
  return Panel{a, b, value, err, floor};
}

QuadratureResult collect(std::vector<Panel> panels, std::uint64_t evaluations) {
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  QuadratureResult out;
  for (const auto& p : panels) {
    out.value += p.value;
    out.abs_error_estimate += p.error;
  }
  out.evaluations = evaluations;
  return out;
}

double target(const QuadratureConfig& c, double value) {
  return std::max(c.abs_tol, c.rel_tol * std::fabs(value));
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("quadrature: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("quadrature: abs_tol must be >= 0");
  if (max_subdivisions < 1) {
    throw std::invalid_argument("quadrature: max_subdivisions must be >= 1");
  }
}

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& config) {
  config.validate();
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("quadrature: require finite a < b");
  }

  std::priority_queue<Panel, std::vector<Panel>, LargerError> heap;
  const Panel first = gauss_kronrod(f, a, b);
  std::uint64_t evaluations = kPointsPerPanel;
  double value = first.value;
  double error = first.error;
  double roundoff = first.roundoff;
  heap.push(first);

  auto drain = [&heap] {
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
      all.push_back(heap.top());
      heap.pop();
    }
    return all;
  };

  while (error > target(config, value)) {
    if (roundoff > target(config, value)) {
      throw ConvergenceError("quadrature: tolerance is below the round-off floor",
                             collect(drain(), evaluations));
    }
    if (heap.size() >= config.max_subdivisions) {
      throw ConvergenceError("quadrature: tolerance not met within " +
                                 std::to_string(config.max_subdivisions) + " panels",
                             collect(drain(), evaluations));
    }
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) {
      throw ConvergenceError("quadrature: panel too narrow to bisect",
                             collect(drain(), evaluations));
    }
    heap.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    evaluations += 2 * kPointsPerPanel;
    value += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    roundoff += (left.roundoff + right.roundoff) - worst.roundoff;
    heap.push(left);
    heap.push(right);
  }

  QuadratureResult out = collect(drain(), evaluations);
  return out;
}

}  // namespace cyclecollide::analytic
