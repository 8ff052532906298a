// cyclecollide: probability that two random permutations have the same
// number of cycles, by exact, integral, asymptotic and Monte Carlo routes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecollide/analytic.hpp"
#include "cyclecollide/exact.hpp"
#include "cyclecollide/montecarlo.hpp"
#include "cyclecollide/report.hpp"
#include "cyclecollide/verify.hpp"

namespace {

namespace cc = cyclecollide;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct ExactArgs {
  std::uint32_t n = 0;
  bool row = false;
  bool json = false;
};

struct CollideArgs {
  std::uint32_t n = 0;
  std::string method;
  std::optional<double> tol;
  std::uint64_t pairs = 100'000;
  std::optional<std::string> sampler;
  std::uint64_t seed = 0;
};

struct TableArgs {
  std::string n_spec;
  std::string methods;
  std::string format = "csv";
  std::optional<std::string> out;
  std::uint64_t pairs = 10'000;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<std::string> sampler;
  std::uint32_t exact_ceiling = cc::exact::kPracticalExactCeiling;
};

cc::mc::SamplerKind parse_sampler(const std::string& name) {
  if (name == "permutation") return cc::mc::SamplerKind::PermutationDirect;
  if (name == "bernoulli") return cc::mc::SamplerKind::BernoulliSum;
  throw CLI::ValidationError("--sampler", "expected permutation or bernoulli");
}

int run_exact(const ExactArgs& args) {
  const cc::exact::StirlingRow row = cc::exact::stirling_row(args.n);
  const cc::exact::Natural f = cc::exact::sum_of_squares(row);
  const cc::exact::ExactProbability p = cc::exact::make_probability(f, args.n);
  const std::string decimal = cc::exact::to_decimal_string(p.as_rational(), 20);

  if (args.json) {
    nlohmann::ordered_json out;
    out["n"] = args.n;
    out["f"] = f.get_str();
    out["p_numerator"] = p.numerator.get_str();
    out["p_denominator"] = p.denominator.get_str();
    out["p_decimal"] = decimal;
    out["p_approx"] = p.approx;
    if (args.row) {
      auto& arr = out["row"] = nlohmann::ordered_json::array();
      for (const auto& c : row.coeffs) arr.push_back(c.get_str());
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "n: " << args.n << '\n'
            << "f(n): " << f.get_str() << '\n'
            << "p(n): " << p.numerator.get_str() << '/' << p.denominator.get_str() << '\n'
            << "p(n) decimal: " << decimal << '\n'
            << "p(n) approx: " << cc::report::format_double(p.approx) << '\n';
  if (args.row) {
    std::cout << "row:\n";
    for (std::uint32_t k = 1; k <= args.n; ++k) {
      std::cout << "  [" << args.n << ' ' << k << "] = " << row[k].get_str() << '\n';
    }
  }
  return kExitOk;
}

int run_collide(const CollideArgs& args) {
  using cc::report::format_double;
  cc::analytic::QuadratureConfig quad;
  if (args.tol) quad.rel_tol = *args.tol;
  const cc::report::Method method = cc::report::parse_method(args.method);
  std::cout << "n: " << args.n << '\n' << "method: " << args.method << '\n';

  switch (method) {
    case cc::report::Method::Exact: {
      const auto p = cc::exact::p_exact(args.n);
      std::cout << "p: " << cc::exact::to_decimal_string(p.as_rational(), 20) << '\n'
                << "p_rational: " << p.numerator.get_str() << '/' << p.denominator.get_str()
                << '\n';
      break;
    }
    case cc::report::Method::Quadrature: {
      const auto kind = args.n <= cc::report::kExactProductLimit
                            ? cc::analytic::IntegrandKind::ExactProduct
                            : cc::analytic::IntegrandKind::GammaRatio;
      const auto r = cc::analytic::p_quadrature_result(args.n, kind, quad);
      std::cout << "integrand: " << cc::analytic::to_string(kind) << '\n'
                << "p: " << format_double(r.value) << '\n'
                << "abs_error_estimate: " << format_double(r.abs_error_estimate) << '\n'
                << "evaluations: " << r.evaluations << '\n';
      break;
    }
    case cc::report::Method::Eq2: {
      const auto r = cc::analytic::I_n(args.n, quad);
      std::cout << "I_n: " << format_double(r.value) << '\n'
                << "abs_error_estimate: " << format_double(r.abs_error_estimate) << '\n'
                << "p: " << format_double(r.value / (2.0 * std::numbers::pi)) << '\n';
      break;
    }
    case cc::report::Method::Asymptotic:
      std::cout << "p: " << format_double(cc::analytic::p_asymptotic(args.n)) << '\n'
                << "laplace_I: " << format_double(cc::analytic::laplace_I(args.n)) << '\n';
      break;
    case cc::report::Method::MonteCarlo: {
      const auto kind = args.sampler ? parse_sampler(*args.sampler)
                                     : cc::mc::default_sampler(args.n);
      const auto est = cc::mc::estimate_collision(args.n, args.pairs, kind,
                                                  cc::mc::Seed{args.seed});
      std::cout << "sampler: " << cc::mc::to_string(kind) << '\n'
                << "seed: " << args.seed << '\n'
                << "samples: " << est.samples << '\n'
                << "collisions: " << est.collisions << '\n'
                << "p: " << format_double(est.p_hat) << '\n'
                << "std_err: " << format_double(est.std_err) << '\n';
      break;
    }
  }
  return kExitOk;
}

int run_table(const TableArgs& args) {
  cc::report::ReportConfig config;
  config.n_values = cc::report::parse_n_values(args.n_spec);
  config.methods = cc::report::parse_methods(args.methods);
  config.output_format = cc::report::parse_format(args.format);
  config.mc_pairs = args.pairs;
  config.seed = cc::mc::Seed{args.seed};
  config.exact_ceiling = args.exact_ceiling;
  if (args.tol) config.quad.rel_tol = *args.tol;
  if (args.sampler) config.sampler = parse_sampler(*args.sampler);
  if (args.out) config.output_path = *args.out;

  const auto rows = cc::report::run_report(config);
  for (const auto& row : rows) {
    for (const auto& note : row.notes) {
      std::cerr << "n=" << row.n << ": " << note << '\n';
    }
  }
  const std::string text = cc::report::render(rows, config);
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << config.output_path->string() << " for writing\n";
      return kExitFailure;
    }
    file << text;
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int run_verify_command() {
  const auto summary = cc::verify::run_verify({}, &std::cout);
  const bool ok = summary.all_passed();
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << '\n';
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-count collision probability of two random permutations"};
  app.require_subcommand(1);

  ExactArgs exact_args;
  auto* exact_cmd = app.add_subcommand("exact", "Exact f(n) and p(n) from Stirling cycle numbers");
  exact_cmd->add_option("--n", exact_args.n, "Number of letters")->required()->check(CLI::PositiveNumber);
  exact_cmd->add_flag("--row", exact_args.row, "Also print the Stirling row");
  exact_cmd->add_flag("--json", exact_args.json, "Emit JSON");

  CollideArgs collide_args;
  auto* collide_cmd = app.add_subcommand("collide", "p(n) by a single method");
  collide_cmd->add_option("--n", collide_args.n, "Number of letters")->required()->check(CLI::PositiveNumber);
  collide_cmd->add_option("--method", collide_args.method, "Route to use")
      ->required()
      ->check(CLI::IsMember({"exact", "quadrature", "eq2", "asymptotic", "montecarlo"}));
  collide_cmd->add_option("--tol", collide_args.tol, "Quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  collide_cmd->add_option("--pairs", collide_args.pairs, "Monte Carlo pairs")->check(CLI::PositiveNumber);
  collide_cmd->add_option("--sampler", collide_args.sampler, "Monte Carlo sampler")
      ->check(CLI::IsMember({"permutation", "bernoulli"}));
  collide_cmd->add_option("--seed", collide_args.seed, "Monte Carlo seed");

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Multi-method convergence table");
  table_cmd->add_option("--n", table_args.n_spec, "Comma list or start:stop:factor")->required();
  table_cmd->add_option("--methods", table_args.methods,
                        "Comma list of exact,quadrature,eq2,asymptotic,montecarlo")
      ->required();
  table_cmd->add_option("--format", table_args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--out", table_args.out, "Output file (default stdout)");
  table_cmd->add_option("--pairs", table_args.pairs, "Monte Carlo pairs per row")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--seed", table_args.seed, "Monte Carlo seed");
  table_cmd->add_option("--tol", table_args.tol, "Quadrature relative tolerance")
      ->check(CLI::PositiveNumber);
  table_cmd->add_option("--sampler", table_args.sampler, "Monte Carlo sampler")
      ->check(CLI::IsMember({"permutation", "bernoulli"}));
  table_cmd->add_option("--exact-ceiling", table_args.exact_ceiling,
                        "Largest n for the exact route");

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*exact_cmd) return run_exact(exact_args);
    if (*collide_cmd) return run_collide(collide_args);
    if (*table_cmd) return run_table(table_args);
    if (*verify_cmd) return run_verify_command();
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
