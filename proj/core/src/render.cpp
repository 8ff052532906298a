#include "cyclecollide/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace cyclecollide::report {

namespace {

std::string csv_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string json_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("null");
}

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string render_csv(const std::vector<CollisionReportRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << r.p_exact.value_or("") << ',' << csv_field(r.p_quadrature) << ','
        << csv_field(r.quad_error_estimate) << ',' << csv_field(r.p_eq2) << ','
        << csv_field(r.p_asymptotic) << ',' << csv_field(r.ratio_to_asymptotic) << ','
        << csv_field(r.mc_p_hat) << ',' << csv_field(r.mc_std_err) << '\n';
  }
  return out.str();
}

std::string render_json(const std::vector<CollisionReportRow>& rows, const ReportConfig& config) {
  std::ostringstream out;
  out << "{\n  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\n";
    out << "      \"n\": " << r.n << ",\n";
    out << "      \"p_exact\": " << (r.p_exact ? json_string(*r.p_exact) : "null") << ",\n";
    out << "      \"p_quadrature\": " << json_number(r.p_quadrature) << ",\n";
    out << "      \"quad_error_estimate\": " << json_number(r.quad_error_estimate) << ",\n";
    out << "      \"p_eq2\": " << json_number(r.p_eq2) << ",\n";
    out << "      \"p_asymptotic\": " << json_number(r.p_asymptotic) << ",\n";
    out << "      \"ratio_to_asymptotic\": " << json_number(r.ratio_to_asymptotic) << ",\n";
    out << "      \"mc_p_hat\": " << json_number(r.mc_p_hat) << ",\n";
    out << "      \"mc_std_err\": " << json_number(r.mc_std_err) << ",\n";
    out << "      \"notes\": [";
    for (std::size_t k = 0; k < r.notes.size(); ++k) {
      out << (k == 0 ? "" : ", ") << json_string(r.notes[k]);
    }
    out << "]\n    }";
  }
  out << (rows.empty() ? "],\n" : "\n  ],\n");

  out << "  \"config\": {\n";
  out << "    \"n_values\": [";
  for (std::size_t i = 0; i < config.n_values.size(); ++i) {
    out << (i == 0 ? "" : ", ") << config.n_values[i];
  }
  out << "],\n    \"methods\": [";
  bool first = true;
  for (Method m : config.methods) {
    out << (first ? "" : ", ") << json_string(to_string(m));
    first = false;
  }
  out << "],\n";
  out << "    \"quad\": {\"rel_tol\": " << format_double(config.quad.rel_tol)
      << ", \"abs_tol\": " << format_double(config.quad.abs_tol)
      << ", \"max_subdivisions\": " << config.quad.max_subdivisions << "},\n";
  out << "    \"mc_pairs\": " << config.mc_pairs << ",\n";
  out << "    \"seed\": " << config.seed.value << ",\n";
  out << "    \"sampler\": "
      << (config.sampler ? json_string(mc::to_string(*config.sampler)) : "\"auto\"") << ",\n";
  out << "    \"exact_ceiling\": " << config.exact_ceiling << ",\n";
  out << "    \"output_format\": " << json_string(to_string(config.output_format)) << ",\n";
  out << "    \"output_path\": "
      << (config.output_path ? json_string(config.output_path->string()) : "null") << "\n";
  out << "  },\n";
  out << "  \"version\": " << json_string(kVersion) << "\n}\n";
  return out.str();
}

std::string render(const std::vector<CollisionReportRow>& rows, const ReportConfig& config) {
  return config.output_format == OutputFormat::Csv ? render_csv(rows)
                                                   : render_json(rows, config);
}

}  // namespace cyclecollide::report
