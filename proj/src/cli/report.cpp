#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "besselxi/cli.hpp"
#include "json.hpp"

namespace besselxi::cli {

namespace {

using verify::CheckReport;
using verify::ParamPoint;

std::string num17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_value(Complex v, bool complex_valued) {
  if (!complex_valued) return num17(v.real());
  return "{\"re\": " + num17(v.real()) + ", \"im\": " + num17(v.imag()) + "}";
}

std::string json_params(const ParamPoint& params) {
  std::string s = "{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += quoted(params[i].first) + ": ";
    if (const double* d = std::get_if<double>(&params[i].second)) {
      s += num17(*d);
    } else {
      s += quoted(std::get<std::string>(params[i].second));
    }
  }
  return s + "}";
}

std::string json_report(const CheckReport& r, const std::string& indent) {
  const std::string in = indent + "  ";
  std::string s = indent + "{\n";
  s += in + "\"check_id\": " + quoted(r.check_id) + ",\n";
  s += in + "\"params\": " + json_params(r.params) + ",\n";
  s += in + "\"lhs\": " + json_value(r.lhs, r.complex_valued) + ",\n";
  s += in + "\"rhs\": " + json_value(r.rhs, r.complex_valued) + ",\n";
  s += in + "\"abs_diff\": " + num17(r.abs_diff) + ",\n";
  s += in + "\"rel_diff\": " + num17(r.rel_diff) + ",\n";
  s += in + "\"ratio\": " + json_value(r.ratio, r.complex_valued) + ",\n";
  s += in + "\"tol\": " + num17(r.tol) + ",\n";
  s += in + "\"passed\": " + (r.passed ? "true" : "false") + ",\n";
  if (r.calibration) {
    s += in + "\"calibration\": {\"constant\": " + json_value(r.calibration->constant, r.complex_valued) +
         ", \"spread\": " + num17(r.calibration->spread) + "},\n";
  }
  s += in + "\"wall_ms\": " + num17(r.wall_ms) + "\n";
  return s + indent + "}";
}

std::string csv_value(Complex v, bool complex_valued) {
  if (!complex_valued) return num17(v.real());
  std::string im = num17(v.imag());
  if (im[0] != '-' && im != "null") im = "+" + im;
  return num17(v.real()) + im + "i";
}

std::string param_text(const ParamPoint& params, const char* sep) {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += sep;
    s += k + "=";
    if (const double* d = std::get_if<double>(&v)) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10g", *d);
      s += buf;
    } else {
      s += std::get<std::string>(v);
    }
  }
  return s;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

constexpr const char* kCsvHeader =
    "check_id,params,lhs,rhs,abs_diff,rel_diff,ratio,tol,passed,calibration_constant,calibration_spread,wall_ms";

std::string csv_row(const CheckReport& r) {
  std::string s = csv_field(r.check_id) + "," + csv_field(param_text(r.params, ";")) + ",";
  s += csv_value(r.lhs, r.complex_valued) + "," + csv_value(r.rhs, r.complex_valued) + ",";
  s += num17(r.abs_diff) + "," + num17(r.rel_diff) + "," + csv_value(r.ratio, r.complex_valued) + ",";
  s += num17(r.tol) + "," + (r.passed ? "true" : "false") + ",";
  if (r.calibration) {
    s += csv_value(r.calibration->constant, r.complex_valued) + "," + num17(r.calibration->spread);
  } else {
    s += ",";
  }
  return s + "," + num17(r.wall_ms);
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string human_value(Complex v, bool complex_valued) {
  char buf[80];
  if (complex_valued) {
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", v.real(), v.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%.15g", v.real());
  }
  return buf;
}

void human_report(const CheckReport& r, std::ostream& out) {
  out << r.check_id << "  [" << verify::mode_name(r.mode) << ", tol " << short_num(r.tol) << "]  "
      << (r.passed ? "PASS" : "FAIL") << "\n";
  if (r.calibration) {
    out << "  constant " << human_value(r.calibration->constant, r.complex_valued) << "  spread "
        << short_num(r.calibration->spread) << "\n";
  }
  out << "  worst rel_diff " << short_num(r.rel_diff) << " at " << param_text(r.params, " ") << "\n";
  if (!r.samples.empty()) {
    out << "  " << std::left << std::setw(44) << "params" << std::setw(26) << "lhs" << std::setw(26) << "rhs"
        << "rel_diff\n";
    for (const auto& s : r.samples) {
      const double diff = std::abs(s.lhs - s.rhs);
      const double scale = s.scale > 0.0 ? s.scale : std::abs(s.rhs);
      out << "  " << std::setw(44) << param_text(s.params, " ") << std::setw(26)
          << human_value(s.lhs, r.complex_valued) << std::setw(26) << human_value(s.rhs, r.complex_valued)
          << short_num(scale > 0.0 ? diff / scale : diff) << "\n";
    }
    out << std::right;
  }
  for (const auto& c : r.conditions) {
    out << "  condition: " << c.description << "  measured " << short_num(c.measured) << " limit "
        << short_num(c.limit) << "  " << (c.passed ? "ok" : "violated") << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  if (r.wall_ms > 0.0) out << "  wall_ms " << short_num(r.wall_ms) << "\n";
}

void check_sink(std::ostream& out) {
  out.flush();
  if (!out) throw SinkError("failed writing report");
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "human") return OutputFormat::human;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  return std::nullopt;
}

void emit_report(const CheckReport& report, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json:
      out << json_report(report, "") << "\n";
      break;
    case OutputFormat::csv:
      out << kCsvHeader << "\n" << csv_row(report) << "\n";
      break;
    case OutputFormat::human:
      human_report(report, out);
      break;
  }
  check_sink(out);
}

void emit_errata(const std::vector<verify::Erratum>& errata, std::ostream& out) {
  if (errata.empty()) return;
  out << "errata (" << errata.size() << ")\n";
  for (const auto& e : errata) {
    out << "  " << e.check_id << ": " << e.description << "\n"
        << "      printed:  " << e.printed << "\n"
        << "      measured: " << e.measured << "\n";
  }
}

void emit_suite(const verify::SuiteReport& suite, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json: {
      out << "{\n  \"reports\": [\n";
      for (std::size_t i = 0; i < suite.reports.size(); ++i) {
        out << json_report(suite.reports[i], "    ") << (i + 1 < suite.reports.size() ? ",\n" : "\n");
      }
      out << "  ],\n  \"errata\": [\n";
      for (std::size_t i = 0; i < suite.errata.size(); ++i) {
        const auto& e = suite.errata[i];
        out << "    {\"check_id\": " << quoted(e.check_id) << ", \"description\": " << quoted(e.description)
            << ", \"printed\": " << quoted(e.printed) << ", \"measured\": " << quoted(e.measured) << "}"
            << (i + 1 < suite.errata.size() ? ",\n" : "\n");
      }
      out << "  ],\n  \"all_passed\": " << (suite.all_passed ? "true" : "false")
          << ",\n  \"exact_passed\": " << (suite.exact_passed ? "true" : "false") << "\n}\n";
      break;
    }
    case OutputFormat::csv:
      out << kCsvHeader << "\n";
      for (const auto& r : suite.reports) out << csv_row(r) << "\n";
      break;
    case OutputFormat::human: {
      out << std::left << std::setw(14) << "check" << std::setw(11) << "mode" << std::setw(6) << "pass"
          << std::setw(12) << "rel_diff" << std::setw(10) << "tol" << std::setw(26) << "constant" << std::setw(12)
          << "spread" << "wall_ms\n";
      for (const auto& r : suite.reports) {
        out << std::setw(14) << r.check_id << std::setw(11) << verify::mode_name(r.mode) << std::setw(6)
            << (r.passed ? "yes" : "NO") << std::setw(12) << short_num(r.rel_diff) << std::setw(10)
            << short_num(r.tol) << std::setw(26)
            << (r.calibration ? human_value(r.calibration->constant, r.complex_valued) : std::string("-"))
            << std::setw(12) << (r.calibration ? short_num(r.calibration->spread) : std::string("-"))
            << short_num(r.wall_ms) << "\n";
      }
      out << std::right;
      for (const auto& f : suite.failures) out << "error in " << f.check_id << ": " << f.message << "\n";
      emit_errata(suite.errata, out);
      out << "exact checks " << (suite.exact_passed ? "all passed" : "FAILED") << "; all checks "
          << (suite.all_passed ? "passed" : "not all passed") << "\n";
      break;
    }
  }
  check_sink(out);
}

int suite_exit_code(const verify::SuiteReport& suite) {
  if (suite.exact_passed) return 0;
  for (const auto& f : suite.failures) {
    if (f.mode == verify::CheckMode::exact && f.kind == verify::FailureKind::convergence) return 3;
  }
  return 1;
}

int single_exit_code(const verify::SuiteReport& suite) {
  for (const auto& f : suite.failures) {
    if (f.kind == verify::FailureKind::domain) return 2;
    return 3;
  }
  return suite.all_passed ? 0 : 1;
}

}  // namespace besselxi::cli
