#pragma once

// Command-line front end: eval, verify, scan and heat verbs plus the report
// emitters they share.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "besselxi/verify.hpp"

namespace besselxi::cli {

enum class OutputFormat { human, json, csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Thrown when the output stream goes bad while a report is written.
class SinkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON: one object with check_id, params, lhs, rhs, abs_diff, rel_diff,
/// ratio, tol, passed, calibration (CALIBRATE only) and wall_ms. Numbers use
/// 17 significant digits; non-finite numbers become null; complex values
/// are {"re": .., "im": ..}.
void emit_report(const verify::CheckReport& report, OutputFormat fmt, std::ostream& out);

/// JSON wraps the report objects as {"reports": [...], "errata": [...],
/// "all_passed": .., "exact_passed": ..}. CSV is a header plus one row per
/// report.
void emit_suite(const verify::SuiteReport& suite, OutputFormat fmt, std::ostream& out);

/// Errata as a human readable list (used after single-check human output).
void emit_errata(const std::vector<verify::Erratum>& errata, std::ostream& out);

/// 0 when every EXACT-mode report passed, 3 when one of those failures was a
/// non-convergence, 1 otherwise.
int suite_exit_code(const verify::SuiteReport& suite);

/// 0 pass, 1 fail, 2 domain error in the request, 3 other numerical failure.
int single_exit_code(const verify::SuiteReport& suite);

/// Entry point for the besselxi executable. args excludes argv[0].
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besselxi::cli
