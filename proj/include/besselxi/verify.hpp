#pragma once

// Identity-check registry. Each check evaluates the two sides of one
// identity by separate pipelines over a parameter grid and reports the
// worst disagreement (EXACT) or the spread of the fitted constant
// LHS/RHS (CALIBRATE).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "besselxi/series.hpp"
#include "besselxi/types.hpp"

namespace besselxi::verify {

enum class CheckId {
  eq_1_1,
  thm_1_1,
  thm_1_2,
  thm_1_2_r0,
  thm_1_3,
  asym_remark,
  heat_pde,
  bvp_i,
  bvp_ii,
  bessel_derivs,
  parseval,
  mellin_3_3,
  residue_3_5,
  contour_3_6,
  reflect_3_7,
  beta_3_8,
  kummer_3_9,
  muntz_3_11,
  chain_3_12,
};

/// Registry order.
const std::vector<CheckId>& all_checks();
std::string_view check_name(CheckId id);
std::optional<CheckId> parse_check_id(std::string_view name);

enum class CheckMode { exact, calibrate };
std::string_view mode_name(CheckMode m);
std::optional<CheckMode> parse_mode(std::string_view name);

using ParamValue = std::variant<double, std::string>;
/// Ordered name/value pairs.
using ParamPoint = std::vector<std::pair<std::string, ParamValue>>;
using Grid = std::vector<ParamPoint>;
/// axis name -> replacement values, e.g. from "x=0,0.5;t=1".
using GridOverrides = std::vector<std::pair<std::string, std::vector<double>>>;

/// Parses "name=v1,v2;name2=v3". Throws DomainError on malformed input.
GridOverrides parse_grid_spec(std::string_view spec);

/// Replaces each overridden axis by the given values, crossed with the
/// distinct remaining combinations of the default grid. Overriding an
/// axis the grid does not have adds it.
Grid apply_overrides(const Grid& defaults, const GridOverrides& overrides);

double param(const ParamPoint& p, std::string_view name);
std::optional<double> find_param(const ParamPoint& p, std::string_view name);

struct Sample {
  ParamPoint params;
  Complex lhs;
  Complex rhs;
  /// When > 0, rel_diff = |lhs − rhs| / scale instead of / |rhs|.
  double scale = 0.0;
};

/// An extra pass condition (e.g. evenness, refinement order).
struct Condition {
  std::string description;
  double measured = 0.0;
  double limit = 0.0;
  bool passed = false;
};

struct Calibration {
  Complex constant;
  double spread = 0.0;
};

struct CheckReport {
  std::string check_id;
  CheckMode mode = CheckMode::exact;
  ParamPoint params;  // of the worst sample, whose values fill lhs/rhs
  Complex lhs;
  Complex rhs;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  Complex ratio;
  double tol = 0.0;
  bool passed = false;
  std::optional<Calibration> calibration;
  double wall_ms = 0.0;
  bool complex_valued = false;
  std::vector<Sample> samples;
  std::vector<Condition> conditions;
  std::vector<std::string> notes;
};

/// A printed constant or formula that measurement contradicts.
struct Erratum {
  std::string check_id;
  std::string description;
  std::string printed;
  std::string measured;
};

struct CheckDefaults {
  CheckMode mode;
  double tol;
  Grid grid;
};
CheckDefaults check_defaults(CheckId id);

struct CheckRequest {
  CheckId id = CheckId::eq_1_1;
  std::optional<CheckMode> mode;
  std::optional<double> tol;
  GridOverrides grid;
  bool record_timing = false;
};

struct CheckOutcome {
  CheckReport report;
  std::vector<Erratum> errata;
};

/// Runs one check. Domain violations and non-convergence propagate as
/// exceptions naming the failing sub-computation.
CheckOutcome run_check(const CheckRequest& request);

struct SuiteConfig {
  std::vector<CheckId> checks;  // empty: the whole registry
  /// Adds a second thm_1_2 report with real r (the I₀ branch).
  bool include_thm12_real_r = false;
  int jobs = 1;  // 0: one per hardware thread
  std::optional<CheckMode> mode;
  std::optional<double> tol;
  GridOverrides grid;
  bool record_timing = false;
};

enum class FailureKind { domain, convergence, other };

/// A check that threw instead of producing a report.
struct SuiteFailure {
  std::string check_id;
  CheckMode mode = CheckMode::exact;
  FailureKind kind = FailureKind::other;
  std::string message;
};

struct SuiteReport {
  std::vector<CheckReport> reports;
  bool all_passed = false;
  /// Every report run in EXACT mode passed.
  bool exact_passed = false;
  std::vector<Erratum> errata;
  std::vector<SuiteFailure> failures;
};

/// Report order follows the configured check order whatever `jobs` is.
/// A check that throws becomes a failed report carrying the message.
SuiteReport run_suite(const SuiteConfig& config);

/// F⁺(s) = e^{xs} ₁F₁(s/2; 1; −r²/4t) + e^{x(1−s)} ₁F₁((1−s)/2; 1; −r²/4t).
Complex f_plus(Complex s, const PhysParams& p);

}  // namespace besselxi::verify
