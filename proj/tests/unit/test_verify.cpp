#include <algorithm>
#include <set>

#include "besselxi/besselhyp.hpp"
#include "besselxi/verify.hpp"
#include "check_close.hpp"

using namespace besselxi;
using namespace besselxi::verify;

namespace {

bool has_erratum(const std::vector<Erratum>& errata, const std::string& id) {
  return std::any_of(errata.begin(), errata.end(), [&](const Erratum& e) { return e.check_id == id; });
}

CheckOutcome run(CheckId id, GridOverrides grid = {}) {
  CheckRequest req;
  req.id = id;
  req.grid = std::move(grid);
  return run_check(req);
}

}  // namespace

TEST_CASE("registry") {
  CHECK(all_checks().size() == 19);
  std::set<std::string> names;
  for (CheckId id : all_checks()) {
    const std::string name(check_name(id));
    names.insert(name);
    REQUIRE(parse_check_id(name).has_value());
    CHECK(*parse_check_id(name) == id);
    CHECK_FALSE(check_defaults(id).grid.empty());
  }
  CHECK(names.size() == 19);
  CHECK_FALSE(parse_check_id("nosuchcheck").has_value());
  CHECK(check_defaults(CheckId::thm_1_1).mode == CheckMode::calibrate);
  CHECK(check_defaults(CheckId::bvp_i).tol == 1e-10);
  CHECK(parse_mode("calibrate") == CheckMode::calibrate);
  CHECK_FALSE(parse_mode("loose").has_value());
}

TEST_CASE("grid overrides") {
  const GridOverrides o = parse_grid_spec("x=0,0.5;t=2");
  REQUIRE(o.size() == 2);
  CHECK(o[0].first == "x");
  CHECK(o[0].second == std::vector<double>{0.0, 0.5});
  CHECK_THROWS_AS(parse_grid_spec("x="), DomainError);
  CHECK_THROWS_AS(parse_grid_spec("x=abc"), DomainError);

  // thm_1_3 default: 3 r values x 3 x values at t = π.
  const Grid base = check_defaults(CheckId::thm_1_3).grid;
  CHECK(base.size() == 9);
  const Grid g = apply_overrides(base, {{"x", {0.1}}});
  CHECK(g.size() == 3);
  for (const auto& p : g) CHECK(param(p, "x") == 0.1);
  const Grid added = apply_overrides(base, {{"kappa", {2.0}}});
  CHECK(added.size() == 9);
  CHECK(find_param(added[0], "kappa") == 2.0);
}

TEST_CASE("exact check report") {
  const CheckOutcome o = run(CheckId::bvp_i);
  const CheckReport& r = o.report;
  CHECK(r.check_id == "bvp_i");
  CHECK(r.mode == CheckMode::exact);
  CHECK(r.passed);
  CHECK(r.rel_diff <= 1e-10);
  CHECK_FALSE(r.calibration.has_value());
  CHECK(r.wall_ms == 0.0);
  CHECK(r.samples.size() == 5);
  CHECK(r.abs_diff == std::abs(r.lhs - r.rhs));
}

TEST_CASE("tolerance and mode overrides") {
  CheckRequest req;
  req.id = CheckId::bvp_i;
  req.tol = 1e-20;
  CHECK_FALSE(run_check(req).report.passed);
  req.tol = -1.0;
  CHECK_THROWS_AS(run_check(req), DomainError);

  req.id = CheckId::contour_3_6;
  req.tol.reset();
  req.mode = CheckMode::exact;
  const CheckReport r = run_check(req).report;
  CHECK_FALSE(r.passed);  // LHS is a quarter of the line integral
  CHECK_FALSE(r.calibration.has_value());
}

TEST_CASE("eq_1_1 picks the pi convention") {
  const CheckOutcome o = run(CheckId::eq_1_1);
  CHECK(o.report.passed);
  CHECK(o.report.rel_diff <= 1e-8);
  REQUIRE(o.report.conditions.size() == 1);
  CHECK(o.report.conditions[0].passed);
  const bool recorded = std::any_of(o.report.notes.begin(), o.report.notes.end(),
                                    [](const std::string& n) { return n == "winning convention: pi"; });
  CHECK(recorded);
  CHECK(o.report.samples.size() == 4);
  CHECK_REL(o.report.samples[0].rhs.real(), 1.435024842833822, 1e-14);
}

TEST_CASE("calibrated constants") {
  const CheckOutcome t13 = run(CheckId::thm_1_3);
  REQUIRE(t13.report.calibration.has_value());
  CHECK(t13.report.calibration->spread <= 1e-5);
  CHECK_REL(t13.report.calibration->constant, Complex(-2.0 * kPi, 0.0), 1e-8);
  CHECK(has_erratum(t13.errata, "thm_1_3"));

  const CheckOutcome c36 = run(CheckId::contour_3_6);
  REQUIRE(c36.report.calibration.has_value());
  CHECK(c36.report.passed);
  CHECK_REL(c36.report.calibration->constant, Complex(0.25, 0.0), 1e-8);
}

TEST_CASE("thm_1_1 at a single r, t") {
  const CheckOutcome o = run(CheckId::thm_1_1, {{"r", {0.5}}, {"t", {1.0}}});
  CHECK(o.report.samples.size() == 5);
  CHECK(o.report.passed);
  CHECK_REL(o.report.calibration->constant, Complex(std::sqrt(kPi), 0.0), 1e-8);
}

TEST_CASE("residue constant erratum") {
  const CheckOutcome o = run(CheckId::residue_3_5);
  CHECK(o.report.passed);
  CHECK(has_erratum(o.errata, "residue_3_5"));
  REQUIRE(o.report.conditions.size() == 1);
  CHECK(o.report.conditions[0].measured >= 1e3 * o.report.tol);
}

TEST_CASE("thm_1_2 and thm_1_2_r0 fail as stated") {
  const CheckOutcome r0 = run(CheckId::thm_1_2_r0);
  CHECK_FALSE(r0.report.passed);
  CHECK(has_erratum(r0.errata, "thm_1_2_r0"));
  const CheckOutcome t12 = run(CheckId::thm_1_2);
  CHECK_FALSE(t12.report.passed);
  CHECK(t12.report.calibration->spread > 1e-2);
}

TEST_CASE("thm_1_2 domain gate") {
  CHECK_THROWS_AS(run(CheckId::thm_1_2, {{"x", {2.0}}}), DomainError);
}

TEST_CASE("heat and Bessel derivative checks") {
  for (CheckId id : {CheckId::heat_pde, CheckId::bvp_ii, CheckId::bessel_derivs, CheckId::asym_remark}) {
    const CheckOutcome o = run(id);
    INFO(o.report.check_id);
    CHECK(o.report.passed);
    for (const auto& c : o.report.conditions) CHECK(c.passed);
  }
  CHECK(has_erratum(run(CheckId::bessel_derivs).errata, "bessel_derivs"));
}

TEST_CASE("mellin machinery checks") {
  for (CheckId id : {CheckId::parseval, CheckId::mellin_3_3, CheckId::kummer_3_9, CheckId::muntz_3_11,
                     CheckId::reflect_3_7}) {
    const CheckOutcome o = run(id);
    INFO(o.report.check_id);
    CHECK(o.report.passed);
    CHECK(o.report.rel_diff <= 1e-8);
  }
  CHECK(run(CheckId::mellin_3_3).report.complex_valued);
}

TEST_CASE("beta regimes") {
  const CheckOutcome o = run(CheckId::beta_3_8, {{"y", {0.5, 2.0}}});
  CHECK(o.report.passed);
  for (const auto& s : o.report.samples) {
    if (param(s.params, "y") > 1.0) CHECK(std::abs(s.lhs) <= 1e-8);
  }
}

TEST_CASE("suite order and determinism") {
  SuiteConfig config;
  config.checks = {CheckId::kummer_3_9, CheckId::bvp_i, CheckId::thm_1_2_r0, CheckId::bessel_derivs,
                   CheckId::parseval};
  config.jobs = 1;
  const SuiteReport serial = run_suite(config);
  config.jobs = 3;
  const SuiteReport parallel = run_suite(config);
  REQUIRE(serial.reports.size() == 5);
  REQUIRE(parallel.reports.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(serial.reports[i].check_id == check_name(config.checks[i]));
    CHECK(parallel.reports[i].check_id == serial.reports[i].check_id);
    CHECK(parallel.reports[i].lhs == serial.reports[i].lhs);
    CHECK(parallel.reports[i].rhs == serial.reports[i].rhs);
  }
  CHECK_FALSE(serial.exact_passed);  // thm_1_2_r0
  CHECK_FALSE(serial.all_passed);
  CHECK(serial.errata.size() == parallel.errata.size());
}

TEST_CASE("suite records throwing checks") {
  SuiteConfig config;
  config.checks = {CheckId::thm_1_2, CheckId::bvp_i};
  config.grid = {{"x", {1.0}}};
  const SuiteReport s = run_suite(config);
  REQUIRE(s.reports.size() == 2);
  REQUIRE(s.failures.size() == 1);
  CHECK(s.failures[0].check_id == "thm_1_2");
  CHECK(s.failures[0].kind == FailureKind::domain);
  CHECK_FALSE(s.reports[0].passed);
  CHECK(s.exact_passed);  // thm_1_2 runs in CALIBRATE mode
}

TEST_CASE("real-r report of thm_1_2") {
  SuiteConfig config;
  config.checks = {CheckId::thm_1_2};
  config.include_thm12_real_r = true;
  const SuiteReport s = run_suite(config);
  REQUIRE(s.reports.size() == 2);
  CHECK(s.failures.empty());
  CHECK(find_param(s.reports[1].params, "imag_r") == 0.0);
  CHECK(s.reports[1].calibration.has_value());
}

TEST_CASE("f_plus") {
  PhysParams p;
  p.x = 0.4;
  p.r = BesselScale::real(0.0);
  p.t = 1.0;
  const double y = 1.7;
  CHECK_REL(f_plus(Complex(0.5, y), p), Complex(2.0 * std::exp(0.2) * std::cos(0.4 * y), 0.0), 1e-14);
  p.r = BesselScale::real(1.0);
  CHECK_REL(f_plus(Complex(0.5, 0.0), p),
            2.0 * std::exp(0.2) * kummer_1f1({Complex(0.25, 0.0), Complex(-0.25, 0.0)}), 1e-14);
  CHECK(std::abs(f_plus(Complex(0.5, 3.2), p) - f_plus(Complex(0.5, -3.2), p)) <= 1e-12);
}
