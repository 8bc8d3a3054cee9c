#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "besselxi/besselhyp.hpp"
#include "checks.hpp"

namespace besselxi::verify {

namespace {

using detail::CheckData;

CheckData dispatch(CheckId id, const Grid& grid, double tol) {
  switch (id) {
    case CheckId::eq_1_1: return detail::check_eq_1_1(grid, tol);
    case CheckId::thm_1_1: return detail::check_thm_1_1(grid, tol);
    case CheckId::thm_1_2: return detail::check_thm_1_2(grid, tol);
    case CheckId::thm_1_2_r0: return detail::check_thm_1_2_r0(grid, tol);
    case CheckId::thm_1_3: return detail::check_thm_1_3(grid, tol);
    case CheckId::asym_remark: return detail::check_asym_remark(grid, tol);
    case CheckId::heat_pde: return detail::check_heat_pde(grid, tol);
    case CheckId::bvp_i: return detail::check_bvp_i(grid, tol);
    case CheckId::bvp_ii: return detail::check_bvp_ii(grid, tol);
    case CheckId::bessel_derivs: return detail::check_bessel_derivs(grid, tol);
    case CheckId::parseval: return detail::check_parseval(grid, tol);
    case CheckId::mellin_3_3: return detail::check_mellin_3_3(grid, tol);
    case CheckId::residue_3_5: return detail::check_residue_3_5(grid, tol);
    case CheckId::contour_3_6: return detail::check_contour_3_6(grid, tol);
    case CheckId::reflect_3_7: return detail::check_reflect_3_7(grid, tol);
    case CheckId::beta_3_8: return detail::check_beta_3_8(grid, tol);
    case CheckId::kummer_3_9: return detail::check_kummer_3_9(grid, tol);
    case CheckId::muntz_3_11: return detail::check_muntz_3_11(grid, tol);
    case CheckId::chain_3_12: return detail::check_chain_3_12(grid, tol);
  }
  throw InvariantError("run_check: unknown id");
}

double rel_diff_of(const Sample& s) {
  const double diff = std::abs(s.lhs - s.rhs);
  const double scale = s.scale > 0.0 ? s.scale : std::abs(s.rhs);
  return scale > 0.0 ? diff / scale : diff;
}

Complex ratio_of(const Sample& s) {
  return std::abs(s.rhs) > 0.0 ? s.lhs / s.rhs : Complex(std::numeric_limits<double>::infinity(), 0.0);
}

// Sign from the x = 0 sample (first sample otherwise), magnitude from the
// mean of log |ratio|.
Calibration fit_constant(const std::vector<Sample>& samples, std::size_t* worst) {
  std::size_t anchor = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto x = find_param(samples[i].params, "x");
    if (x && *x == 0.0) {
      anchor = i;
      break;
    }
  }
  double log_sum = 0.0;
  for (const auto& s : samples) log_sum += std::log(std::abs(ratio_of(s)));
  const double magnitude = std::exp(log_sum / static_cast<double>(samples.size()));
  const double sign = ratio_of(samples[anchor]).real() < 0.0 ? -1.0 : 1.0;
  Calibration c{Complex(sign * magnitude, 0.0), 0.0};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double dev = std::abs(ratio_of(samples[i]) / c.constant - 1.0);
    if (!(dev <= c.spread)) {
      c.spread = dev;
      *worst = i;
    }
  }
  return c;
}

CheckOutcome finalize(CheckId id, CheckMode mode, double tol, CheckData data) {
  if (data.samples.empty()) throw DomainError("check produced no samples (empty grid?)");
  CheckOutcome out;
  CheckReport& r = out.report;
  r.check_id = std::string(check_name(id));
  r.mode = mode;
  r.tol = tol;
  r.complex_valued = data.complex_valued;

  std::size_t worst = 0;
  double worst_rel = -1.0;
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    const double rel = rel_diff_of(data.samples[i]);
    if (!(rel <= worst_rel)) {
      worst_rel = rel;
      worst = i;
    }
  }
  bool passed = true;
  if (mode == CheckMode::calibrate) {
    const Calibration cal = fit_constant(data.samples, &worst);
    r.calibration = cal;
    passed = cal.spread <= tol;
    const double off = std::abs(cal.constant - data.printed_constant) / std::abs(data.printed_constant);
    if (off > tol) {
      out.errata.push_back({r.check_id,
                            "measured LHS/RHS constant differs from the printed one" +
                                (data.printed_description.empty() ? std::string() : "; " + data.printed_description),
                            detail::format_number(data.printed_constant),
                            detail::format_number(cal.constant) + " (spread " + detail::format_number(cal.spread) + ")"});
    }
  } else {
    passed = worst_rel <= tol;
  }
  for (const auto& c : data.conditions) passed = passed && c.passed;

  const Sample& w = data.samples[worst];
  r.params = w.params;
  r.lhs = w.lhs;
  r.rhs = w.rhs;
  r.abs_diff = std::abs(w.lhs - w.rhs);
  r.rel_diff = rel_diff_of(w);
  r.ratio = ratio_of(w);
  r.passed = passed;
  r.samples = std::move(data.samples);
  r.conditions = std::move(data.conditions);
  r.notes = std::move(data.notes);
  for (auto& e : data.errata) out.errata.push_back(std::move(e));
  return out;
}

}  // namespace

CheckOutcome run_check(const CheckRequest& request) {
  const CheckDefaults defaults = check_defaults(request.id);
  const CheckMode mode = request.mode.value_or(defaults.mode);
  const double tol = request.tol.value_or(defaults.tol);
  if (!(tol > 0.0)) throw DomainError("run_check: tol must be positive");
  const Grid grid = apply_overrides(defaults.grid, request.grid);
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome out = finalize(request.id, mode, tol, dispatch(request.id, grid, tol));
  if (request.record_timing) {
    out.report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
  std::vector<CheckRequest> requests;
  const std::vector<CheckId>& ids = config.checks.empty() ? all_checks() : config.checks;
  for (CheckId id : ids) {
    CheckRequest req;
    req.id = id;
    req.mode = config.mode;
    req.tol = config.tol;
    req.grid = config.grid;
    req.record_timing = config.record_timing;
    requests.push_back(req);
    if (id == CheckId::thm_1_2 && config.include_thm12_real_r) {
      req.grid.emplace_back("imag_r", std::vector<double>{0.0});
      requests.push_back(req);
    }
  }

  std::vector<std::optional<CheckOutcome>> outcomes(requests.size());
  std::vector<std::string> errors(requests.size());
  std::vector<FailureKind> kinds(requests.size(), FailureKind::other);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      try {
        outcomes[i] = run_check(requests[i]);
      } catch (const DomainError& e) {
        errors[i] = e.what();
        kinds[i] = FailureKind::domain;
      } catch (const ConvergenceError& e) {
        errors[i] = e.what();
        kinds[i] = FailureKind::convergence;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned jobs = config.jobs > 0 ? static_cast<unsigned>(config.jobs) : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(requests.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteReport suite;
  suite.all_passed = true;
  suite.exact_passed = true;
  for (std::size_t i = 0; i < requests.size(); ++i) {
    if (outcomes[i]) {
      CheckOutcome& o = *outcomes[i];
      suite.all_passed = suite.all_passed && o.report.passed;
      if (o.report.mode == CheckMode::exact) suite.exact_passed = suite.exact_passed && o.report.passed;
      suite.reports.push_back(std::move(o.report));
      for (auto& e : o.errata) suite.errata.push_back(std::move(e));
    } else {
      CheckReport failed;
      failed.check_id = std::string(check_name(requests[i].id));
      const CheckDefaults d = check_defaults(requests[i].id);
      failed.mode = requests[i].mode.value_or(d.mode);
      failed.tol = requests[i].tol.value_or(d.tol);
      failed.rel_diff = std::numeric_limits<double>::infinity();
      failed.abs_diff = std::numeric_limits<double>::infinity();
      failed.notes.push_back("error: " + errors[i]);
      suite.all_passed = false;
      if (failed.mode == CheckMode::exact) suite.exact_passed = false;
      suite.failures.push_back({failed.check_id, failed.mode, kinds[i], errors[i]});
      suite.reports.push_back(std::move(failed));
    }
  }
  return suite;
}

Complex f_plus(Complex s, const PhysParams& p) {
  p.validate();
  const Complex w(-p.r.squared() / (4.0 * p.t), 0.0);
  return std::exp(p.x * s) * kummer_1f1({s / 2.0, w}) + std::exp(p.x * (1.0 - s)) * kummer_1f1({(1.0 - s) / 2.0, w});
}

}  // namespace besselxi::verify
