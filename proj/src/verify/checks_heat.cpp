#include <algorithm>
#include <cmath>
#include <functional>

#include "checks.hpp"

namespace besselxi::verify::detail {

namespace {

double central_first(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double central_second(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// One Richardson step on an O(h²) difference quotient.
double richardson(const std::function<double(double)>& quotient, double h) {
  return (4.0 * quotient(0.5 * h) - quotient(h)) / 3.0;
}

struct HeatResidual {
  double laplacian;  // κ(u_rr + u_r / r)
  double u_t;
};

HeatResidual heat_residual(double r, double t, double kappa, double h, bool extrapolate) {
  auto u_of_r = [t, kappa](double rr) { return heat_u(rr, t, kappa).value; };
  auto u_of_t = [r, kappa](double tt) { return heat_u(r, tt, kappa).value; };
  auto d_r = [&](double s) { return central_first(u_of_r, r, s); };
  auto d_rr = [&](double s) { return central_second(u_of_r, r, s); };
  auto d_t = [&](double s) { return central_first(u_of_t, t, s); };
  const double ur = extrapolate ? richardson(d_r, h) : d_r(h);
  const double urr = extrapolate ? richardson(d_rr, h) : d_rr(h);
  const double ut = extrapolate ? richardson(d_t, h) : d_t(h);
  return {kappa * (urr + ur / r), ut};
}

}  // namespace

CheckData check_asym_remark(const Grid& grid, double /*tol*/) {
  CheckData data;
  double reference = -1.0;
  for (const auto& pt : grid) {
    const double r = param(pt, "r");
    const double t = param(pt, "t");
    const double kappa = find_param(pt, "kappa").value_or(1.0);
    const double scaled = std::sqrt(r) * heat_u(r, t, kappa).value;
    const double surrogate = heat_surrogate_scaled(r, t, kappa).value;
    const double deviation = std::fabs(scaled - surrogate) * r;
    if (reference < 0.0) reference = deviation;  // first grid point
    data.samples.push_back({pt, deviation, reference, 0.0});
  }
  data.notes.push_back("lhs = r |sqrt(r) u - surrogate|, rhs = the same at the first r; pass while lhs <= 2 rhs");
  return data;
}

CheckData check_heat_pde(const Grid& grid, double /*tol*/) {
  CheckData data;
  constexpr double kStep = 1e-4;
  // The refinement order is measured with plain central differences at a
  // step where truncation error dominates rounding.
  constexpr double kCoarse = 0.04;
  double worst_ratio_dev = 0.0;
  std::string ratios;
  for (const auto& pt : grid) {
    const double r = param(pt, "r");
    const double t = param(pt, "t");
    const double kappa = find_param(pt, "kappa").value_or(1.0);
    if (!(r > kCoarse) || !(t > kCoarse)) throw DomainError("heat_pde: need r, t > 0.04");
    const HeatResidual fine = heat_residual(r, t, kappa, kStep, true);
    data.samples.push_back({pt, fine.laplacian, fine.u_t, 1.0});
    const HeatResidual a = heat_residual(r, t, kappa, kCoarse, false);
    const HeatResidual b = heat_residual(r, t, kappa, 0.5 * kCoarse, false);
    const double ratio = std::fabs(a.laplacian - a.u_t) / std::fabs(b.laplacian - b.u_t);
    worst_ratio_dev = std::max(worst_ratio_dev, std::fabs(ratio / 4.0 - 1.0));
    ratios += (ratios.empty() ? "" : ", ") + format_number(ratio);
  }
  data.conditions.push_back({"residual ratio between steps h and h/2 is 4 within 20%", worst_ratio_dev, 0.2,
                             worst_ratio_dev <= 0.2});
  data.notes.push_back("refinement ratios (h=0.04 vs 0.02): " + ratios);
  return data;
}

CheckData check_bvp_i(const Grid& grid, double /*tol*/) {
  CheckData data;
  for (const auto& pt : grid) {
    const double t = param(pt, "t");
    const double lhs = heat_u(0.0, t, 1.0).value;  // u(0, t) = ψ(t)
    const double k = std::sqrt(kPi / t);
    const double rhs = k * theta_psi(kPi * kPi / t, ThetaConvention::plain).value + 0.5 * k - 0.5;
    data.samples.push_back({pt, lhs, rhs, 0.0});
  }
  return data;
}

CheckData check_bvp_ii(const Grid& grid, double /*tol*/) {
  CheckData data;
  bool all_converged = true;
  for (const auto& pt : grid) {
    const double r = param(pt, "r");
    const AbelResult lim = abel_limit([r](double t) { return heat_u(r, t, 1.0); });
    all_converged = all_converged && lim.converged;
    data.samples.push_back({pt, lim.value, bvp_initial_closed_form(r), 0.0});
  }
  data.conditions.push_back({"Abel extrapolants contract", all_converged ? 1.0 : 0.0, 1.0, all_converged});
  return data;
}

CheckData check_bessel_derivs(const Grid& grid, double /*tol*/) {
  CheckData data;
  for (const auto& pt : grid) {
    const double n = param(pt, "n");
    const double r = param(pt, "r");
    auto j0n = [n](double rr) { return bessel_j(BesselOrder::zero, n * rr); };
    const double j0 = bessel_j(BesselOrder::zero, n * r);
    const double j1 = bessel_j(BesselOrder::one, n * r);

    const double d1 = richardson([&](double h) { return central_first(j0n, r, h); }, 1e-5);
    const double want1 = -n * j1;
    ParamPoint p1 = pt;
    p1.emplace_back("order", 1.0);
    data.samples.push_back({p1, d1, want1, std::max(1.0, std::fabs(want1))});

    // Rounding in the second difference grows like eps/h², so a larger step.
    const double h2 = std::min(1e-3, 0.25 * r);
    const double d2 = richardson([&](double h) { return central_second(j0n, r, h); }, h2);
    const double want2 = n / r * j1 - n * n * j0;
    ParamPoint p2 = pt;
    p2.emplace_back("order", 2.0);
    data.samples.push_back({p2, d2, want2, std::max(1.0, std::fabs(want2))});
  }
  data.errata.push_back({"bessel_derivs", "intermediate step of the second-derivative chain carries a spurious factor n",
                         "-n^2 dJ1(nr)/dr", "-n dJ1(nr)/dr (final expression (n/r)J1(nr) - n^2 J0(nr) verified)"});
  return data;
}

}  // namespace besselxi::verify::detail
