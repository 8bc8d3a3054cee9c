#include <algorithm>
#include <cmath>
#include <map>

#include "besselxi/complexfn.hpp"
#include "checks.hpp"

namespace besselxi::verify::detail {

namespace {

// |Ξ(y)| <= 2 (1+y)² e^{-πy/4} (checked against mpmath on [0, 100]; the
// true ratio decays beyond).
constexpr double kXiBound = 2.0;

// Bound on |₁F₁(¼ ± iy/2; 1; −w)|² of the form e^{k0 + 0.1 y}.
double kummer_sq_log_bound(double w) {
  w = std::fabs(w);
  return 2.0 * std::sqrt(w) + 21.0 * w + std::log(10.0);
}

Complex kummer_w(const PhysParams& p) { return Complex(-p.r.squared() / (4.0 * p.t), 0.0); }

Sample make_sample(ParamPoint params, Complex lhs, Complex rhs, double scale = 0.0) {
  return Sample{std::move(params), lhs, rhs, scale};
}

// Point where both Gaussian sums in H₁ have dropped below e^{-45}.
double h1_pure_tail_start(const PhysParams& p) {
  const double g = p.r.growth_rate();
  return (g + std::sqrt(g * g + 180.0 * p.t)) / (2.0 * p.t);
}

}  // namespace

CheckData check_eq_1_1(const Grid& grid, double tol) {
  CheckData data;
  const double qtol = std::min(1e-11, 1e-3 * tol);
  auto g = [](double y) { return Xi(y) / (y * y + 0.25); };
  const auto envelope = DecayCertificate::exponential(kXiBound * 5.0, kPi / 4.0, 0.0);
  std::map<ThetaConvention, std::vector<Sample>> by_conv;
  std::map<ThetaConvention, double> worst;
  for (const auto& pt : grid) {
    const double x = param(pt, "x");
    const RealQuad lhs = integrate_oscillatory_cos(g, x, envelope, QuadOptions::absolute(qtol));
    require_converged(lhs, "eq_1_1 LHS oscillatory integral at x=" + format_number(x));
    for (ThetaConvention c : {ThetaConvention::plain, ThetaConvention::pi}) {
      const double psi = theta_psi(std::exp(-2.0 * x), c).value;
      const double rhs = 0.5 * kPi * (std::exp(0.5 * x) - 2.0 * std::exp(-0.5 * x) * psi);
      ParamPoint p = pt;
      p.emplace_back("convention", std::string(convention_name(c)));
      by_conv[c].push_back(make_sample(p, lhs.value, rhs));
      const double rel = std::fabs(lhs.value - rhs) / std::fabs(rhs);
      worst[c] = std::max(worst[c], rel);
    }
  }
  const bool plain_ok = worst[ThetaConvention::plain] <= tol;
  const bool pi_ok = worst[ThetaConvention::pi] <= tol;
  const ThetaConvention shown = worst[ThetaConvention::pi] <= worst[ThetaConvention::plain] ? ThetaConvention::pi
                                                                                            : ThetaConvention::plain;
  data.samples = by_conv[shown];
  data.conditions.push_back({"exactly one theta convention verifies the identity",
                             static_cast<double>(plain_ok) + static_cast<double>(pi_ok), 1.0, plain_ok != pi_ok});
  data.notes.push_back("max rel_diff plain=" + format_number(worst[ThetaConvention::plain]) +
                       " pi=" + format_number(worst[ThetaConvention::pi]));
  data.notes.push_back(std::string("winning convention: ") +
                       (plain_ok != pi_ok ? convention_name(pi_ok ? ThetaConvention::pi : ThetaConvention::plain) : "none"));
  if (!plain_ok && pi_ok) {
    data.errata.push_back({"eq_1_1", "theta function in the identity must be Σ exp(-π n² y), not Σ exp(-n² y)",
                           "psi(y) = sum exp(-n^2 y)", "psi(y) = sum exp(-pi n^2 y); max rel_diff " +
                                                           format_number(worst[ThetaConvention::pi])});
  }
  return data;
}

CheckData check_thm_1_1(const Grid& grid, double tol) {
  CheckData data;
  data.printed_description = "the printed statement has no constant between the Ξ² integral and e^{-x/2}√t∫H₁H₁";
  const double qtol = std::min(1e-11, 1e-4 * tol);
  struct Key {
    double r, t, imag, x;
  };
  std::vector<std::pair<Key, Complex>> rhs_values;
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    const Complex w = kummer_w(p);
    // LHS: Ξ² |₁F₁|² cos(xy) / (y² + ¼)².
    auto g = [w](double y) {
      const double xi = Xi(y);
      const Complex k = kummer_1f1({Complex(0.25, 0.5 * y), w});
      const double d = y * y + 0.25;
      return xi * xi * std::norm(k) / (d * d);
    };
    const auto envelope = DecayCertificate::exponential(
        25.0 * kXiBound * kXiBound * std::exp(kummer_sq_log_bound(w.real())), kPi / 2.0 - 0.1, 0.0);
    const RealQuad lhs = integrate_oscillatory_cos(g, p.x, envelope, QuadOptions::absolute(qtol));
    require_converged(lhs, "thm_1_1 LHS at x=" + format_number(p.x));

    // RHS: e^{-x/2} √t ∫ H₁(y e^{-x}) H₁(y) dy; beyond Y both factors are
    // exactly −c₀/y, so the tail is c₀² e^{x} / Y.
    const double c0 = h1_residue_constant(p.r, p.t);
    const double shrink = std::exp(-p.x);
    auto f = [&p, shrink](double y) { return h1(y * shrink, p).value * h1(y, p).value; };
    const double y_cut = h1_pure_tail_start(p) * std::exp(std::max(p.x, 0.0));
    const auto tail = DecayCertificate::analytic_tail(
        y_cut, [c0, x = p.x](double y) { return Complex(c0 * c0 * std::exp(x) / y, 0.0); }, 1e-18);
    const RealQuad prod = integrate_semi_infinite(f, 0.0, tail, QuadOptions::absolute(qtol));
    require_converged(prod, "thm_1_1 RHS ∫H₁H₁ at x=" + format_number(p.x));
    const double rhs = std::exp(-0.5 * p.x) * std::sqrt(p.t) * prod.value;
    data.samples.push_back(make_sample(pt, lhs.value, rhs));
    rhs_values.push_back({{p.r.magnitude(), p.t, p.r.is_imaginary() ? 1.0 : 0.0, p.x}, rhs});
  }
  // Evenness in x of the RHS (the LHS is even by construction).
  double worst_even = 0.0;
  int pairs = 0;
  for (const auto& [k, v] : rhs_values) {
    if (k.x <= 0.0) continue;
    for (const auto& [k2, v2] : rhs_values) {
      if (k2.x == -k.x && k2.r == k.r && k2.t == k.t && k2.imag == k.imag) {
        worst_even = std::max(worst_even, std::abs(v - v2) / std::abs(v));
        ++pairs;
      }
    }
  }
  data.conditions.push_back({"RHS(x) = RHS(-x) over " + std::to_string(pairs) + " pairs", worst_even, 1e-6,
                             worst_even <= 1e-6});
  return data;
}

// H₁(x) against e^{-r²/4t} ∫₁^∞ M(y) / sqrt(t (xy)² − π²) dy (as printed) and
// 2 e^{-r²/4t} ∫_{π/(x√t)}^∞ (same integrand).
Thm12Sides theorem_1_2_sides(const PhysParams& p, double qtol) {
  const double a = p.x * std::sqrt(p.t);
  if (!(a > kPi * (1.0 + 1e-6))) {
    throw DomainError("thm_1_2: need x sqrt(t) > pi so the kernel is nonsingular on [1, inf)");
  }
  const MuntzTransform m = muntz_g1(p.r, p.t, 1e-14);
  const double integral = m.integral();
  auto kernel = [&m, a](double y) {
    const double q = a * a * y * y - kPi * kPi;
    return m(y) / std::sqrt(q);
  };
  // Beyond Y the lattice part of M is below e^{-46}: M(y) = −I / y, and
  // ∫_Y^∞ dy / (y sqrt(a²y² − π²)) = arcsin(π / (aY)) / π.
  const double g = p.r.is_imaginary() ? 0.0 : p.r.magnitude() / std::sqrt(p.t);
  const double y_cut = std::max(2.0, (g + std::sqrt(g * g + 200.0)) / 2.0);
  const auto tail = DecayCertificate::analytic_tail(
      y_cut, [integral, a](double y) { return Complex(-integral * std::asin(kPi / (a * y)) / kPi, 0.0); }, 1e-18);
  const double prefactor = std::exp(-p.r.squared() / (4.0 * p.t));

  const RealQuad printed = integrate_semi_infinite(kernel, 1.0, tail, QuadOptions::absolute(qtol));
  require_converged(printed, "thm_1_2 RHS integral from 1");
  QuadOptions sing = QuadOptions::absolute(qtol);
  sing.singularity = EndpointSingularity::left_sqrt;
  const double lambda = kPi / a;
  const RealQuad corrected = integrate_semi_infinite(kernel, lambda, tail, sing);
  require_converged(corrected, "thm_1_2 RHS integral from pi/(x sqrt t)");
  return {h1(p.x, p).value, prefactor * printed.value, 2.0 * prefactor * corrected.value};
}

CheckData check_thm_1_2(const Grid& grid, double tol) {
  CheckData data;
  data.printed_description = "the printed statement is an equality";
  const double qtol = std::min(1e-12, 1e-4 * tol);
  double worst_corrected = 0.0;
  bool real_mode = false;
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    real_mode = real_mode || !p.r.is_imaginary();
    const Thm12Sides s = theorem_1_2_sides(p, qtol);
    data.samples.push_back(make_sample(pt, s.lhs, s.printed));
    worst_corrected = std::max(worst_corrected, std::fabs(s.lhs - s.corrected) / std::fabs(s.lhs));
  }
  data.notes.push_back("H1 vs 2 e^{-r^2/4t} * integral from pi/(x sqrt t): max rel_diff " +
                       format_number(worst_corrected));
  if (real_mode) data.notes.push_back("real-r mode: the I0 branch, outside |arg(-r^2/t)| < pi/2");
  data.errata.push_back({"thm_1_2",
                         "the y-integral needs factor 2 and lower limit pi/(x sqrt t) to reproduce H1(x)",
                         "e^{-r^2/4t} int_1^inf M(y) (t(yx)^2-pi^2)^{-1/2} dy",
                         "2 e^{-r^2/4t} int_{pi/(x sqrt t)}^inf ...: max rel_diff " + format_number(worst_corrected)});
  return data;
}

CheckData check_thm_1_2_r0(const Grid& grid, double /*tol*/) {
  CheckData data;
  double worst_corrected = 0.0;
  for (const auto& pt : grid) {
    ParamPoint q = pt;
    PhysParams p = phys_of(q);
    if (p.r.magnitude() != 0.0) throw DomainError("thm_1_2_r0: r must be 0");
    const double a = p.x * std::sqrt(p.t);
    if (!(a > kPi * (1.0 + 1e-6))) throw DomainError("thm_1_2_r0: need x sqrt(t) > pi");
    const double lambda = kPi / a;
    // With G₁(z) = z e^{-z²}: ∫_L^∞ n y e^{-n²y²} / sqrt(a²y² − π²) dy
    //   = (√π / 2a) e^{-n²λ²} erfc(n sqrt(a²L² − π²) / a).
    double printed = 0.0;
    double corrected = 0.0;
    for (int n = 1; n < 1000; ++n) {
      const double dn = n;
      const double gauss = std::exp(-dn * dn * lambda * lambda);
      const double term = std::sqrt(kPi) / (2.0 * a) * gauss * std::erfc(dn * std::sqrt(1.0 - lambda * lambda));
      printed += term;
      corrected += std::sqrt(kPi) / (2.0 * a) * gauss;
      if (gauss < 1e-20) break;
    }
    // −(1/2y) part: ∫_L^∞ dy / (2y sqrt(a²y² − π²)) = arcsin(π/(aL)) / (2π).
    printed -= std::asin(lambda) / (2.0 * kPi);
    corrected = 2.0 * (corrected - 0.25);
    const double lhs = h1(p.x, p).value;
    data.samples.push_back(make_sample(pt, lhs, printed));
    worst_corrected = std::max(worst_corrected, std::fabs(lhs - corrected) / std::fabs(lhs));
  }
  data.notes.push_back("corrected form (factor 2, lower limit pi/(x sqrt t)) max rel_diff " +
                       format_number(worst_corrected) + "; it is the theta functional equation");
  data.errata.push_back({"thm_1_2_r0", "at r=0 the printed right side does not reduce to the theta functional equation",
                         "int_1^inf, factor 1", "factor 2, lower limit pi/(x sqrt t): max rel_diff " +
                                                    format_number(worst_corrected)});
  return data;
}

CheckData check_thm_1_3(const Grid& grid, double tol) {
  CheckData data;
  data.printed_description = "the printed statement has no constant";
  const double qtol = std::min(1e-11, 1e-4 * tol);
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    const double w = -p.r.squared() / (4.0 * p.t);
    auto g = [&p](double y) { return Xi(y) / (y * y + 0.25) * f_plus(Complex(0.5, y), p).real(); };
    const double bound = 5.0 * kXiBound * 2.0 * std::exp(0.5 * std::fabs(p.x) + 0.5 * kummer_sq_log_bound(w));
    const auto envelope = DecayCertificate::exponential(bound, kPi / 4.0 - 0.05, 2.0);
    const RealQuad lhs = integrate_semi_infinite(g, 0.0, envelope, QuadOptions::absolute(qtol));
    require_converged(lhs, "thm_1_3 LHS at x=" + format_number(p.x));
    const double rhs = h1(std::exp(-p.x), p).value;
    data.samples.push_back(make_sample(pt, lhs.value, rhs));
  }
  return data;
}

}  // namespace besselxi::verify::detail
