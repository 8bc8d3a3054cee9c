#include <algorithm>
#include <cmath>

#include "besselxi/complexfn.hpp"
#include "checks.hpp"

namespace besselxi::verify::detail {

namespace {

Complex cgamma(Complex z) { return std::exp(log_gamma(z)); }

// K(s) = ₁F₁(s/2; 1; −r²/4t).
Complex kummer_k(Complex s, const PhysParams& p) {
  return kummer_1f1({0.5 * s, Complex(-p.r.squared() / (4.0 * p.t), 0.0)});
}

// Mellin transform of y ↦ e^{-t y²} J₀(r y) summed over the lattice:
// Γ(s/2) ζ(s) K(s) / (2 t^{s/2}).
Complex lattice_kernel(Complex s, const PhysParams& p) {
  return cgamma(0.5 * s) * zeta(s) * kummer_k(s, p) / (2.0 * std::pow(p.t, 0.5 * s));
}

double lattice_sum(double y, const PhysParams& p) {
  const double g = p.r.growth_rate();
  double sum = 0.0;
  for (int n = 1;; ++n) {
    const double ny = n * y;
    const double log_env = -p.t * ny * ny + g * ny;
    if (log_env < -46.0 && 2.0 * p.t * ny > g) break;
    sum += std::exp(-p.t * ny * ny) * p.r.j0(ny);
  }
  return sum;
}

ComplexQuad contour(const SPlaneFn& f, double c, double y, double tol, double decay_rate, const std::string& what) {
  const ContourSpec spec = ContourSpec::for_tolerance(c, y, tol, decay_rate);
  const ComplexQuad q = mellin_inverse_contour(f, spec, y, tol);
  return require_converged(q, what);
}

Sample make_sample(ParamPoint params, Complex lhs, Complex rhs, double scale = 0.0) {
  return Sample{std::move(params), lhs, rhs, scale};
}

}  // namespace

CheckData check_parseval(const Grid& grid, double tol) {
  CheckData data;
  const double qtol = std::min(1e-12, 1e-3 * tol);
  for (const auto& pt : grid) {
    const int pair = static_cast<int>(param(pt, "pair"));
    if (pair == 1) {
      // f = g = e^{-y}: F(s) G(1-s) = Γ(s) Γ(1-s).
      const RealQuad lhs = integrate_semi_infinite([](double y) { return std::exp(-2.0 * y); }, 0.0,
                                                   DecayCertificate::exponential(1.0, 2.0), QuadOptions::absolute(qtol));
      require_converged(lhs, "parseval pair 1 product integral");
      const ComplexQuad rhs =
          contour([](Complex s) { return cgamma(s) * cgamma(1.0 - s); }, 0.5, 1.0, qtol, kPi, "parseval pair 1 contour");
      data.samples.push_back(make_sample(pt, lhs.value, rhs.value));
    } else if (pair == 2) {
      // f = e^{-y²}, g = e^{-4y²}: F(s) = Γ(s/2)/2, G(s) = Γ(s/2) 2^{-s}/2.
      const RealQuad lhs = integrate_semi_infinite([](double y) { return std::exp(-5.0 * y * y); }, 0.0,
                                                   DecayCertificate::gaussian(1.0, 5.0), QuadOptions::absolute(qtol));
      require_converged(lhs, "parseval pair 2 product integral");
      auto fg = [](Complex s) {
        return 0.25 * cgamma(0.5 * s) * cgamma(0.5 * (1.0 - s)) * std::pow(2.0, s - 1.0);
      };
      const ComplexQuad rhs = contour(fg, 0.5, 1.0, qtol, kPi / 2.0, "parseval pair 2 contour");
      data.samples.push_back(make_sample(pt, lhs.value, rhs.value));
    } else {
      throw DomainError("parseval: pair must be 1 or 2");
    }
  }
  return data;
}

CheckData check_mellin_3_3(const Grid& grid, double tol) {
  CheckData data;
  data.complex_valued = true;
  double printed_ratio = 1.0;
  for (const auto& pt : grid) {
    const double v = param(pt, "v");
    const Complex s(param(pt, "s_re"), find_param(pt, "s_im").value_or(0.0));
    const double r = param(pt, "r");
    const double t = param(pt, "t");
    if (v != 0.0 && v != 1.0) throw DomainError("mellin_3_3: v must be 0 or 1");
    const BesselOrder order = v == 0.0 ? BesselOrder::zero : BesselOrder::one;
    auto f = [order, r, t](double y) { return std::exp(-t * y * y) * bessel_j(order, r * y); };
    MellinOptions opt;
    opt.abs_tol = std::min(1e-13, 1e-4 * tol);
    opt.order_at_zero = v;
    opt.bound_at_zero = std::pow(0.5 * r, v);
    const ComplexQuad lhs = mellin_forward(f, s, DecayCertificate::gaussian(1.0, t), opt);
    require_converged(lhs, "mellin_3_3 forward transform");
    const Complex a = 0.5 * (v + s);
    const Complex rhs = std::pow(0.5 * r, v) * cgamma(a) / (2.0 * std::pow(t, a) * std::tgamma(v + 1.0)) *
                        kummer_1f1_general(a, v + 1.0, Complex(-r * r / (4.0 * t), 0.0));
    data.samples.push_back(make_sample(pt, lhs.value, rhs));
    if (v != 0.0) printed_ratio = std::abs(std::pow(r, v) / std::pow(0.5 * r, v));
  }
  if (printed_ratio != 1.0) {
    data.errata.push_back({"mellin_3_3", "closed form needs (r/2)^v, not r^v; identical only at v = 0",
                           "r^v Gamma((v+s)/2) / (2 t^{(s+v)/2} Gamma(v+1)) 1F1(...)",
                           "(r/2)^v Gamma((v+s)/2) / (2 t^{(s+v)/2} Gamma(v+1)) 1F1(...); printed/true = " +
                               format_number(printed_ratio)});
  }
  return data;
}

CheckData check_residue_3_5(const Grid& grid, double tol) {
  CheckData data;
  const double qtol = std::min(1e-12, 1e-4 * tol);
  double worst_margin = 1e300;
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    const double y = param(pt, "y");
    // Moving the line from Re s = 3/2 to 1/2 picks up the residue c/y at s = 1.
    const ComplexQuad line =
        contour([&p](Complex s) { return lattice_kernel(s, p); }, 0.5, y, qtol, kPi / 4.0, "residue_3_5 contour");
    const double measured = y * (lattice_sum(y, p) - line.value.real());
    const double k_half = kummer_k(Complex(1.0, 0.0), p).real();
    const double derived = std::sqrt(kPi) / (2.0 * std::sqrt(p.t)) * k_half;
    const double printed = 2.0 * std::sqrt(p.t * kPi) * k_half;
    data.samples.push_back(make_sample(pt, measured, derived));
    worst_margin = std::min(worst_margin, std::fabs(measured - printed) / std::fabs(printed));
  }
  data.conditions.push_back({"printed constant 2 sqrt(t pi) rejected with margin >= 1e3 tol", worst_margin, 1e3 * tol,
                             worst_margin >= 1e3 * tol});
  data.errata.push_back({"residue_3_5", "constant of the subtracted 1/y term in H1 is off by a factor 4t",
                         "2 sqrt(t pi) 1F1(1/2;1;-r^2/4t) / y",
                         "sqrt(pi) / (2 sqrt t) 1F1(1/2;1;-r^2/4t) / y; printed form rejected by rel margin " +
                             format_number(worst_margin)});
  return data;
}

CheckData check_contour_3_6(const Grid& grid, double tol) {
  CheckData data;
  data.printed_description = "the printed line integral has no constant in front";
  const double qtol = std::min(1e-11, 1e-4 * tol);
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    // √t ∫ H₁(y e^{-x}) H₁(y) dy with the exact −c₀/y tail.
    const double c0 = h1_residue_constant(p.r, p.t);
    const double shrink = std::exp(-p.x);
    const double g = p.r.growth_rate();
    const double y_cut = (g + std::sqrt(g * g + 180.0 * p.t)) / (2.0 * p.t) * std::exp(std::max(p.x, 0.0));
    const auto tail = DecayCertificate::analytic_tail(
        y_cut, [c0, x = p.x](double y) { return Complex(c0 * c0 * std::exp(x) / y, 0.0); }, 1e-18);
    const RealQuad prod = integrate_semi_infinite(
        [&p, shrink](double y) { return h1(y * shrink, p).value * h1(y, p).value; }, 0.0, tail,
        QuadOptions::absolute(qtol));
    require_converged(prod, "contour_3_6 product integral");
    const double lhs = std::sqrt(p.t) * prod.value;

    // Γ(s/2)² K(s) K(1−s) ζ(s)² π^{1/2−s} e^{xs}; the e^{xs} is the y^{-s} at y = e^{-x}.
    auto integrand = [&p](Complex s) {
      const Complex z = zeta(s);
      const Complex gm = cgamma(0.5 * s);
      return gm * gm * kummer_k(s, p) * kummer_k(1.0 - s, p) * z * z * std::pow(kPi, 0.5 - s);
    };
    const ComplexQuad rhs = contour(integrand, 0.5, shrink, qtol, kPi / 2.0 - 0.05, "contour_3_6 line integral");
    data.samples.push_back(make_sample(pt, lhs, rhs.value.real()));
  }
  return data;
}

CheckData check_reflect_3_7(const Grid& grid, double tol) {
  CheckData data;
  const double qtol = std::min(1e-12, 1e-4 * tol);
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    const double c = find_param(pt, "p").value_or(0.3);
    if (!(c > 0.0 && c < 1.0)) throw DomainError("reflect_3_7: need 0 < p < 1");
    const double x = p.x;
    if (!(x > 0.0)) throw DomainError("reflect_3_7: need x > 0");
    auto line2 = [&p](Complex s) { return lattice_kernel(s, p); };
    auto line3 = [&p](Complex s) { return lattice_kernel(1.0 - s, p); };
    auto line4 = [&p](Complex s) {
      return cgamma(0.5 * s) * kummer_k(1.0 - s, p) * zeta(s) * std::pow(kPi, -s) /
             (2.0 * std::pow(p.t, 0.5 * (1.0 - s)));
    };
    const Complex l2 = contour(line2, c, x, qtol, kPi / 4.0, "reflect_3_7 line 2").value;
    const Complex l3 = contour(line3, 1.0 - c, 1.0 / x, qtol, kPi / 4.0, "reflect_3_7 line 3").value / x;
    const Complex l4 =
        std::sqrt(kPi) / x * contour(line4, 1.0 - c, 1.0 / x, qtol, kPi / 4.0, "reflect_3_7 line 4").value;
    ParamPoint a = pt;
    a.emplace_back("lines", std::string("2-3"));
    data.samples.push_back(make_sample(a, l2.real(), l3.real()));
    ParamPoint b = pt;
    b.emplace_back("lines", std::string("3-4"));
    data.samples.push_back(make_sample(b, l3.real(), l4.real()));
  }
  return data;
}

CheckData check_beta_3_8(const Grid& grid, double tol) {
  CheckData data;
  const double qtol = std::min(1e-11, 1e-3 * tol);
  for (const auto& pt : grid) {
    const double a = param(pt, "a");
    const double c = find_param(pt, "c").value_or(1.0);
    const double y = param(pt, "y");
    if (!(a > -1.0)) throw DomainError("beta_3_8: need a > -1");
    ContourSpec spec;
    spec.c = c;
    spec.kind = ContourDecay::algebraic;
    auto fhat = [a](Complex s) { return std::exp(log_gamma(s) - log_gamma(s + a + 1.0)); };
    const ComplexQuad q = mellin_inverse_contour(fhat, spec, y, qtol);
    require_converged(q, "beta_3_8 contour at y=" + format_number(y));
    const double rhs = y < 1.0 ? std::pow(1.0 - y, a) / std::tgamma(a + 1.0) : 0.0;
    data.samples.push_back(make_sample(pt, q.value.real(), rhs, rhs == 0.0 ? 1.0 : 0.0));
  }
  return data;
}

CheckData check_kummer_3_9(const Grid& grid, double tol) {
  CheckData data;
  for (const auto& pt : grid) {
    const double s = param(pt, "s");
    const double x = param(pt, "x");
    auto f = [x](double y) { return std::exp(-y) * bessel_j(BesselOrder::zero, 2.0 * std::sqrt(x * y)); };
    MellinOptions opt;
    opt.abs_tol = std::min(1e-13, 1e-4 * tol);
    const double mu = 0.5 * (s + 1.0);  // y^{v} = y^{mu - 1}, v = (s − 1)/2
    const ComplexQuad lhs = mellin_forward(f, Complex(mu, 0.0), DecayCertificate::exponential(1.0, 1.0), opt);
    require_converged(lhs, "kummer_3_9 forward transform");
    const double rhs = std::tgamma(mu) * std::exp(-x) * kummer_1f1({Complex(1.0 - mu, 0.0), Complex(x, 0.0)}).real();
    data.samples.push_back(make_sample(pt, lhs.value.real(), rhs));
  }
  return data;
}

CheckData check_muntz_3_11(const Grid& grid, double tol) {
  CheckData data;
  const double qtol = std::min(1e-12, 1e-4 * tol);
  for (const auto& pt : grid) {
    const double s = param(pt, "s");
    const int kernel = static_cast<int>(param(pt, "kernel"));
    if (!(s > 0.0 && s < 1.0)) throw DomainError("muntz_3_11: need 0 < s < 1");
    const Complex zs = zeta(Complex(s, 0.0));
    if (kernel == 1) {
      MuntzTransform::Options opt;
      opt.value_at_zero = 1.0;
      opt.odd_taylor.assign(30, 0.0);
      const MuntzTransform m([](double y) { return std::exp(-y * y); }, DecayCertificate::gaussian(1.0, 1.0), opt);
      const ComplexQuad lhs = require_converged(m.mellin(Complex(s, 0.0), qtol), "muntz_3_11 kernel 1");
      data.samples.push_back(make_sample(pt, lhs.value.real(), zs.real() * 0.5 * std::tgamma(0.5 * s)));
    } else if (kernel == 2) {
      const PhysParams p = phys_of(pt);
      const MuntzTransform m = muntz_g1(p.r, p.t);
      const ComplexQuad lhs = require_converged(m.mellin(Complex(s, 0.0), qtol), "muntz_3_11 kernel 2");
      const Complex w(p.r.squared() / (4.0 * p.t), 0.0);
      const double rhs = zs.real() * 0.5 * std::tgamma(0.5 * (s + 1.0)) *
                         kummer_1f1({Complex(0.5 * (s + 1.0), 0.0), w}).real();
      data.samples.push_back(make_sample(pt, lhs.value.real(), rhs));
    } else {
      throw DomainError("muntz_3_11: kernel must be 1 or 2");
    }
  }
  return data;
}

CheckData check_chain_3_12(const Grid& grid, double tol) {
  CheckData data;
  data.printed_description = "the printed chain is an equality";
  const double qtol = std::min(1e-12, 1e-4 * tol);
  double worst_half = 0.0;
  for (const auto& pt : grid) {
    const PhysParams p = phys_of(pt);
    const double x = p.x;
    const double lhs = theorem_1_2_sides(p, qtol).printed;
    // Γ(s/2) e^{-r²/4t} / (2 Γ((s+1)/2) t^{(1−s)/2}) ζ(s) 𝔊₁(s) π^{-s} with
    // 𝔊₁(s) = ½ Γ((s+1)/2) ₁F₁((s+1)/2; 1; r²/4t); the Γ((s+1)/2) cancel.
    const double w = p.r.squared() / (4.0 * p.t);
    auto integrand = [&p, w](Complex s) {
      const Complex g1hat_over_gamma = 0.5 * kummer_1f1({0.5 * (s + 1.0), Complex(w, 0.0)});
      return cgamma(0.5 * s) * std::exp(-w) / (2.0 * std::pow(p.t, 0.5 * (1.0 - s))) * zeta(s) *
             g1hat_over_gamma * std::pow(kPi, -s);
    };
    const double rhs =
        std::sqrt(kPi) / x * contour(integrand, 0.5, 1.0 / x, qtol, kPi / 4.0, "chain_3_12 line integral").value.real();
    data.samples.push_back(make_sample(pt, lhs, rhs));
    const double h = h1(x, p).value;
    worst_half = std::max(worst_half, std::fabs(rhs - 0.5 * h) / std::fabs(0.5 * h));
  }
  data.notes.push_back("contour line equals H1(x)/2: max rel_diff " + format_number(worst_half));
  data.errata.push_back({"chain_3_12",
                         "the z = u^2 substitution drops a factor 2 and the final y-integral has the wrong lower limit",
                         "line equals H1(x); y-integral from 1",
                         "line equals H1(x)/2 (max rel_diff " + format_number(worst_half) +
                             "); y-integral needs lower limit pi/(x sqrt t)"});
  return data;
}

}  // namespace besselxi::verify::detail
