#include <algorithm>
#include <cmath>
#include <vector>

#include "besselxi/quadrature.hpp"

namespace besselxi {

ComplexQuad mellin_forward(const RealFn& f, Complex s, const DecayCertificate& decay,
                           const MellinOptions& opt) {
  if (!is_finite(s)) throw DomainError("mellin_forward: non-finite s");
  const double lambda0 = s.real() + opt.order_at_zero;
  if (!(lambda0 > 0.0)) throw DomainError("mellin_forward: strip violation at 0 (Re s + order <= 0)");

  QuadOptions q;
  q.abs_tol = 0.5 * opt.abs_tol;
  q.rel_tol = opt.rel_tol;

  // (0, 1] through y = e^{-v}: ∫₀^∞ f(e^{-v}) e^{-sv} dv, which decays like
  // e^{-(Re s + α) v}.
  auto head_fn = [&f, s](double v) -> Complex {
    const double y = std::exp(-v);
    if (y == 0.0) return Complex(0.0, 0.0);
    return f(y) * std::exp(-s * v);
  };
  const auto head_decay = DecayCertificate::exponential(std::max(opt.bound_at_zero, 1e-300), lambda0);
  ComplexQuad head = integrate_semi_infinite_complex(ComplexFn(head_fn), 0.0, head_decay, q);

  // [1, ∞) with the certificate shifted by y^{Re s - 1}.
  const DecayCertificate tail_decay = decay.times_power(s.real() - 1.0);
  auto tail_fn = [&f, s](double y) -> Complex { return f(y) * std::pow(y, s - 1.0); };
  ComplexQuad tail = integrate_semi_infinite_complex(ComplexFn(tail_fn), 1.0, tail_decay, q);

  ComplexQuad out;
  out.value = head.value + tail.value;
  out.err_estimate = head.err_estimate + tail.err_estimate;
  out.evals = head.evals + tail.evals;
  out.converged = head.converged && tail.converged;
  return out;
}

void ContourSpec::validate() const {
  if (!std::isfinite(c)) throw DomainError("ContourSpec: c must be finite");
  if (kind == ContourDecay::algebraic) return;
  if (!(T > 0.0) || !(h > 0.0)) throw DomainError("ContourSpec: T and h must be positive");
  if (h > T / 10.0) throw DomainError("ContourSpec: h must not exceed T/10");
  if (!(decay_rate > 0.0)) throw DomainError("ContourSpec: decay_rate must be positive");
}

ContourSpec ContourSpec::for_tolerance(double c, double y, double tol, double decay_rate) {
  if (!(y > 0.0) || !(tol > 0.0) || !(tol < 1.0)) throw DomainError("ContourSpec::for_tolerance: bad y or tol");
  ContourSpec spec;
  spec.c = c;
  spec.decay_rate = decay_rate;
  spec.h = std::min(0.05, kPi / (4.0 * std::fabs(std::log(tol)) * std::max(1.0, std::fabs(std::log(y)))));
  // First guess from e^{-κT} = tol; the caller's tol check extends it.
  spec.T = std::max(10.0 * spec.h, std::fabs(std::log(tol)) / decay_rate);
  return spec;
}

namespace {

// (1/2π) ∫_{-T}^{T} F(c+iτ) y^{-c-iτ} dτ by the trapezoid rule; also the
// sum over every other node (spacing 2h) for an error estimate.
struct TrapezoidSums {
  Complex fine;
  Complex coarse;
  double edge = 0.0;  // max |integrand| at ±T
  long evals = 0;
};

TrapezoidSums trapezoid(const SPlaneFn& fhat, double c, double T, double h, double y) {
  const long n = static_cast<long>(std::ceil(T / h));
  const double step = T / static_cast<double>(n);
  const double log_y = std::log(y);
  auto g = [&](double tau) {
    const Complex s(c, tau);
    return fhat(s) * std::exp(-s * log_y);
  };
  TrapezoidSums out;
  // Nodes are visited in a fixed order for reproducibility.
  Complex fine(0.0, 0.0);
  Complex coarse(0.0, 0.0);
  for (long k = -n; k <= n; ++k) {
    const Complex v = g(static_cast<double>(k) * step);
    const double w = (k == -n || k == n) ? 0.5 : 1.0;
    fine += w * v;
    if (k % 2 == 0) coarse += ((k == -n || k == n) ? 0.5 : 1.0) * v;
    if (k == -n || k == n) out.edge = std::max(out.edge, std::abs(v));
  }
  out.fine = fine * step / (2.0 * kPi);
  out.coarse = coarse * (2.0 * step) / (2.0 * kPi);
  out.evals = 2 * n + 1;
  return out;
}

ComplexQuad contour_algebraic(const SPlaneFn& fhat, const ContourSpec& spec, double y, double tol) {
  // Fold ±τ onto [0, ∞) and sum half-period panels of y^{-iτ} with Wynn.
  const double log_y = std::log(y);
  const double c = spec.c;
  auto g = [&](double tau) -> Complex {
    const Complex up(c, tau);
    const Complex down(c, -tau);
    return (fhat(up) * std::exp(-up * log_y) + fhat(down) * std::exp(-down * log_y)) / (2.0 * kPi);
  };
  const double panel = std::fabs(log_y) > 1e-12 ? kPi / std::fabs(log_y) : 10.0;
  QuadOptions q;
  q.abs_tol = std::max(1e-3 * tol, 1e-300);
  ComplexQuad out;
  std::vector<Complex> partial;
  Complex running(0.0, 0.0);
  double a = 0.0;
  double last_err = 1e300;
  for (int k = 0; k < 1000; ++k) {
    const double b = a + panel;
    ComplexQuad piece = integrate_finite_complex(ComplexFn(g), a, b, q);
    out.evals += piece.evals;
    out.err_estimate += piece.err_estimate;
    running += piece.value;
    partial.push_back(running);
    a = b;
    if (partial.size() >= 10 && partial.size() % 2 == 0) {
      const Extrapolated ex = wynn_epsilon(partial);
      out.value = ex.value;
      last_err = ex.error;
      if (ex.error <= 0.1 * tol) break;
    }
  }
  out.err_estimate += last_err;
  out.converged = out.err_estimate <= tol;
  return out;
}

}  // namespace

ComplexQuad mellin_inverse_contour(const SPlaneFn& fhat, const ContourSpec& spec, double y, double tol) {
  spec.validate();
  if (!(y > 0.0)) throw DomainError("mellin_inverse_contour: y must be positive");
  if (spec.kind == ContourDecay::algebraic) {
    if (!(tol > 0.0)) throw DomainError("mellin_inverse_contour: algebraic mode needs tol > 0");
    return contour_algebraic(fhat, spec, y, tol);
  }
  double T = spec.T;
  ComplexQuad out;
  for (;;) {
    const TrapezoidSums sums = trapezoid(fhat, spec.c, T, spec.h, y);
    out.evals += sums.evals;
    // Tail beyond ±T assuming e^{-κ|τ|} decay from the edge values.
    const double tail = 2.0 * sums.edge / (2.0 * kPi * spec.decay_rate);
    const double discretisation = std::abs(sums.fine - sums.coarse);
    out.value = sums.fine;
    out.err_estimate = tail + discretisation;
    if (tol <= 0.0 || tail <= 0.1 * tol || T >= 4096.0) {
      out.converged = tol <= 0.0 ? tail <= 1e-12 * std::max(1.0, std::abs(out.value))
                                 : out.err_estimate <= tol;
      return out;
    }
    T *= 2.0;
  }
}

}  // namespace besselxi
