#include <algorithm>
#include <cmath>
#include <vector>

#include "besselxi/quadrature.hpp"

namespace besselxi {

Extrapolated wynn_epsilon(const std::vector<Complex>& s) {
  const std::size_t n = s.size();
  if (n == 0) throw DomainError("wynn_epsilon: empty sequence");
  if (n < 3) {
    const double err = n == 2 ? std::abs(s[1] - s[0]) : std::abs(s[0]);
    return {s.back(), err};
  }
  // eps[k][j]: column k of the epsilon table built on s[j..j+k].
  std::vector<std::vector<Complex>> eps(n + 1);
  eps[0].assign(n + 1, Complex(0.0, 0.0));  // ε_{-1} = 0
  eps[1] = s;                               // ε_0 = partial sums
  Complex best = s.back();
  double best_err = std::abs(s[n - 1] - s[n - 2]);
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t len = n - k + 1;
    eps[k].resize(len);
    bool broken = false;
    for (std::size_t j = 0; j < len; ++j) {
      const Complex diff = eps[k - 1][j + 1] - eps[k - 1][j];
      if (std::abs(diff) == 0.0) {
        broken = true;
        break;
      }
      eps[k][j] = eps[k - 2][j + 1] + 1.0 / diff;
    }
    if (broken) break;
    // Even columns (k odd in this indexing) hold the extrapolants.
    if (k % 2 == 1 && len >= 2) {
      const double err = std::abs(eps[k][len - 1] - eps[k][len - 2]);
      if (err < best_err) {
        best_err = err;
        best = eps[k][len - 1];
      }
    }
  }
  return {best, best_err};
}

RealQuad integrate_oscillatory_cos(const RealFn& g, double x, const DecayCertificate& envelope,
                                   const QuadOptions& opt) {
  x = std::fabs(x);  // cos is even
  if (x == 0.0) return integrate_semi_infinite(g, 0.0, envelope, opt);
  const double half_period = kPi / x;
  auto integrand = [&g, x](double y) { return g(y) * std::cos(x * y); };

  if (envelope.kind() != DecayCertificate::Kind::algebraic) {
    const double y_cut = envelope.cutoff(0.0, std::max(opt.abs_tol, 1e-300));
    QuadOptions inner = opt;
    inner.abs_tol = 0.5 * opt.abs_tol;
    // Zeros of cos(xy): (k + ½) π / x.
    for (double z = 0.5 * half_period; z < y_cut; z += half_period) inner.breakpoints.push_back(z);
    if (inner.breakpoints.size() > 20000) throw DomainError("integrate_oscillatory_cos: too many half periods");
    RealQuad body = integrate_finite(integrand, 0.0, y_cut, inner);
    if (envelope.kind() == DecayCertificate::Kind::analytic_tail) body.value += envelope.tail_value(y_cut).real();
    body.err_estimate += envelope.tail_bound(y_cut);
    body.converged = body.converged && body.err_estimate <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(body.value));
    return body;
  }

  // Algebraic envelope: alternating half-period panel sums, accelerated.
  RealQuad out;
  std::vector<Complex> partial;
  double running = 0.0;
  double a = 0.0;
  double b = 0.5 * half_period;
  QuadOptions panel = opt;
  panel.abs_tol = 1e-3 * opt.abs_tol;
  panel.breakpoints.clear();
  double last_err = 1e300;
  for (int k = 0; k < 400; ++k) {
    const RealQuad piece = integrate_finite(integrand, a, b, panel);
    out.evals += piece.evals;
    out.err_estimate += piece.err_estimate;
    running += piece.value;
    partial.push_back(Complex(running, 0.0));
    a = b;
    b += half_period;
    if (partial.size() >= 8 && partial.size() % 2 == 0) {
      const Extrapolated ex = wynn_epsilon(partial);
      out.value = ex.value.real();
      last_err = ex.error;
      if (ex.error <= 0.1 * std::max(opt.abs_tol, opt.rel_tol * std::fabs(out.value))) break;
    }
  }
  out.err_estimate += last_err;
  out.converged = out.err_estimate <= std::max(opt.abs_tol, opt.rel_tol * std::fabs(out.value));
  return out;
}

}  // namespace besselxi
