#include <cmath>
#include <string>

#include "besselxi/complexfn.hpp"

namespace besselxi {

Complex xi_completed(Complex s) {
  if (!is_finite(s)) throw DomainError("xi_completed: non-finite argument");
  const Complex log_front = log_gamma(1.0 + 0.5 * s) - 0.5 * s * std::log(kPi);
  if (log_front.real() > 709.0) throw OverflowError("xi_completed: Γ factor overflows");
  return require_finite(std::exp(log_front) * zeta_times_sminus1(s), "xi_completed");
}

double Xi(double y) {
  if (!std::isfinite(y)) throw DomainError("Xi: non-finite argument");
  const Complex v = xi_completed(Complex(0.5, std::fabs(y)));
  if (std::fabs(v.imag()) > 1e-10 * (1.0 + std::fabs(v.real()))) {
    throw InvariantError("Xi: imaginary part " + std::to_string(v.imag()) + " on the critical line");
  }
  return v.real();
}

std::vector<ZeroBracket> scan_xi_zeros(double y_max, double step, double width_tol) {
  if (!(y_max > 0.0) || !(step > 0.0) || !(width_tol > 0.0)) {
    throw DomainError("scan_xi_zeros: y_max, step and width_tol must be positive");
  }
  std::vector<ZeroBracket> zeros;
  double a = 0.0;
  double fa = Xi(a);
  while (a < y_max) {
    const double b = std::min(a + step, y_max);
    const double fb = Xi(b);
    if ((fa < 0.0) != (fb < 0.0)) {
      ZeroBracket br{a, b};
      double f_lo = fa;
      while (br.upper - br.lower > width_tol) {
        const double m = br.mid();
        const double fm = Xi(m);
        if ((fm < 0.0) == (f_lo < 0.0)) {
          br.lower = m;
          f_lo = fm;
        } else {
          br.upper = m;
        }
      }
      zeros.push_back(br);
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

}  // namespace besselxi
