#include <array>
#include <cmath>

#include "besselxi/complexfn.hpp"

namespace besselxi {

namespace {

// Godfrey's Lanczos coefficients for g = 607/128, n = 15. Relative error of
// the resulting Γ is below 1e-15 on the right half-plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,      57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,       -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,    -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,   .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,    -.26190838401581408670e-4,  .36899182659531622704e-5};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex log_gamma_right(Complex z) {
  const Complex zm1 = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (zm1 + static_cast<double>(k));
  const Complex base = zm1 + kLanczosG + 0.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(base) - base + std::log(series);
}

}  // namespace

Complex sin_pi(Complex z) {
  const double n = std::nearbyint(z.real());
  const double frac = z.real() - n;
  const Complex reduced = std::sin(kPi * Complex(frac, z.imag()));
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -reduced : reduced;
}

Complex log_gamma(Complex z) {
  if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: Γ(z) Γ(1 − z) = π / sin(πz).
  return std::log(kPi) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

Complex complex_gamma(Complex z) {
  const Complex lg = log_gamma(z);
  if (lg.real() > 709.78) throw OverflowError("complex_gamma: |Γ(z)| exceeds binary64 range");
  return require_finite(std::exp(lg), "complex_gamma");
}

}  // namespace besselxi
