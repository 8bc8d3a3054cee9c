#include <cmath>

#include "besselxi/series.hpp"

namespace besselxi {

namespace {

// Bound on |H₁(y) + ½| from the Poisson-dual representation
// H₁(y) = −½ + (1/(2y√(πt))) Σ_{m≠0} ∫₀^π exp(−(2πm + r y cos θ)² / (4t y²)) dθ.
double dual_bound(double y, const BesselScale& r, double t) {
  const double rho = r.magnitude();
  double sum = 0.0;
  for (int m = 1; m < 50; ++m) {
    const double tm = 2.0 * kPi * m;
    double e;
    if (r.is_imaginary()) {
      e = (tm * tm - rho * rho * y * y) / (4.0 * t * y * y);
    } else {
      const double gap = tm - rho * y;
      if (gap <= 0.0) return 1e300;
      e = gap * gap / (4.0 * t * y * y);
    }
    if (e <= 0.0) return 1e300;
    const double term = std::exp(-e);
    sum += term;
    if (term < 1e-30 * sum) break;
  }
  return std::sqrt(kPi) / (y * std::sqrt(t)) * sum;
}

}  // namespace

double h1_residue_constant(const BesselScale& r, double t) {
  if (!(t > 0.0)) throw DomainError("h1_residue_constant: t must be positive");
  const Complex w(-r.squared() / (4.0 * t), 0.0);
  return std::sqrt(kPi) / (2.0 * std::sqrt(t)) * kummer_1f1({{0.5, 0.0}, w}).real();
}

SeriesValue h1(double y, const PhysParams& p) {
  p.validate();
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("h1: y must be positive and finite");
  const double bound = dual_bound(y, p.r, p.t);
  if (bound <= 1e-17) return {-0.5, 0, bound};

  // Direct sum: |J₀(r n y)| <= e^{g n y}; stop once t n² y² − g n y >= 42.
  const double a = p.t * y * y;
  const double g = p.r.growth_rate() * y;
  const double n_real = (g + std::sqrt(g * g + 4.0 * a * 42.0)) / (2.0 * a);
  const long n = static_cast<long>(std::ceil(n_real)) + 5;
  double sum = 0.0;
  for (long k = n; k >= 1; --k) {
    const double dk = static_cast<double>(k);
    sum += std::exp(-a * dk * dk) * p.r.j0(dk * y);
  }
  const double next = static_cast<double>(n + 1);
  const double ratio = std::exp(-a * (2.0 * next + 1.0) + g);
  const double tail = std::exp(-a * next * next + g * next) / (1.0 - ratio);
  const double value = sum - h1_residue_constant(p.r, p.t) / y;
  return {value, static_cast<int>(n), tail};
}

}  // namespace besselxi
