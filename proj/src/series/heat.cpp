#include <cmath>

#include "besselxi/series.hpp"

namespace besselxi {

namespace {

struct Truncation {
  long n;
  double tail;
};

// Σ_{n>N} e^{-n² a} with |factor| <= 1, N = ceil(sqrt(42/a)) + 5.
Truncation gaussian_truncation(double a) {
  const long n = static_cast<long>(std::ceil(std::sqrt(42.0 / a))) + 5;
  const double next = static_cast<double>(n + 1);
  const double tail = std::exp(-a * next * next) / (1.0 - std::exp(-a * (2.0 * next + 1.0)));
  return {n, tail};
}

}  // namespace

SeriesValue heat_u(double r, double t, double kappa) {
  if (!(t > 0.0)) throw DomainError("heat_u: t must be positive (use abel_limit for t = 0)");
  if (!(kappa > 0.0)) throw DomainError("heat_u: kappa must be positive");
  if (!std::isfinite(r)) throw DomainError("heat_u: r must be finite");
  const double a = kappa * t;
  const Truncation tr = gaussian_truncation(a);
  double sum = 0.0;
  for (long n = tr.n; n >= 1; --n) {  // smallest terms first
    const double dn = static_cast<double>(n);
    sum += bessel_j(BesselOrder::zero, dn * r) * std::exp(-dn * dn * a);
  }
  return {sum, static_cast<int>(tr.n), tr.tail};
}

SeriesValue heat_surrogate_scaled(double r, double t, double kappa) {
  if (!(t > 0.0) || !(kappa > 0.0)) throw DomainError("heat_surrogate_scaled: t, kappa must be positive");
  const double a = kappa * t;
  const Truncation tr = gaussian_truncation(a);
  double sum = 0.0;
  for (long n = tr.n; n >= 1; --n) {
    const double dn = static_cast<double>(n);
    sum += (std::cos(dn * r) + std::sin(dn * r)) / std::sqrt(dn) * std::exp(-dn * dn * a);
  }
  const double scale = 1.0 / std::sqrt(kPi);
  return {scale * sum, static_cast<int>(tr.n), scale * std::sqrt(2.0) * tr.tail};
}

}  // namespace besselxi
