#include <cmath>

#include "besselxi/kernels.hpp"
#include "besselxi/series.hpp"

namespace besselxi {

namespace {
// e^{-42} ~ 5.7e-19: every truncation below keeps the first dropped
// Gaussian factor under this.
constexpr double kGaussExponent = 42.0;
constexpr std::int64_t kDirectLimit = 1'000'000;
}  // namespace

const char* convention_name(ThetaConvention c) { return c == ThetaConvention::pi ? "pi" : "plain"; }

void PhysParams::validate() const {
  if (!(t > 0.0)) throw DomainError("PhysParams: t must be positive");
  if (!(kappa > 0.0)) throw DomainError("PhysParams: kappa must be positive");
  if (!std::isfinite(x) || !std::isfinite(r.magnitude())) throw DomainError("PhysParams: non-finite x or r");
}

SeriesValue theta_psi(double y, ThetaConvention conv) {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("theta_psi: y must be positive and finite");
  const double c = conv == ThetaConvention::pi ? kPi * y : y;
  const auto n = static_cast<std::int64_t>(std::ceil(std::sqrt(kGaussExponent / c)));
  SeriesValue out;
  if (n <= kDirectLimit) {
    out.value = kernels::gaussian_sum(c, 1, n);
    out.terms_used = static_cast<int>(n);
    const double first = std::exp(-c * static_cast<double>(n + 1) * static_cast<double>(n + 1));
    out.tail_bound = first / (1.0 - std::exp(-c * static_cast<double>(2 * n + 3)));
    return out;
  }
  // Extremely small y: θ(c) = Σ_{n∈ℤ} e^{-cn²} = sqrt(π/c) θ(π²/c), so
  // ψ = ½ (sqrt(π/c) (1 + 2ψ(π²/c)) − 1) with ψ(π²/c) far below rounding.
  const double dual_c = kPi * kPi / c;
  const double dual = std::exp(-dual_c);
  out.value = 0.5 * (std::sqrt(kPi / c) * (1.0 + 2.0 * dual) - 1.0);
  out.terms_used = 1;
  out.tail_bound = std::sqrt(kPi / c) * std::exp(-4.0 * dual_c) * 2.0;
  return out;
}

}  // namespace besselxi
