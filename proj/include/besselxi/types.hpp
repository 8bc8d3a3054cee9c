#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "besselxi/errors.hpp"

namespace besselxi {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Accuracy/budget knobs shared by the series evaluators.
struct EvalRequest {
  double target_rel_tol = 1e-12;
  int max_terms = 1 << 20;

  void validate() const {
    if (!(target_rel_tol > 0.0)) throw DomainError("EvalRequest: target_rel_tol must be > 0");
    if (max_terms <= 0) throw DomainError("EvalRequest: max_terms must be > 0");
  }
};

/// Truncated series with a rigorous bound on what was dropped.
struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
};

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Complex require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw OverflowError(std::string(what) + ": non-finite result");
  return z;
}

inline double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw OverflowError(std::string(what) + ": non-finite result");
  return v;
}

}  // namespace besselxi
