#pragma once

// Complex special functions on the s-plane: Γ, ζ, the completed ξ and the
// real function Ξ(y) = ξ(1/2 + iy).

#include <vector>

#include "besselxi/types.hpp"

namespace besselxi {

/// log Γ(z). The imaginary part is a continuous branch, not necessarily the
/// principal one; only exp(log_gamma) is meaningful. Throws PoleError at
/// non-positive integers.
Complex log_gamma(Complex z);

/// Γ(z) to ~1e-13 relative for |Im z| <= 200, -50 <= Re z <= 50.
/// Lanczos (g = 607/128, 15 terms) with reflection for Re z < 1/2.
/// Throws PoleError at non-positive integers and OverflowError when |Γ(z)|
/// leaves binary64; use log_gamma there.
Complex complex_gamma(Complex z);

/// sin(πz) with exact reduction of Re z modulo 2.
Complex sin_pi(Complex z);

/// Riemann ζ(s) by Euler–Maclaurin summation (Bernoulli corrections through
/// B₂₄). Throws PoleError at s = 1 and ConvergenceError when req.max_terms
/// is too small for req.target_rel_tol.
Complex zeta(Complex s, const EvalRequest& req = {});

/// (s − 1)ζ(s), finite at s = 1. Uses the Stieltjes expansion for
/// |s − 1| < 1e-3.
Complex zeta_times_sminus1(Complex s, const EvalRequest& req = {});

/// ξ(s) = ½ s(s − 1) π^{-s/2} Γ(s/2) ζ(s), evaluated as
/// Γ(1 + s/2) π^{-s/2} · (s − 1)ζ(s) so that it is finite everywhere.
Complex xi_completed(Complex s);

/// Ξ(y) = ξ(1/2 + iy). The imaginary part is checked against
/// 1e-10 (1 + |Ξ|) and an InvariantError is thrown if it is larger.
double Xi(double y);

/// A sign-change bracket of Ξ refined by bisection.
struct ZeroBracket {
  double lower = 0.0;
  double upper = 0.0;
  double mid() const { return 0.5 * (lower + upper); }
};

/// Scans (0, y_max] with the given step for sign changes of Ξ and refines
/// each one to width <= width_tol.
std::vector<ZeroBracket> scan_xi_zeros(double y_max, double step = 0.05, double width_tol = 1e-10);

}  // namespace besselxi
