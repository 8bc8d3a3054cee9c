#pragma once

// Bessel functions of the first kind (orders 0 and 1), the modified I₀, the
// Kummer function ₁F₁(a; 1; w) and the Gaussian–Bessel kernel G₁.

#include <vector>

#include "besselxi/types.hpp"

namespace besselxi {

enum class BesselOrder { zero = 0, one = 1 };

/// J_v(x) for v ∈ {0, 1}. Power series for |x| <= 5, Miller backward
/// recurrence on (5, 25), Hankel asymptotics beyond. Absolute error stays
/// below ~1e-13 everywhere.
double bessel_j(BesselOrder v, double x);

/// I₀(x); OverflowError for |x| > 700.
double bessel_i0(double x);

/// e^{-|x|} I₀(x); never overflows.
double bessel_i0_scaled(double x);

/// A scale that is either real (r) or purely imaginary (iρ). J₀(r z) is
/// then real in both cases: J₀(ρz) or I₀(ρz).
class BesselScale {
 public:
  static BesselScale real(double r) { return BesselScale(r, false); }
  static BesselScale imaginary(double rho) { return BesselScale(rho, true); }
  /// Accepts r with one of its parts exactly zero; DomainError otherwise.
  static BesselScale from_complex(Complex r);

  double magnitude() const { return magnitude_; }
  bool is_imaginary() const { return imaginary_; }
  /// r² (negative for an imaginary scale).
  double squared() const { return imaginary_ ? -magnitude_ * magnitude_ : magnitude_ * magnitude_; }
  Complex as_complex() const { return imaginary_ ? Complex(0.0, magnitude_) : Complex(magnitude_, 0.0); }
  /// J₀(r z).
  double j0(double z) const;
  /// |J₀(r z)| <= exp(growth_rate() * |z|).
  double growth_rate() const { return imaginary_ ? magnitude_ : 0.0; }

 private:
  BesselScale(double m, bool imag) : magnitude_(m), imaginary_(imag) {}
  double magnitude_;
  bool imaginary_;
};

struct KummerArgs {
  Complex a;  // first parameter; the second is fixed to 1
  Complex w;  // argument
};

/// ₁F₁(a; 1; w) by Taylor summation, after the Kummer transformation
/// e^{w} ₁F₁(1 − a; 1; −w) when Re w < 0. Stops after three consecutive
/// terms below req.target_rel_tol relative to the partial sum.
Complex kummer_1f1(const KummerArgs& args, const EvalRequest& req = {});

/// ₁F₁(a; b; w) for real b > 0, same summation strategy.
Complex kummer_1f1_general(Complex a, double b, Complex w, const EvalRequest& req = {});

/// G₁(z) = e^{-z²} z J₀(2 sqrt(-r²/4t) z) with the principal square root.
/// Real r gives e^{-z²} z I₀(r z / sqrt t); r = iρ gives e^{-z²} z J₀(ρ z / sqrt t).
double g1(double z, const BesselScale& r, double t);
Complex g1(double z, Complex r, double t);

/// Taylor coefficients of G₁ about 0: G₁(z) = Σ_k c_k z^{2k+1}.
std::vector<double> g1_taylor(const BesselScale& r, double t, int count);

/// Large-argument surrogate (cos r + sin r) / sqrt(π r) of J₀(r).
double j0_asymptotic_pair(double r);

}  // namespace besselxi
