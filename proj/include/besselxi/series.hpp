#pragma once

// Theta and Bessel–Gaussian lattice sums with certified truncation, the
// heat-equation series, Müntz transforms and Abel limits.

#include <functional>
#include <vector>

#include "besselxi/besselhyp.hpp"
#include "besselxi/quadrature.hpp"
#include "besselxi/types.hpp"

namespace besselxi {

/// plain: ψ(y) = Σ_{n>=1} e^{-n² y};  pi: ψ(y) = Σ_{n>=1} e^{-π n² y}.
enum class ThetaConvention { plain, pi };

const char* convention_name(ThetaConvention c);

SeriesValue theta_psi(double y, ThetaConvention conv);

/// Parameter bundle shared by the H₁ series, the heat solution and the
/// identity checks.
struct PhysParams {
  double x = 0.0;
  BesselScale r = BesselScale::real(0.0);
  double t = 1.0;
  double kappa = 1.0;

  void validate() const;
};

/// (√π / (2√t)) ₁F₁(½; 1; −r²/4t), the coefficient of 1/y removed from H₁.
double h1_residue_constant(const BesselScale& r, double t);

/// H₁(y) = Σ_{n>=1} e^{-t n² y²} J₀(r n y) − h1_residue_constant / y.
/// For small y the Poisson-dual bound shows H₁(y) = −½ up to a certified
/// tail, and that value is returned instead of the (cancelling) direct sum.
SeriesValue h1(double y, const PhysParams& p);

/// u(r, t) = Σ_{n>=1} J₀(n r) e^{-n² κ t}.
SeriesValue heat_u(double r, double t, double kappa);

/// (1/√π) Σ_{n>=1} (cos nr + sin nr) n^{-1/2} e^{-n² κ t}: the large-r
/// surrogate of √r · u(r, t).
SeriesValue heat_surrogate_scaled(double r, double t, double kappa);

/// Σ_{n>=1} F(n y) − (1/y) ∫₀^∞ F for a smooth decaying F.
class MuntzTransform {
 public:
  struct Options {
    double tol = 1e-13;
    /// F(0) and the odd Taylor coefficients a_k = F^{(2k-1)}(0)/(2k-1)!,
    /// k = 1, 2, ...; when given, y < small_y uses the Euler–Maclaurin
    /// expansion −F(0)/2 − Σ_k (B_{2k}/2k) a_k y^{2k-1}.
    double value_at_zero = 0.0;
    std::vector<double> odd_taylor;
    double small_y = 0.3;
  };

  /// ∫₀^∞ F is computed here, once.
  MuntzTransform(RealFn f, DecayCertificate decay, Options opt);

  double operator()(double y) const;
  double integral() const { return integral_; }
  /// Number of direct terms the last regime decision would use at y.
  long terms_at(double y) const;

  /// ∫₀^∞ y^{s-1} (Σ F(ny) − (1/y)∫F) dy for 0 < Re s < 1.
  ComplexQuad mellin(Complex s, double tol) const;

 private:
  double euler_maclaurin(double y) const;

  RealFn f_;
  DecayCertificate decay_;
  Options opt_;
  double integral_ = 0.0;
};

/// One-shot form: builds the transform (one quadrature) and evaluates it.
double muntz_transform(const RealFn& f, double y, const DecayCertificate& decay, double quad_tol);

/// The Müntz transform of G₁(z) = e^{-z²} z J₀(2 sqrt(−r²/4t) z).
MuntzTransform muntz_g1(const BesselScale& r, double t, double tol = 1e-13);

/// t₀ q^k, k = 0..count−1.
struct GeometricGrid {
  double start = 0.1;
  double ratio = 0.5;
  int count = 8;
};

struct AbelResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  std::vector<double> samples;
};

/// lim_{t→0⁺} family(t) by Richardson extrapolation in powers of t on the
/// grid. converged is false when the extrapolants stop contracting.
AbelResult abel_limit(const std::function<SeriesValue(double)>& family, const GeometricGrid& grid = {});

/// −½ + 1/r + 2 Σ_{m=1}^{n} (r² − 4m²π²)^{-1/2}, n = floor(r / 2π).
/// PoleError when r is (within 1e-14 relative) a multiple of 2π.
double bvp_initial_closed_form(double r);

namespace detail {
/// B_{2k} / (2k) for k = 1..30.
const std::vector<double>& bernoulli_over_index();
}  // namespace detail

}  // namespace besselxi
