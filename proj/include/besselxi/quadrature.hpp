#pragma once

// Adaptive quadrature: finite panels (Gauss–Kronrod 7/15), semi-infinite
// ranges with caller-supplied decay certificates, cosine-oscillatory
// integrals and numeric Mellin transforms in both directions.
//
// Convergence convention: a result is converged when
// err_estimate <= max(abs_tol, rel_tol * |value|). Failure to converge is
// reported through the flag; require_converged() turns it into an error.

#include <functional>
#include <string>
#include <vector>

#include "besselxi/types.hpp"

namespace besselxi {

template <class T>
struct QuadResult {
  T value{};
  double err_estimate = 0.0;
  long evals = 0;
  bool converged = false;
};

using RealQuad = QuadResult<double>;
using ComplexQuad = QuadResult<Complex>;

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(double)>;
using SPlaneFn = std::function<Complex(Complex)>;

/// Throws ConvergenceError naming `what` unless r.converged.
template <class T>
const QuadResult<T>& require_converged(const QuadResult<T>& r, const std::string& what) {
  if (!r.converged) {
    throw ConvergenceError("quadrature did not converge: " + what +
                           " (err_estimate=" + std::to_string(r.err_estimate) + ")");
  }
  return r;
}

/// Integrable (y − a)^{-1/2}-type endpoint behaviour, removed by y = a + u².
enum class EndpointSingularity { none, left_sqrt, right_sqrt, both_sqrt };

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_subdivisions = 4000;
  EndpointSingularity singularity = EndpointSingularity::none;
  /// Interior points where the integrand is known to be rough.
  std::vector<double> breakpoints;

  static QuadOptions absolute(double tol) {
    QuadOptions o;
    o.abs_tol = tol;
    return o;
  }
  static QuadOptions relative(double tol, double floor = 1e-300) {
    QuadOptions o;
    o.abs_tol = floor;
    o.rel_tol = tol;
    return o;
  }
};

RealQuad integrate_finite(const RealFn& f, double a, double b, const QuadOptions& opt);
ComplexQuad integrate_finite_complex(const ComplexFn& f, double a, double b, const QuadOptions& opt);
inline RealQuad integrate_finite(const RealFn& f, double a, double b, double tol) {
  return integrate_finite(f, a, b, QuadOptions::absolute(tol));
}

/// What the caller guarantees about |f(y)| for large y.
///   exponential: |f| <= C (1+y)^k e^{-λ y}
///   gaussian:    |f| <= C (1+y)^k e^{-λ y²}
///   algebraic:   |f| <= C y^{-p}, p > 1
///   analytic_tail: ∫_Y^∞ f is supplied in closed form, accurate to tail_error.
class DecayCertificate {
 public:
  enum class Kind { exponential, gaussian, algebraic, analytic_tail };

  static DecayCertificate exponential(double c, double lambda, double power = 0.0);
  static DecayCertificate gaussian(double c, double lambda, double power = 0.0);
  static DecayCertificate algebraic(double c, double p);
  static DecayCertificate analytic_tail(double cutoff, std::function<Complex(double)> tail,
                                        double tail_error);

  Kind kind() const { return kind_; }
  double constant() const { return c_; }
  double rate() const { return rate_; }
  double power() const { return power_; }

  /// A point Y >= a beyond which the certified tail is below tol / 2.
  double cutoff(double a, double tol) const;
  /// Upper bound on |∫_Y^∞ f|.
  double tail_bound(double y) const;
  /// Closed-form tail (analytic_tail only; zero otherwise).
  Complex tail_value(double y) const { return tail_ ? tail_(y) : Complex(0.0, 0.0); }

  /// The certificate for f(y) y^{σ-1} given one for f, on y >= 1.
  DecayCertificate times_power(double sigma_minus_one) const;

 private:
  Kind kind_ = Kind::exponential;
  double c_ = 1.0;
  double rate_ = 1.0;
  double power_ = 0.0;
  double fixed_cutoff_ = 0.0;
  double tail_error_ = 0.0;
  std::function<Complex(double)> tail_;
};

RealQuad integrate_semi_infinite(const RealFn& f, double a, const DecayCertificate& decay,
                                 const QuadOptions& opt);
ComplexQuad integrate_semi_infinite_complex(const ComplexFn& f, double a, const DecayCertificate& decay,
                                            const QuadOptions& opt);

/// ∫₀^∞ g(y) cos(x y) dy. Uses |x|; x = 0 falls back to integrate_semi_infinite.
/// Exponential/gaussian envelopes: truncation at the certified cutoff with
/// breakpoints at the zeros of cos(xy). Algebraic envelopes: half-period
/// panels summed with Wynn's epsilon algorithm.
RealQuad integrate_oscillatory_cos(const RealFn& g, double x, const DecayCertificate& envelope,
                                   const QuadOptions& opt);

/// Wynn epsilon acceleration of a sequence of partial sums. Returns the
/// best extrapolant and an error estimate.
struct Extrapolated {
  Complex value;
  double error = 0.0;
};
Extrapolated wynn_epsilon(const std::vector<Complex>& partial_sums);

struct MellinOptions {
  double abs_tol = 1e-12;
  double rel_tol = 0.0;
  /// f(y) = O(y^α) as y → 0⁺ with |f(y)| <= bound_at_zero · y^α on (0, 1].
  double order_at_zero = 0.0;
  double bound_at_zero = 1.0;
};

/// 𝔉(s) = ∫₀^∞ f(y) y^{s-1} dy. DomainError when Re s + α <= 0 (strip
/// violation at 0) or when the certificate at ∞ does not cover Re s.
ComplexQuad mellin_forward(const RealFn& f, Complex s, const DecayCertificate& decay,
                           const MellinOptions& opt);

enum class ContourDecay { exponential, algebraic };

/// Vertical line Re s = c, truncated at |Im s| <= T with node spacing h.
/// decay_rate is κ in |𝔉(c+iτ)| ~ e^{-κ|τ|}; for algebraic decay the line is
/// integrated panel-wise with Wynn acceleration and T, h are not used.
struct ContourSpec {
  double c = 0.5;
  double T = 60.0;
  double h = 0.05;
  double decay_rate = kPi / 4.0;
  ContourDecay kind = ContourDecay::exponential;

  void validate() const;
  /// h = min(0.05, π / (4 |ln tol| max(1, |ln y|))); T is then grown by
  /// mellin_inverse_contour until the measured tail is below tol / 10.
  static ContourSpec for_tolerance(double c, double y, double tol, double decay_rate = kPi / 4.0);
};

/// f(y) = (1/2πi) ∫ 𝔉(s) y^{-s} ds along the line. In exponential mode the
/// trapezoid sum is compared against its 2h subsample and the truncation
/// tail |𝔉(c±iT)| y^{-c} / (2πκ) is added to err_estimate. If tol > 0 and
/// spec.T is too short for it, T is doubled (up to 4096) before giving up.
ComplexQuad mellin_inverse_contour(const SPlaneFn& fhat, const ContourSpec& spec, double y,
                                   double tol = 0.0);

}  // namespace besselxi
