#include <algorithm>
#include <cmath>
#include <memory>

#include "besselxi/complexfn.hpp"
#include "besselxi/series.hpp"

namespace besselxi {

namespace detail {
const std::vector<double>& bernoulli_over_index() {
  static const std::vector<double> table = {
    0.083333333333333333333,
    -0.0083333333333333333333,
    0.003968253968253968254,
    -0.0041666666666666666667,
    0.0075757575757575757576,
    -0.021092796092796092796,
    0.083333333333333333333,
    -0.44325980392156862745,
    3.0539543302701197438,
    -26.456212121212121212,
    281.46014492753623188,
    -3607.510546398046398,
    54827.583333333333333,
    -974936.82385057471264,
    20052695.796688078946,
    -472384867.72162990196,
    12635724795.916666667,
    -380879311252.45368812,
    12850850499305.083333,
    -482414483548501.70372,
    20040310656516252.738,
    -916774360319533077.57,
    45979888343656503490.0,
    -2.5180471921451095697e+21,
    1.5001733492153928734e+23,
    -9.6899578874635940656e+24,
    6.7645882379292820991e+26,
    -5.089065946866228969e+28,
    4.1147288792557978698e+30,
    -3.566658209537555611e+32
  };
  return table;
}
}  // namespace detail

MuntzTransform::MuntzTransform(RealFn f, DecayCertificate decay, Options opt)
    : f_(std::move(f)), decay_(std::move(decay)), opt_(std::move(opt)) {
  if (!f_) throw DomainError("MuntzTransform: empty function");
  if (opt_.odd_taylor.size() > detail::bernoulli_over_index().size()) opt_.odd_taylor.resize(detail::bernoulli_over_index().size());
  QuadOptions q_opt = QuadOptions::absolute(opt_.tol);
  q_opt.rel_tol = 1e-13;  // GK15 rounding floor is ~50 eps per unit of ∫|F|
  const RealQuad q = integrate_semi_infinite(f_, 0.0, decay_, q_opt);
  require_converged(q, "Muntz transform: integral of F");
  integral_ = q.value;
}

long MuntzTransform::terms_at(double y) const {
  // Σ_{n>N} |F(ny)| <= (1/y) ∫_{Ny}^∞ envelope when the envelope decreases.
  const double z = decay_.cutoff(0.0, 2.0 * opt_.tol * y);
  return static_cast<long>(std::ceil(z / y)) + 1;
}

double MuntzTransform::euler_maclaurin(double y) const {
  const auto& b = detail::bernoulli_over_index();
  double sum = -0.5 * opt_.value_at_zero;
  double power = y;  // y^{2k-1}
  for (std::size_t k = 0; k < opt_.odd_taylor.size(); ++k) {
    sum -= b[k] * opt_.odd_taylor[k] * power;
    power *= y * y;
  }
  return sum;
}

double MuntzTransform::operator()(double y) const {
  if (!(y > 0.0) || !std::isfinite(y)) throw DomainError("muntz_transform: y must be positive and finite");
  if (!opt_.odd_taylor.empty() && y < opt_.small_y) return euler_maclaurin(y);
  const long n = terms_at(y);
  if (n > 50'000'000) throw ConvergenceError("muntz_transform: too many terms; supply Taylor data for small y");
  double sum = 0.0;
  for (long k = n; k >= 1; --k) sum += f_(static_cast<double>(k) * y);
  if (!std::isfinite(sum)) throw ConvergenceError("muntz_transform: sum did not stabilise");
  return sum - integral_ / y;
}

ComplexQuad MuntzTransform::mellin(Complex s, double tol) const {
  if (!(s.real() > 0.0 && s.real() < 1.0)) throw DomainError("MuntzTransform::mellin: need 0 < Re s < 1");
  if (opt_.odd_taylor.empty()) throw DomainError("MuntzTransform::mellin: needs Taylor data at 0");
  const auto& b = detail::bernoulli_over_index();
  const double y0 = opt_.small_y;
  // ∫₀^{y0} y^{s-1} (expansion) dy, term by term.
  Complex head = -0.5 * opt_.value_at_zero * std::pow(y0, s) / s;
  for (std::size_t k = 0; k < opt_.odd_taylor.size(); ++k) {
    const double p = 2.0 * static_cast<double>(k + 1) - 1.0;
    head -= b[k] * opt_.odd_taylor[k] * std::pow(y0, s + p) / (s + p);
  }
  // Beyond Y the sum term is below tol; only −(1/y)∫F remains:
  // ∫_Y^∞ y^{s-2} dy = Y^{s-1} / (1 − s).
  double big_y = y0;
  while (decay_.tail_bound(big_y) / big_y + std::fabs(f_(big_y)) > 1e-3 * tol || big_y < 2.0) big_y *= 1.5;
  const Complex tail = -integral_ * std::pow(big_y, s - 1.0) / (1.0 - s);
  auto body_fn = [this, s](double y) -> Complex { return (*this)(y) * std::pow(y, s - 1.0); };
  QuadOptions q = QuadOptions::absolute(0.5 * tol);
  for (double p = 2.0 * y0; p < big_y; p *= 2.0) q.breakpoints.push_back(p);
  ComplexQuad body = integrate_finite_complex(ComplexFn(body_fn), y0, big_y, q);
  body.value += head + tail;
  return body;
}

double muntz_transform(const RealFn& f, double y, const DecayCertificate& decay, double quad_tol) {
  MuntzTransform::Options opt;
  opt.tol = quad_tol;
  return MuntzTransform(f, decay, opt)(y);
}

MuntzTransform muntz_g1(const BesselScale& r, double t, double tol) {
  if (!(t > 0.0)) throw DomainError("muntz_g1: t must be positive");
  // |G₁(z)| <= z e^{-z² + g z} <= e^{g²/2} (1 + z) e^{-z²/2}.
  const double g = r.is_imaginary() ? 0.0 : r.magnitude() / std::sqrt(t);
  const auto decay = DecayCertificate::gaussian(std::exp(0.5 * g * g), 0.5, 1.0);
  MuntzTransform::Options opt;
  opt.tol = tol;
  opt.value_at_zero = 0.0;
  opt.odd_taylor = g1_taylor(r, t, 30);  // G₁ = Σ c_k z^{2k+1}
  return MuntzTransform([r, t](double z) { return g1(z, r, t); }, decay, opt);
}

}  // namespace besselxi
