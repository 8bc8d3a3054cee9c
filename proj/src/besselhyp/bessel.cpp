#include <cmath>
#include <vector>

#include "besselxi/besselhyp.hpp"

namespace besselxi {

namespace {

constexpr double kSeriesLimit = 5.0;
constexpr double kHankelLimit = 25.0;

double j_series(int v, double x) {
  const double q = 0.25 * x * x;
  double term = v == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * static_cast<double>(k + v));
    sum += term;
    if (std::fabs(term) < 1e-17 * std::fabs(sum) && k > 2) break;
  }
  return sum;
}

// Miller's algorithm: recur downward from an order well above x, normalise
// with J₀ + 2 Σ J_{2k} = 1.
double j_miller(int v, double x) {
  int start = 2 * static_cast<int>((1.3 * x + 40.0) / 2.0);
  double next = 0.0;
  double cur = 1e-300;
  double norm = 0.0;
  double j0 = 0.0;
  double j1 = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * k / x * cur - next;
    next = cur;
    cur = prev;  // cur = J_{k-1}
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (k - 1 == 1) j1 = cur;
    if (std::fabs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      j1 *= 1e-250;
    }
  }
  j0 = cur;
  norm += j0;
  return (v == 0 ? j0 : j1) / norm;
}

// Hankel expansion J_v(x) = sqrt(2/(πx)) (P cos χ − Q sin χ), χ = x − (v/2 + 1/4)π.
double j_hankel(int v, double x) {
  const double mu = 4.0 * v * v;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::fabs(term) > last) break;  // asymptotic series started diverging
    last = std::fabs(term);
    switch (k % 4) {
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
      default: p += term; break;
    }
    if (last < 1e-17) break;
  }
  // cos(x − θ) and sin(x − θ) without forming x − θ.
  const double theta = (0.5 * v + 0.25) * kPi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double cos_chi = cx * ct + sx * st;
  const double sin_chi = sx * ct - cx * st;
  return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// sqrt(2πx) e^{-x} I₀(x) for large x.
double i0_asymptotic_core(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (k * 8.0 * x);
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double bessel_j(BesselOrder order, double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
  const int v = static_cast<int>(order);
  const double ax = std::fabs(x);
  double value;
  if (ax <= kSeriesLimit) {
    value = j_series(v, ax);
  } else if (ax < kHankelLimit) {
    value = j_miller(v, ax);
  } else {
    value = j_hankel(v, ax);
  }
  return (v == 1 && x < 0.0) ? -value : value;
}

double bessel_i0_scaled(double x) {
  const double ax = std::fabs(x);
  if (!std::isfinite(ax)) throw DomainError("bessel_i0_scaled: non-finite argument");
  if (ax <= 30.0) return i0_series(ax) * std::exp(-ax);
  return i0_asymptotic_core(ax) / std::sqrt(2.0 * kPi * ax);
}

double bessel_i0(double x) {
  const double ax = std::fabs(x);
  if (!std::isfinite(ax)) throw DomainError("bessel_i0: non-finite argument");
  if (ax > 700.0) throw OverflowError("bessel_i0: |x| > 700 overflows binary64");
  if (ax <= 30.0) return i0_series(ax);
  return std::exp(ax) * i0_asymptotic_core(ax) / std::sqrt(2.0 * kPi * ax);
}

BesselScale BesselScale::from_complex(Complex r) {
  if (r.imag() == 0.0) return real(r.real());
  if (r.real() == 0.0) return imaginary(r.imag());
  throw DomainError("BesselScale: r must be purely real or purely imaginary");
}

double BesselScale::j0(double z) const {
  const double arg = magnitude_ * z;
  return imaginary_ ? bessel_i0(arg) : bessel_j(BesselOrder::zero, arg);
}

double g1(double z, const BesselScale& r, double t) {
  if (!(t > 0.0)) throw DomainError("g1: t must be positive");
  if (!(z >= 0.0)) throw DomainError("g1: z must be non-negative");
  const double arg = r.magnitude() * z / std::sqrt(t);
  if (r.is_imaginary()) return std::exp(-z * z) * z * bessel_j(BesselOrder::zero, arg);
  // Real r: the principal root makes the J₀ argument imaginary.
  return z * std::exp(-z * z + std::fabs(arg)) * bessel_i0_scaled(arg);
}

Complex g1(double z, Complex r, double t) { return g1(z, BesselScale::from_complex(r), t); }

std::vector<double> g1_taylor(const BesselScale& r, double t, int count) {
  if (!(t > 0.0)) throw DomainError("g1_taylor: t must be positive");
  // e^{-z²} = Σ (-1)^j z^{2j}/j! and J₀(2 sqrt(w) z) = Σ_k (-w)^k z^{2k}/(k!)²
  // with w = -r²/(4t); G₁ is z times their Cauchy product.
  const double w = -r.squared() / (4.0 * t);
  std::vector<double> gauss(count);
  std::vector<double> bessel(count);
  double g = 1.0;
  double b = 1.0;
  for (int k = 0; k < count; ++k) {
    if (k > 0) {
      g *= -1.0 / k;
      b *= -w / (static_cast<double>(k) * k);
    }
    gauss[k] = g;
    bessel[k] = b;
  }
  std::vector<double> c(count, 0.0);
  for (int m = 0; m < count; ++m) {
    for (int j = 0; j <= m; ++j) c[m] += gauss[j] * bessel[m - j];
  }
  return c;
}

double j0_asymptotic_pair(double r) {
  if (!(r > 0.0)) throw DomainError("j0_asymptotic_pair: r must be positive");
  return (std::cos(r) + std::sin(r)) / std::sqrt(kPi * r);
}

}  // namespace besselxi
