#include <algorithm>
#include <array>
#include <cmath>

#include "besselxi/complexfn.hpp"
#include "besselxi/kernels.hpp"

namespace besselxi {

namespace {

// B_{2k} / (2k)! for k = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    0.083333333333333333333,     -0.0013888888888888888889,   0.000033068783068783068783,
    -8.2671957671957671958e-7,   2.0876756987868098979e-8,    -5.2841901386874931848e-10,
    1.3382536530684678833e-11,   -3.3896802963225828668e-13,  8.5860620562778445641e-15,
    -2.174868698558061873e-16,   5.5090028283602295152e-18,   -1.3954464685812523341e-19};

// Stieltjes constants γ_0..γ_3 for the Laurent expansion around s = 1.
constexpr std::array<double, 4> kStieltjes = {0.57721566490153286061, -0.072815845483676724861,
                                              -0.0096903631928723184845, 0.0020538344203033458662};

struct EulerMaclaurin {
  Complex head;        // Σ_{n<N} n^{-s}
  Complex boundary;    // N^{-s}/2 + Bernoulli corrections
  Complex pole_part;   // N^{1-s}, to be divided by (s - 1)
  double last_term;    // magnitude of the final correction
};

EulerMaclaurin euler_maclaurin(Complex s, std::int64_t n_terms) {
  const double N = static_cast<double>(n_terms);
  const Complex n_pow = std::exp(-s * std::log(N));  // N^{-s}
  EulerMaclaurin em{};
  em.head = kernels::dirichlet_sum(s, n_terms - 1);
  em.pole_part = N * n_pow;
  em.boundary = 0.5 * n_pow;
  // Rising factorial s(s+1)...(s+2k-2) times N^{-s-2k+1}.
  Complex rising = s;
  Complex power = n_pow / N;
  Complex term = 0.0;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    term = kBernoulliOverFactorial[k] * rising * power;
    em.boundary += term;
    const double j = static_cast<double>(2 * k + 1);
    rising *= (s + j) * (s + j + 1.0);
    power /= N * N;
  }
  em.last_term = std::abs(term);
  return em;
}

std::int64_t initial_terms(Complex s) {
  const double n = std::max({20.0, std::ceil(2.0 * std::abs(s.imag())), std::ceil(std::abs(s.real()) + 10.0)});
  return static_cast<std::int64_t>(n);
}

template <class Combine>
Complex run_euler_maclaurin(Complex s, const EvalRequest& req, Combine combine) {
  req.validate();
  std::int64_t n_terms = initial_terms(s);
  while (true) {
    if (n_terms > req.max_terms) throw ConvergenceError("zeta: max_terms exhausted before tolerance");
    const EulerMaclaurin em = euler_maclaurin(s, n_terms);
    const Complex value = combine(em);
    // Near a zero the relative criterion is unattainable; rounding in the
    // head sum, of size eps * N^{1-σ}, sets the floor.
    const double rounding_floor =
        1e-16 * std::pow(static_cast<double>(n_terms), std::max(0.0, 1.0 - s.real()));
    const double scale = std::max(std::abs(value), rounding_floor);
    if (em.last_term <= req.target_rel_tol * 1e-2 * scale) {
      return require_finite(value, "zeta");
    }
    n_terms *= 2;
  }
}

}  // namespace

Complex zeta(Complex s, const EvalRequest& req) {
  if (!is_finite(s)) throw DomainError("zeta: non-finite argument");
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (std::abs(s - 1.0) < 1e-3) return zeta_times_sminus1(s, req) / (s - 1.0);
  return run_euler_maclaurin(s, req, [&](const EulerMaclaurin& em) {
    return em.head + em.pole_part / (s - 1.0) + em.boundary;
  });
}

Complex zeta_times_sminus1(Complex s, const EvalRequest& req) {
  if (!is_finite(s)) throw DomainError("zeta_times_sminus1: non-finite argument");
  const Complex eps = s - 1.0;
  if (std::abs(eps) < 1e-3) {
    // (s-1)ζ(s) = 1 + Σ_n (-1)^n γ_n ε^{n+1} / n!
    Complex sum = 1.0;
    Complex power = eps;
    double factorial = 1.0;
    for (std::size_t n = 0; n < kStieltjes.size(); ++n) {
      if (n > 0) factorial *= static_cast<double>(n);
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      sum += sign * kStieltjes[n] * power / factorial;
      power *= eps;
    }
    return sum;
  }
  return run_euler_maclaurin(s, req, [&](const EulerMaclaurin& em) {
    return eps * (em.head + em.boundary) + em.pole_part;
  });
}

}  // namespace besselxi
