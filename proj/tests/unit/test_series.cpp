#include "besselxi/complexfn.hpp"
#include "besselxi/series.hpp"
#include "check_close.hpp"

using namespace besselxi;

// Reference values: mpmath, 40 digits.

TEST_CASE("theta_psi") {
  CHECK_REL(theta_psi(1.0, ThetaConvention::plain).value, 0.38631860241332608, 1e-15);
  CHECK_REL(theta_psi(0.01, ThetaConvention::plain).value, 8.3622692545275801, 1e-14);
  CHECK_REL(theta_psi(1.0, ThetaConvention::pi).value, 0.043217405606654007, 1e-15);
  CHECK_REL(theta_psi(0.37, ThetaConvention::pi).value, 0.32233253111722022, 1e-15);
  const auto v = theta_psi(0.05, ThetaConvention::plain);
  CHECK(v.tail_bound <= 1e-15 * v.value);
  CHECK_THROWS_AS(theta_psi(0.0, ThetaConvention::plain), DomainError);
  // Dual branch for tiny y: ψ(y) ≈ ½(sqrt(π/y) − 1).
  CHECK_REL(theta_psi(1e-14, ThetaConvention::plain).value, 0.5 * (std::sqrt(kPi / 1e-14) - 1.0), 1e-14);
}

TEST_CASE("theta functional equation") {
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const double lhs = theta_psi(t, ThetaConvention::plain).value;
    const double k = std::sqrt(kPi / t);
    const double rhs = k * theta_psi(kPi * kPi / t, ThetaConvention::plain).value + 0.5 * k - 0.5;
    CHECK_REL(lhs, rhs, 1e-13);
  }
}

TEST_CASE("h1") {
  PhysParams p;
  p.r = BesselScale::real(0.0);
  p.t = 1.0;
  CHECK_ABS(h1(1.0, p).value, -0.49990832303943194, 1e-15);
  p.r = BesselScale::real(1.0);
  CHECK_ABS(h1(0.5, p).value, -0.49999999999999821, 1e-15);
  CHECK_ABS(h1(0.35, p).value, -0.5, 1e-16);
  PhysParams q;
  q.r = BesselScale::imaginary(0.7);
  q.t = 1.5;
  CHECK_ABS(h1(0.8, q).value, -0.49998007952813396, 1e-15);
  CHECK_THROWS_AS(h1(0.0, p), DomainError);
  CHECK(std::fabs(h1(0.01, p).value + 0.5) <= 1e-3);
}

TEST_CASE("h1 regimes agree where both apply") {
  // Wherever the dual branch returns −½, the direct sum must agree.
  PhysParams p;
  p.r = BesselScale::real(0.5);
  p.t = 1.0;
  int dual_points = 0;
  for (double y = 0.2; y < 0.8; y += 0.01) {
    const SeriesValue v = h1(y, p);
    if (v.terms_used != 0) continue;
    ++dual_points;
    double sum = 0.0;
    for (int n = 200; n >= 1; --n) sum += std::exp(-n * n * y * y) * bessel_j(BesselOrder::zero, 0.5 * n * y);
    CHECK_ABS(sum - h1_residue_constant(p.r, p.t) / y, -0.5, 1e-14);
  }
  CHECK(dual_points > 5);
}

TEST_CASE("h1 large-y limit") {
  for (auto r : {BesselScale::real(0.5), BesselScale::imaginary(0.8)}) {
    PhysParams p;
    p.r = r;
    p.t = 2.0;
    const double y = 50.0 / std::sqrt(p.t);
    CHECK_ABS(y * h1(y, p).value, -h1_residue_constant(p.r, p.t), 1e-8);
  }
}

TEST_CASE("heat_u") {
  CHECK_REL(heat_u(1.0, 1.0, 1.0).value, 0.28556906232129696, 1e-14);
  CHECK_REL(heat_u(20.0, 0.1, 1.0).value, 0.1086049059908088, 1e-12);
  CHECK(heat_u(5.0, 2.0, 0.5).value == doctest::Approx(heat_u(5.0, 1.0, 1.0).value).epsilon(1e-15));
  CHECK_REL(heat_u(0.0, 0.3, 1.0).value, theta_psi(0.3, ThetaConvention::plain).value, 1e-15);
  CHECK_THROWS_AS(heat_u(1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("Muntz transform") {
  const auto gauss_pi = [](double y) { return std::exp(-kPi * y * y); };
  CHECK_ABS(muntz_transform(gauss_pi, 1.0, DecayCertificate::gaussian(1.0, kPi), 1e-13), -0.45678259439334599, 1e-13);
  const auto gauss = [](double y) { return std::exp(-y * y); };
  CHECK_ABS(muntz_transform(gauss, 0.7, DecayCertificate::gaussian(1.0, 1.0), 1e-13), -0.49999999547211055, 1e-13);
}

TEST_CASE("Muntz transform Mellin property") {
  MuntzTransform::Options opt;
  opt.value_at_zero = 1.0;  // e^{-y²} is even: no odd Taylor terms
  opt.odd_taylor = {0.0};
  MuntzTransform m([](double y) { return std::exp(-y * y); }, DecayCertificate::gaussian(1.0, 1.0), opt);
  const auto r = m.mellin(Complex(0.5, 0.0), 1e-11);
  CHECK_ABS(r.value.real(), -2.647337888328288, 1e-9);
}

TEST_CASE("Muntz G1: integral and small-y expansion") {
  for (auto r : {BesselScale::imaginary(0.5), BesselScale::real(1.0)}) {
    const double t = 1.0;
    const MuntzTransform m = muntz_g1(r, t);
    CHECK_REL(m.integral(), 0.5 * std::exp(r.squared() / (4.0 * t)), 1e-12);
    // Direct sum vs Euler–Maclaurin around the switch point.
    MuntzTransform::Options direct_only;
    const double g = r.is_imaginary() ? 0.0 : r.magnitude();
    MuntzTransform direct([r, t](double z) { return g1(z, r, t); },
                          DecayCertificate::gaussian(std::exp(0.5 * g * g), 0.5, 1.0), direct_only);
    for (double y : {0.1, 0.2, 0.29, 0.31}) CHECK_ABS(m(y), direct(y), 1e-12);
  }
}

TEST_CASE("abel_limit and the boundary closed form") {
  CHECK_ABS(bvp_initial_closed_form(kPi), -0.18169011381620933, 1e-15);
  CHECK_ABS(bvp_initial_closed_form(7.0), 0.29100700155131672, 1e-15);
  CHECK_ABS(bvp_initial_closed_form(9.0), -0.078509375747877768, 1e-15);
  CHECK_THROWS_AS(bvp_initial_closed_form(2.0 * kPi), PoleError);
  for (double r : {1.0, kPi, 5.0, 7.0, 9.0}) {
    CAPTURE(r);
    const auto res = abel_limit([r](double t) { return heat_u(r, t, 1.0); });
    CHECK(res.converged);
    CHECK_ABS(res.value, bvp_initial_closed_form(r), 1e-5);
  }
  const auto c = abel_limit([](double) { return SeriesValue{2.5, 1, 0.0}; });
  CHECK(c.value == 2.5);
}

TEST_CASE("heat surrogate") {
  CHECK_REL(j0_asymptotic_pair(10.0), -0.24676089338364255, 1e-14);
  const auto s = heat_surrogate_scaled(40.0, 0.1, 1.0);
  CHECK(std::fabs(std::sqrt(40.0) * heat_u(40.0, 0.1, 1.0).value - s.value) < 0.05);
}
