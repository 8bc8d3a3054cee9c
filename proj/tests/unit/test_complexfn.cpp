#include "besselxi/complexfn.hpp"
#include "check_close.hpp"

using namespace besselxi;

// Reference values computed with mpmath at 40 digits.

TEST_CASE("complex_gamma against reference values") {
  CHECK_REL(complex_gamma({1.0, 1.0}), Complex(0.49801566811835604, -0.15494982830181069), 1e-13);
  CHECK_REL(complex_gamma({-2.5, 3.0}), Complex(4.7978841084189701e-4, 2.9885571114485887e-4), 1e-12);
  CHECK_REL(complex_gamma({0.2, 40.0}), Complex(4.1205595221486291e-28, 1.1390929170869563e-28), 1e-12);
  CHECK_REL(complex_gamma({30.5, 0.0}), Complex(4.8226969334909086e31, 0.0), 1e-13);
  CHECK_REL(complex_gamma({0.5, 0.0}), Complex(std::sqrt(kPi), 0.0), 1e-14);
}

TEST_CASE("complex_gamma poles and overflow") {
  CHECK_THROWS_AS(complex_gamma({0.0, 0.0}), PoleError);
  CHECK_THROWS_AS(complex_gamma({-3.0, 0.0}), PoleError);
  CHECK_THROWS_AS(complex_gamma({200.0, 0.0}), OverflowError);
  CHECK_NOTHROW(log_gamma({200.0, 0.0}));
}

TEST_CASE("complex_gamma reflection consistency") {
  const Complex z(0.3, 2.7);
  const Complex lhs = complex_gamma(z) * complex_gamma(1.0 - z);
  CHECK_REL(lhs, kPi / sin_pi(z), 1e-13);
}

TEST_CASE("zeta against reference values") {
  CHECK_REL(zeta({2.0, 0.0}), Complex(kPi * kPi / 6.0, 0.0), 1e-14);
  CHECK_REL(zeta({0.3, 20.0}), Complex(0.26899441575398691, -1.2884234180483038), 1e-12);
  CHECK_REL(zeta({2.5, -7.0}), Complex(1.0180852073245254, -0.12962707463732325), 1e-12);
  CHECK_REL(zeta({0.7, 95.0}), Complex(0.35991322590665411, 0.083162243172800328), 1e-11);
  CHECK_REL(zeta({-1.5, 3.0}), Complex(0.20132883054215033, 0.097149743015620041), 1e-12);
  CHECK_REL(zeta({1.0, 1e-4}), Complex(0.57721566494998468, -9999.9999927184155), 1e-12);
  CHECK_REL(zeta({0.0, 0.0}), Complex(-0.5, 0.0), 1e-14);
}

TEST_CASE("zeta pole and budget") {
  CHECK_THROWS_AS(zeta({1.0, 0.0}), PoleError);
  EvalRequest tiny;
  tiny.max_terms = 5;
  CHECK_THROWS_AS(zeta({0.5, 500.0}, tiny), ConvergenceError);
  CHECK_REL(zeta_times_sminus1({1.0, 0.0}), Complex(1.0, 0.0), 1e-14);
}

TEST_CASE("xi and Xi") {
  CHECK_REL(xi_completed({0.5, 0.0}), Complex(0.49712077818831411, 0.0), 1e-13);
  CHECK_REL(xi_completed({0.3, 2.0}), Complex(0.45344861882575758, -0.0084367380614749771), 1e-12);
  CHECK_REL(xi_completed({0.0, 0.0}), Complex(0.5, 0.0), 1e-13);
  CHECK_REL(xi_completed({1.0, 0.0}), Complex(0.5, 0.0), 1e-13);
  CHECK_REL(Xi(3.7), 0.36101258892560561, 1e-12);
  CHECK_REL(Xi(30.0), -1.5016622479802074e-8, 1e-9);
  CHECK(Xi(-3.7) == doctest::Approx(Xi(3.7)).epsilon(1e-15));
  // Functional equation ξ(s) = ξ(1 − s).
  const Complex s(0.2, 5.5);
  CHECK_REL(xi_completed(s), xi_completed(1.0 - s), 1e-12);
}

TEST_CASE("scan_xi_zeros finds the first three ordinates") {
  const auto zeros = scan_xi_zeros(26.0);
  REQUIRE(zeros.size() == 3);
  CHECK_ABS(zeros[0].mid(), 14.134725141734694, 1e-9);
  CHECK_ABS(zeros[1].mid(), 21.022039638771555, 1e-9);
  CHECK_ABS(zeros[2].mid(), 25.010857580145689, 1e-9);
}
