#include <cstdlib>

#include "besselxi/kernels.hpp"
#include "check_close.hpp"

using namespace besselxi;
using namespace besselxi::kernels;

TEST_CASE("gaussian_sum: avx2 matches scalar reference") {
  if (!avx2::available()) return;
  for (double c : {1e-6, 1e-3, 0.01, 0.5, 1.0, kPi, 40.0}) {
    for (long first : {0L, 1L, 3L, 17L}) {
      for (long count : {0L, 1L, 5L, 8L, 129L, 4099L}) {
        const double ref = scalar::gaussian_sum(c, first, first + count);
        const double vec = avx2::gaussian_sum(c, first, first + count);
        CHECK(std::fabs(vec - ref) <= 1e-14 * std::max(1.0, std::fabs(ref)));
      }
    }
  }
}

TEST_CASE("gaussian_sum: underflowing terms") {
  CHECK(scalar::gaussian_sum(1.0, 40, 100) == 0.0);
  if (avx2::available()) CHECK(avx2::gaussian_sum(1.0, 40, 100) == 0.0);
}

TEST_CASE("dirichlet_sum: avx2 matches scalar reference") {
  if (!avx2::available()) return;
  const Complex points[] = {{0.5, 14.13}, {2.0, 0.0}, {0.3, -250.0}, {-1.5, 3.0}, {3.0, 1e4}};
  for (Complex s : points) {
    for (long count : {1L, 3L, 4L, 63L, 1000L, 70000L}) {
      const Complex ref = scalar::dirichlet_sum(s, count);
      const Complex vec = avx2::dirichlet_sum(s, count);
      const double scale = std::max(1.0, std::abs(ref)) * std::sqrt(static_cast<double>(count)) *
                           std::pow(static_cast<double>(count), std::max(0.0, -s.real()));
      CHECK(std::abs(vec - ref) <= 1e-14 * scale * std::max(1.0, std::abs(s.imag()) * 1e-3));
    }
  }
}

TEST_CASE("dirichlet_sum: small known values") {
  CHECK_REL(scalar::dirichlet_sum({2.0, 0.0}, 3), Complex(1.0 + 0.25 + 1.0 / 9.0, 0.0), 1e-15);
  CHECK_REL(dirichlet_sum({1.0, 0.0}, 4), Complex(25.0 / 12.0, 0.0), 1e-15);
}

TEST_CASE("dispatch reports an isa") {
  const Isa isa = active_isa();
  CHECK((isa == Isa::scalar || avx2::available()));
  CHECK(std::string(isa_name(isa)).size() > 0);
}
