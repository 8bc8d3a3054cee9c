#include <cstdlib>
#include <string_view>

#include "besselxi/kernels.hpp"

namespace besselxi::kernels {

namespace {

Isa detect() {
  if (const char* forced = std::getenv("BESSELXI_ISA")) {
    if (std::string_view(forced) == "scalar") return Isa::scalar;
  }
  return avx2::available() ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double gaussian_sum(double c, std::int64_t first, std::int64_t last) {
  if (active_isa() == Isa::avx2) return avx2::gaussian_sum(c, first, last);
  return scalar::gaussian_sum(c, first, last);
}

Complex dirichlet_sum(Complex s, std::int64_t count) {
  if (active_isa() == Isa::avx2) return avx2::dirichlet_sum(s, count);
  return scalar::dirichlet_sum(s, count);
}

}  // namespace besselxi::kernels
