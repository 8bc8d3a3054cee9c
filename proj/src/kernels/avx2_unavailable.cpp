#include "besselxi/kernels.hpp"

namespace besselxi::kernels::avx2 {

bool available() { return false; }

double gaussian_sum(double c, std::int64_t first, std::int64_t last) {
  return scalar::gaussian_sum(c, first, last);
}

Complex dirichlet_sum(Complex s, std::int64_t count) { return scalar::dirichlet_sum(s, count); }

}  // namespace besselxi::kernels::avx2
