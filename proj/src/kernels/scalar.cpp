#include <cmath>
#include <vector>

#include "besselxi/kernels.hpp"

namespace besselxi::kernels {

namespace detail {

const double* log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kLogTableSize, 0.0);
    for (std::int64_t n = 1; n < kLogTableSize; ++n) t[n] = std::log(static_cast<double>(n));
    return t;
  }();
  return table.data();
}

}  // namespace detail

namespace scalar {

double gaussian_sum(double c, std::int64_t first, std::int64_t last) {
  double sum = 0.0;
  for (std::int64_t n = first; n <= last; ++n) {
    const double nd = static_cast<double>(n);
    sum += std::exp(-c * nd * nd);
  }
  return sum;
}

Complex dirichlet_sum(Complex s, std::int64_t count) {
  const double* logs = detail::log_table();
  double re = 0.0;
  double im = 0.0;
  for (std::int64_t n = 1; n <= count; ++n) {
    const double ln = n < detail::kLogTableSize ? logs[n] : std::log(static_cast<double>(n));
    const double mag = std::exp(-s.real() * ln);
    const double phase = s.imag() * ln;
    re += mag * std::cos(phase);
    im -= mag * std::sin(phase);
  }
  return {re, im};
}

}  // namespace scalar
}  // namespace besselxi::kernels
