#include <cmath>
#include <limits>

#include "besselxi/series.hpp"

namespace besselxi {

AbelResult abel_limit(const std::function<SeriesValue(double)>& family, const GeometricGrid& grid) {
  if (grid.count < 4) throw DomainError("abel_limit: need at least 4 grid points");
  if (!(grid.start > 0.0) || !(grid.ratio > 0.0 && grid.ratio < 1.0)) {
    throw DomainError("abel_limit: grid must decrease geometrically to 0");
  }
  const int n = grid.count;
  AbelResult out;
  // table[i][j]: j-fold Richardson elimination of t, t², ... on samples 0..i.
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  double t = grid.start;
  for (int i = 0; i < n; ++i, t *= grid.ratio) {
    table[i][0] = family(t).value;
    out.samples.push_back(table[i][0]);
    double factor = 1.0;
    for (int j = 1; j <= i; ++j) {
      factor /= grid.ratio;  // q^{-j}
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
  }
  // Take the last-row entry whose change from the previous row is smallest.
  double best_diff = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n - 1; ++j) {
    const double diff = std::fabs(table[n - 1][j] - table[n - 2][j]);
    if (diff < best_diff) {
      best_diff = diff;
      out.value = table[n - 1][j];
    }
  }
  out.error_estimate = best_diff;
  // Contraction: the raw samples should settle, and extrapolation should
  // improve on them.
  const double raw_diff = std::fabs(table[n - 1][0] - table[n - 2][0]);
  const double prev_raw = std::fabs(table[n - 2][0] - table[n - 3][0]);
  out.converged = std::isfinite(out.value) && best_diff <= raw_diff && raw_diff <= 1.5 * prev_raw + 1e-300;
  return out;
}

double bvp_initial_closed_form(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("bvp_initial_closed_form: r must be positive");
  const double turns = r / (2.0 * kPi);
  const double nearest = std::round(turns);
  if (nearest >= 1.0 && std::fabs(turns - nearest) <= 1e-14 * turns) {
    throw PoleError("bvp_initial_closed_form: r is a multiple of 2π");
  }
  const long n = static_cast<long>(std::floor(turns));
  double sum = -0.5 + 1.0 / r;
  for (long m = 1; m <= n; ++m) {
    const double tm = 2.0 * kPi * static_cast<double>(m);
    sum += 2.0 / std::sqrt(r * r - tm * tm);
  }
  return sum;
}

}  // namespace besselxi
