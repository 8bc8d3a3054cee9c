#include <algorithm>
#include <cmath>

#include "besselxi/besselhyp.hpp"

namespace besselxi {

namespace {

Complex taylor_1f1(Complex a, double b, Complex w, const EvalRequest& req) {
  Complex term(1.0, 0.0);
  Complex sum(1.0, 0.0);
  double peak = 1.0;
  int small_run = 0;
  for (int k = 0; k < req.max_terms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * w / ((b + kk) * (kk + 1.0));
    sum += term;
    peak = std::max(peak, std::abs(term));
    if (std::abs(term) <= req.target_rel_tol * std::abs(sum)) {
      if (++small_run >= 3) {
        // Cancellation from large intermediate terms limits the accuracy.
        if (peak * 1e-16 > 1e-6 * std::abs(sum)) {
          throw ConvergenceError("kummer_1f1: catastrophic cancellation in Taylor sum");
        }
        return sum;
      }
    } else {
      small_run = 0;
    }
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
      throw OverflowError("kummer_1f1: partial sum overflowed");
    }
  }
  throw ConvergenceError("kummer_1f1: term budget exhausted");
}

}  // namespace

Complex kummer_1f1(const KummerArgs& args, const EvalRequest& req) {
  req.validate();
  if (!is_finite(args.a) || !is_finite(args.w)) throw DomainError("kummer_1f1: non-finite input");
  if (args.w.real() < 0.0) {
    // Kummer's transformation keeps the terms from alternating in sign.
    return std::exp(args.w) * taylor_1f1(1.0 - args.a, 1.0, -args.w, req);
  }
  return taylor_1f1(args.a, 1.0, args.w, req);
}

Complex kummer_1f1_general(Complex a, double b, Complex w, const EvalRequest& req) {
  req.validate();
  if (!is_finite(a) || !is_finite(w) || !std::isfinite(b)) throw DomainError("kummer_1f1: non-finite input");
  if (!(b > 0.0)) throw DomainError("kummer_1f1: need b > 0");
  if (w.real() < 0.0) return std::exp(w) * taylor_1f1(b - a, b, -w, req);
  return taylor_1f1(a, b, w, req);
}

}  // namespace besselxi
