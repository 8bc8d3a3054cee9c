// Compiled with -mavx2 -mfma; only reached when the CPU reports both.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "besselxi/kernels.hpp"

namespace besselxi::kernels::avx2 {

namespace {

// exp(x) for x in [-708, 709]; lanes below -708 flush to zero.
// Range reduction x = k ln2 + r, |r| <= ln2/2, then a degree-13 Taylor
// polynomial (truncation < 5e-18 relative).
inline __m256d exp_pd(__m256d x) {
  const __m256d lo = _mm256_set1_pd(-708.0);
  const __m256d hi = _mm256_set1_pd(709.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(6.93147180369123816490e-01), x);
  r = _mm256_fnmadd_pd(k, _mm256_set1_pd(1.90821492927058770002e-10), r);

  static constexpr double c[] = {
      1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0,
      1.0 / 40320.0,      1.0 / 5040.0,      1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,
      1.0 / 6.0,          0.5,               1.0,              1.0};
  __m256d p = _mm256_set1_pd(c[0]);
  for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(c[i]));

  // 2^k via the exponent field.
  const __m128i k32 = _mm256_cvtpd_epi32(k);
  __m256i e = _mm256_cvtepi32_epi64(k32);
  e = _mm256_add_epi64(e, _mm256_set1_epi64x(1023));
  e = _mm256_slli_epi64(e, 52);
  const __m256d scale = _mm256_castsi256_pd(e);
  return _mm256_andnot_pd(underflow, _mm256_mul_pd(p, scale));
}

// sin and cos together. Cody-Waite reduction by pi/2 in three parts is exact
// for |x| < 2^20 * pi/2, far above the phases seen in the zeta sums.
inline void sincos_pd(__m256d x, __m256d& s_out, __m256d& c_out) {
  const __m256d j = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(6.36619772367581382433e-01)),
                                    _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(j, _mm256_set1_pd(1.57079632673412561417e+00), x);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(6.07710050630396597660e-11), r);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(2.02226624879595063154e-21), r);
  const __m256d z = _mm256_mul_pd(r, r);

  __m256d ps = _mm256_set1_pd(1.58969099521155010221e-10);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507602534068634195e-08));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573137070700676789e-06));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698298579493134e-04));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332248946124e-03));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666324348e-01));
  const __m256d sin_r = _mm256_fmadd_pd(_mm256_mul_pd(ps, z), r, r);

  __m256d pc = _mm256_set1_pd(-1.13596475577881948265e-11);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757232129817482790e-09));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573143513906633035e-07));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872894767294178e-05));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888741095749e-03));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666666019037e-02));
  const __m256d half_z = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
  const __m256d w = _mm256_sub_pd(_mm256_set1_pd(1.0), half_z);
  // fdlibm's correction term keeps cos within an ulp near |r| = pi/4.
  const __m256d corr = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(1.0), w), half_z);
  const __m256d cos_r = _mm256_add_pd(w, _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, corr));

  // Quadrant q = j mod 4, computed in the double domain.
  const __m256d q = _mm256_sub_pd(
      j, _mm256_mul_pd(_mm256_set1_pd(4.0),
                       _mm256_floor_pd(_mm256_mul_pd(j, _mm256_set1_pd(0.25)))));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d is1 = _mm256_cmp_pd(q, one, _CMP_EQ_OQ);
  const __m256d is2 = _mm256_cmp_pd(q, two, _CMP_EQ_OQ);
  const __m256d is3 = _mm256_cmp_pd(q, three, _CMP_EQ_OQ);
  const __m256d swap = _mm256_or_pd(is1, is3);
  const __m256d sin_neg = _mm256_or_pd(is2, is3);
  const __m256d cos_neg = _mm256_or_pd(is1, is2);
  const __m256d sign = _mm256_set1_pd(-0.0);

  __m256d s = _mm256_blendv_pd(sin_r, cos_r, swap);
  __m256d c = _mm256_blendv_pd(cos_r, sin_r, swap);
  s = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, sign));
  c = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, sign));
  s_out = s;
  c_out = c;
}

inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

bool available() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

double gaussian_sum(double c, std::int64_t first, std::int64_t last) {
  if (last < first) return 0.0;
  __m256d acc = _mm256_setzero_pd();
  const __m256d neg_c = _mm256_set1_pd(-c);
  __m256d n = _mm256_set_pd(static_cast<double>(first + 3), static_cast<double>(first + 2),
                            static_cast<double>(first + 1), static_cast<double>(first));
  const __m256d step = _mm256_set1_pd(4.0);
  std::int64_t i = first;
  for (; i + 3 <= last; i += 4) {
    acc = _mm256_add_pd(acc, exp_pd(_mm256_mul_pd(neg_c, _mm256_mul_pd(n, n))));
    n = _mm256_add_pd(n, step);
  }
  double sum = hsum(acc);
  for (; i <= last; ++i) {
    const double nd = static_cast<double>(i);
    sum += std::exp(-c * nd * nd);
  }
  return sum;
}

Complex dirichlet_sum(Complex s, std::int64_t count) {
  const double* logs = detail::log_table();
  const std::int64_t vec_end = std::min<std::int64_t>(count, detail::kLogTableSize - 1);
  const __m256d neg_sigma = _mm256_set1_pd(-s.real());
  const __m256d tau = _mm256_set1_pd(s.imag());
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::int64_t n = 1;
  for (; n + 3 <= vec_end; n += 4) {
    const __m256d ln = _mm256_loadu_pd(logs + n);
    const __m256d mag = exp_pd(_mm256_mul_pd(neg_sigma, ln));
    __m256d sn;
    __m256d cs;
    sincos_pd(_mm256_mul_pd(tau, ln), sn, cs);
    acc_re = _mm256_fmadd_pd(mag, cs, acc_re);
    acc_im = _mm256_fnmadd_pd(mag, sn, acc_im);
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; n <= count; ++n) {
    const double ln = n < detail::kLogTableSize ? logs[n] : std::log(static_cast<double>(n));
    const double mag = std::exp(-s.real() * ln);
    re += mag * std::cos(s.imag() * ln);
    im -= mag * std::sin(s.imag() * ln);
  }
  return {re, im};
}

}  // namespace besselxi::kernels::avx2
