#include "iosim/kernels.hpp"

#if defined(__x86_64__)

#include <immintrin.h>

namespace iosim::kernels::detail {
namespace {

// Vector sin/cos with argument reduction modulo pi/2 (fdlibm-style split
// constants) and Cephes minimax polynomials on the reduced interval.
constexpr double kTwoOverPi = 0.63661977236758134308;
constexpr double kPio2Hi = 1.57079632673412561417e+00;
constexpr double kPio2Lo = 6.07710050650619224932e-11;

constexpr double kSinCoef[6] = {
    1.58962301576546568060e-10, -2.50507477628578072866e-8,
    2.75573136213857245213e-6,  -1.98412698295895385996e-4,
    8.33333333332211858878e-3,  -1.66666666666666307295e-1};
constexpr double kCosCoef[6] = {
    -1.13585365213876817300e-11, 2.08757008419747316778e-9,
    -2.75573141792967388112e-7,  2.48015872888517179954e-5,
    -1.38888888888730564116e-3,  4.16666666666665929218e-2};

inline __m256d polevl(__m256d z, const double* coef) {
  __m256d r = _mm256_set1_pd(coef[0]);
  for (int i = 1; i < 6; ++i)
    r = _mm256_fmadd_pd(r, z, _mm256_set1_pd(coef[i]));
  return r;
}

inline void sincos4(__m256d x, __m256d& sin_out, __m256d& cos_out) {
  const __m256d j =
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Hi), x);
  r = _mm256_fnmadd_pd(j, _mm256_set1_pd(kPio2Lo), r);

  const __m256d z = _mm256_mul_pd(r, r);
  // sin(r) = r + r*z*P(z), cos(r) = 1 - z/2 + z^2*Q(z)
  const __m256d sin_r =
      _mm256_fmadd_pd(_mm256_mul_pd(r, z), polevl(z, kSinCoef), r);
  __m256d cos_r = _mm256_fnmadd_pd(z, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0));
  cos_r = _mm256_fmadd_pd(_mm256_mul_pd(z, z), polevl(z, kCosCoef), cos_r);

  // Quadrant q = j mod 4 in {0,1,2,3}:
  //   sin(x) = [sin_r, cos_r, -sin_r, -cos_r][q]
  //   cos(x) = [cos_r, -sin_r, -cos_r, sin_r][q]
  const __m256d q = _mm256_sub_pd(
      j, _mm256_mul_pd(
             _mm256_set1_pd(4.0),
             _mm256_floor_pd(_mm256_mul_pd(j, _mm256_set1_pd(0.25)))));
  const __m256d q1 = _mm256_cmp_pd(q, _mm256_set1_pd(0.5), _CMP_GT_OQ);
  const __m256d q2 = _mm256_cmp_pd(q, _mm256_set1_pd(1.5), _CMP_GT_OQ);
  const __m256d q3 = _mm256_cmp_pd(q, _mm256_set1_pd(2.5), _CMP_GT_OQ);

  const __m256d odd = _mm256_andnot_pd(q2, q1); // q==1
  const __m256d q_is3 = q3;                     // q==3
  const __m256d do_swap = _mm256_or_pd(odd, q_is3);
  const __m256d sin_neg = q2;                             // q in {2,3}
  const __m256d cos_neg = _mm256_andnot_pd(q3, _mm256_or_pd(odd, q2)); // {1,2}

  const __m256d s_base = _mm256_blendv_pd(sin_r, cos_r, do_swap);
  const __m256d c_base = _mm256_blendv_pd(cos_r, sin_r, do_swap);
  const __m256d sign = _mm256_set1_pd(-0.0);
  sin_out = _mm256_xor_pd(s_base, _mm256_and_pd(sin_neg, sign));
  cos_out = _mm256_xor_pd(c_base, _mm256_and_pd(cos_neg, sign));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

cplx phasor_sum_avx2(const double* re, const double* im, const double* phase,
                     std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w_re = _mm256_loadu_pd(re + i);
    const __m256d w_im = _mm256_loadu_pd(im + i);
    const __m256d ph = _mm256_loadu_pd(phase + i);
    __m256d s, c;
    sincos4(ph, s, c);
    acc_re = _mm256_add_pd(acc_re,
                           _mm256_fnmadd_pd(w_im, s, _mm256_mul_pd(w_re, c)));
    acc_im =
        _mm256_add_pd(acc_im, _mm256_fmadd_pd(w_re, s, _mm256_mul_pd(w_im, c)));
  }
  cplx tail = phasor_sum_scalar(re + i, im + i, phase + i, n - i);
  return {hsum(acc_re) + tail.real(), hsum(acc_im) + tail.imag()};
}

cplx steering_sum_avx2(const double* re, const double* im, const double* px,
                       const double* py, const double* pz, double kx, double ky,
                       double kz, std::size_t n) {
  const __m256d vkx = _mm256_set1_pd(kx);
  const __m256d vky = _mm256_set1_pd(ky);
  const __m256d vkz = _mm256_set1_pd(kz);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d ph = _mm256_mul_pd(vkx, _mm256_loadu_pd(px + i));
    ph = _mm256_fmadd_pd(vky, _mm256_loadu_pd(py + i), ph);
    ph = _mm256_fmadd_pd(vkz, _mm256_loadu_pd(pz + i), ph);
    const __m256d w_re = _mm256_loadu_pd(re + i);
    const __m256d w_im = _mm256_loadu_pd(im + i);
    __m256d s, c;
    sincos4(ph, s, c);
    acc_re = _mm256_add_pd(acc_re,
                           _mm256_fnmadd_pd(w_im, s, _mm256_mul_pd(w_re, c)));
    acc_im =
        _mm256_add_pd(acc_im, _mm256_fmadd_pd(w_re, s, _mm256_mul_pd(w_im, c)));
  }
  cplx tail =
      steering_sum_scalar(re + i, im + i, px + i, py + i, pz + i, kx, ky, kz,
                          n - i);
  return {hsum(acc_re) + tail.real(), hsum(acc_im) + tail.imag()};
}

} // namespace iosim::kernels::detail

#endif // __x86_64__
