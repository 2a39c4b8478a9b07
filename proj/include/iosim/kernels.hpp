#pragma once

#include <complex>
#include <cstddef>

// Data-parallel accumulation kernels used by the pattern and channel code.
// Scalar reference implementations plus AVX2 variants selected at runtime.

namespace iosim::kernels {

using cplx = std::complex<double>;

enum class Impl { Scalar, Avx2 };

Impl active_impl();
bool avx2_supported();

// Pin the implementation (tests use this to compare lanes). Throws
// CapabilityError if the requested lane is unavailable on this CPU.
void force_impl(Impl impl);
void reset_impl();

// sum_i (re[i] + j*im[i]) * exp(j*phase[i])
cplx phasor_sum(const double* re, const double* im, const double* phase,
                std::size_t n);

// sum_i (re[i] + j*im[i]) * exp(j*(kx*px[i] + ky*py[i] + kz*pz[i]))
cplx steering_sum(const double* re, const double* im, const double* px,
                  const double* py, const double* pz, double kx, double ky,
                  double kz, std::size_t n);

namespace detail {
cplx phasor_sum_scalar(const double* re, const double* im, const double* phase,
                       std::size_t n);
cplx steering_sum_scalar(const double* re, const double* im, const double* px,
                         const double* py, const double* pz, double kx,
                         double ky, double kz, std::size_t n);
#if defined(__x86_64__)
cplx phasor_sum_avx2(const double* re, const double* im, const double* phase,
                     std::size_t n);
cplx steering_sum_avx2(const double* re, const double* im, const double* px,
                       const double* py, const double* pz, double kx, double ky,
                       double kz, std::size_t n);
#endif
} // namespace detail

} // namespace iosim::kernels
