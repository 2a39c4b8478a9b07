#include "iosim/kernels.hpp"

#include <atomic>
#include <cstdlib>

#include "iosim/errors.hpp"

namespace iosim::kernels {
namespace {

Impl detect() {
#if defined(__x86_64__)
  if (std::getenv("IOSIM_NO_AVX2") == nullptr && __builtin_cpu_supports("avx2"))
    return Impl::Avx2;
#endif
  return Impl::Scalar;
}

std::atomic<Impl> g_impl{detect()};

} // namespace

bool avx2_supported() {
#if defined(__x86_64__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Impl active_impl() { return g_impl.load(); }

void force_impl(Impl impl) {
  if (impl == Impl::Avx2 && !avx2_supported())
    throw CapabilityError("AVX2 lane not available on this CPU");
  g_impl.store(impl);
}

void reset_impl() { g_impl.store(detect()); }

cplx phasor_sum(const double* re, const double* im, const double* phase,
                std::size_t n) {
#if defined(__x86_64__)
  if (g_impl.load() == Impl::Avx2)
    return detail::phasor_sum_avx2(re, im, phase, n);
#endif
  return detail::phasor_sum_scalar(re, im, phase, n);
}

cplx steering_sum(const double* re, const double* im, const double* px,
                  const double* py, const double* pz, double kx, double ky,
                  double kz, std::size_t n) {
#if defined(__x86_64__)
  if (g_impl.load() == Impl::Avx2)
    return detail::steering_sum_avx2(re, im, px, py, pz, kx, ky, kz, n);
#endif
  return detail::steering_sum_scalar(re, im, px, py, pz, kx, ky, kz, n);
}

} // namespace iosim::kernels
