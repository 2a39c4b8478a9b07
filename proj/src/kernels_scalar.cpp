#include "iosim/kernels.hpp"

#include <cmath>

namespace iosim::kernels::detail {

cplx phasor_sum_scalar(const double* re, const double* im, const double* phase,
                       std::size_t n) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::cos(phase[i]);
    const double s = std::sin(phase[i]);
    acc_re += re[i] * c - im[i] * s;
    acc_im += re[i] * s + im[i] * c;
  }
  return {acc_re, acc_im};
}

cplx steering_sum_scalar(const double* re, const double* im, const double* px,
                         const double* py, const double* pz, double kx,
                         double ky, double kz, std::size_t n) {
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double phase = kx * px[i] + ky * py[i] + kz * pz[i];
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    acc_re += re[i] * c - im[i] * s;
    acc_im += re[i] * s + im[i] * c;
  }
  return {acc_re, acc_im};
}

} // namespace iosim::kernels::detail
