// SPDX-License-Identifier: Apache-2.0
//
// NEON variant: two sweep points per iteration, same per-lane operation
// sequence as the scalar kernel.

#if defined(__aarch64__)

#include "kernels_internal.hpp"

#include <arm_neon.h>

#include <cmath>
#include <cstddef>

namespace haarbeam::kernels::detail {

void steered_sum_neon(std::span<const double> step,
                      std::span<const double> exc_re,
                      std::span<const double> exc_im,
                      std::span<double> out_re,
                      std::span<double> out_im) {
    const std::size_t points = step.size();
    const std::size_t n = exc_re.size();
    const std::size_t vec_end = points - points % 2;

    for (std::size_t i = 0; i < vec_end; i += 2) {
        double cos_buf[2] = {std::cos(step[i]), std::cos(step[i + 1])};
        double sin_buf[2] = {std::sin(step[i]), std::sin(step[i + 1])};
        const float64x2_t c = vld1q_f64(cos_buf);
        const float64x2_t s = vld1q_f64(sin_buf);
        float64x2_t phasor_re = vdupq_n_f64(1.0);
        float64x2_t phasor_im = vdupq_n_f64(0.0);
        float64x2_t acc_re = vdupq_n_f64(0.0);
        float64x2_t acc_im = vdupq_n_f64(0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const float64x2_t er = vdupq_n_f64(exc_re[k]);
            const float64x2_t ei = vdupq_n_f64(exc_im[k]);
            acc_re = vaddq_f64(acc_re,
                               vsubq_f64(vmulq_f64(er, phasor_re), vmulq_f64(ei, phasor_im)));
            acc_im = vaddq_f64(acc_im,
                               vaddq_f64(vmulq_f64(er, phasor_im), vmulq_f64(ei, phasor_re)));
            const float64x2_t rotated_re =
                vsubq_f64(vmulq_f64(phasor_re, c), vmulq_f64(phasor_im, s));
            phasor_im = vaddq_f64(vmulq_f64(phasor_re, s), vmulq_f64(phasor_im, c));
            phasor_re = rotated_re;
        }
        vst1q_f64(out_re.data() + i, acc_re);
        vst1q_f64(out_im.data() + i, acc_im);
    }

    if (vec_end < points) {
        steered_sum_scalar(step.subspan(vec_end), exc_re, exc_im, out_re.subspan(vec_end),
                           out_im.subspan(vec_end));
    }
}

void magnitude_squared_neon(std::span<const double> re,
                            std::span<const double> im,
                            std::span<double> out) {
    const std::size_t n = re.size();
    const std::size_t vec_end = n - n % 2;
    for (std::size_t i = 0; i < vec_end; i += 2) {
        const float64x2_t r = vld1q_f64(re.data() + i);
        const float64x2_t m = vld1q_f64(im.data() + i);
        vst1q_f64(out.data() + i, vaddq_f64(vmulq_f64(r, r), vmulq_f64(m, m)));
    }
    if (vec_end < n) {
        magnitude_squared_scalar(re.subspan(vec_end), im.subspan(vec_end), out.subspan(vec_end));
    }
}

}  // namespace haarbeam::kernels::detail

#endif  // aarch64
