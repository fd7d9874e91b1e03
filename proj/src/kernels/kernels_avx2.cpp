// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variant: four sweep points per iteration.  The per-lane operation
// sequence matches the scalar kernel exactly (mul/add/sub only, trig values
// taken from the same libm calls), so outputs are bit-identical to it.

#if defined(__x86_64__) || defined(_M_X64)

#include "kernels_internal.hpp"

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace haarbeam::kernels::detail {

void steered_sum_avx2(std::span<const double> step,
                      std::span<const double> exc_re,
                      std::span<const double> exc_im,
                      std::span<double> out_re,
                      std::span<double> out_im) {
    const std::size_t points = step.size();
    const std::size_t n = exc_re.size();
    const std::size_t vec_end = points - points % 4;

    for (std::size_t i = 0; i < vec_end; i += 4) {
        alignas(32) double cos_buf[4];
        alignas(32) double sin_buf[4];
        for (int lane = 0; lane < 4; ++lane) {
            cos_buf[lane] = std::cos(step[i + lane]);
            sin_buf[lane] = std::sin(step[i + lane]);
        }
        const __m256d c = _mm256_load_pd(cos_buf);
        const __m256d s = _mm256_load_pd(sin_buf);
        __m256d phasor_re = _mm256_set1_pd(1.0);
        __m256d phasor_im = _mm256_setzero_pd();
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        for (std::size_t k = 0; k < n; ++k) {
            const __m256d er = _mm256_set1_pd(exc_re[k]);
            const __m256d ei = _mm256_set1_pd(exc_im[k]);
            acc_re = _mm256_add_pd(
                acc_re, _mm256_sub_pd(_mm256_mul_pd(er, phasor_re), _mm256_mul_pd(ei, phasor_im)));
            acc_im = _mm256_add_pd(
                acc_im, _mm256_add_pd(_mm256_mul_pd(er, phasor_im), _mm256_mul_pd(ei, phasor_re)));
            const __m256d rotated_re =
                _mm256_sub_pd(_mm256_mul_pd(phasor_re, c), _mm256_mul_pd(phasor_im, s));
            phasor_im = _mm256_add_pd(_mm256_mul_pd(phasor_re, s), _mm256_mul_pd(phasor_im, c));
            phasor_re = rotated_re;
        }
        _mm256_storeu_pd(out_re.data() + i, acc_re);
        _mm256_storeu_pd(out_im.data() + i, acc_im);
    }

    if (vec_end < points) {
        steered_sum_scalar(step.subspan(vec_end), exc_re, exc_im, out_re.subspan(vec_end),
                           out_im.subspan(vec_end));
    }
}

void magnitude_squared_avx2(std::span<const double> re,
                            std::span<const double> im,
                            std::span<double> out) {
    const std::size_t n = re.size();
    const std::size_t vec_end = n - n % 4;
    for (std::size_t i = 0; i < vec_end; i += 4) {
        const __m256d r = _mm256_loadu_pd(re.data() + i);
        const __m256d m = _mm256_loadu_pd(im.data() + i);
        _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_mul_pd(r, r), _mm256_mul_pd(m, m)));
    }
    if (vec_end < n) {
        magnitude_squared_scalar(re.subspan(vec_end), im.subspan(vec_end), out.subspan(vec_end));
    }
}

}  // namespace haarbeam::kernels::detail

#endif  // x86-64
