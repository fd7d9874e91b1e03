// SPDX-License-Identifier: Apache-2.0
//
// Scalar reference kernels.  Built with -ffp-contract=off: no FMA fusion,
// no reassociation, so each statement below is one IEEE operation and the
// SIMD variants can reproduce the results bit-exactly.

#include "kernels_internal.hpp"

#include <cmath>
#include <cstddef>

namespace haarbeam::kernels::detail {

void steered_sum_scalar(std::span<const double> step,
                        std::span<const double> exc_re,
                        std::span<const double> exc_im,
                        std::span<double> out_re,
                        std::span<double> out_im) {
    const std::size_t points = step.size();
    const std::size_t n = exc_re.size();
    for (std::size_t i = 0; i < points; ++i) {
        const double c = std::cos(step[i]);
        const double s = std::sin(step[i]);
        double phasor_re = 1.0;
        double phasor_im = 0.0;
        double acc_re = 0.0;
        double acc_im = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            acc_re = acc_re + (exc_re[k] * phasor_re - exc_im[k] * phasor_im);
            acc_im = acc_im + (exc_re[k] * phasor_im + exc_im[k] * phasor_re);
            const double rotated_re = phasor_re * c - phasor_im * s;
            phasor_im = phasor_re * s + phasor_im * c;
            phasor_re = rotated_re;
        }
        out_re[i] = acc_re;
        out_im[i] = acc_im;
    }
}

void magnitude_squared_scalar(std::span<const double> re,
                              std::span<const double> im,
                              std::span<double> out) {
    const std::size_t n = re.size();
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = re[i] * re[i] + im[i] * im[i];
    }
}

}  // namespace haarbeam::kernels::detail
