// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>

namespace haarbeam::kernels::detail {

// Scalar reference kernels.  The SIMD variants follow the same operation
// sequence lane-for-lane; keep the three implementations in sync.
void steered_sum_scalar(std::span<const double> step,
                        std::span<const double> exc_re,
                        std::span<const double> exc_im,
                        std::span<double> out_re,
                        std::span<double> out_im);

void magnitude_squared_scalar(std::span<const double> re,
                              std::span<const double> im,
                              std::span<double> out);

#if defined(__x86_64__) || defined(_M_X64)
void steered_sum_avx2(std::span<const double> step,
                      std::span<const double> exc_re,
                      std::span<const double> exc_im,
                      std::span<double> out_re,
                      std::span<double> out_im);

void magnitude_squared_avx2(std::span<const double> re,
                            std::span<const double> im,
                            std::span<double> out);
#endif

#if defined(__aarch64__)
void steered_sum_neon(std::span<const double> step,
                      std::span<const double> exc_re,
                      std::span<const double> exc_im,
                      std::span<double> out_re,
                      std::span<double> out_im);

void magnitude_squared_neon(std::span<const double> re,
                            std::span<const double> im,
                            std::span<double> out);
#endif

}  // namespace haarbeam::kernels::detail
