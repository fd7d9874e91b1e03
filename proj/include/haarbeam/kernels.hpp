// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops for pattern sweeps, with a scalar reference
// implementation and SIMD variants (AVX2 on x86-64, NEON on aarch64)
// selected at runtime.  All variants execute the same IEEE operation
// sequence per output element, so results are bit-identical regardless of
// which one runs; the equivalence suite asserts exact equality.

#pragma once

#include <span>
#include <string>
#include <vector>

namespace haarbeam::kernels {

enum class Variant {
    scalar,
    avx2,
    neon,
};

const char* variant_name(Variant variant);

/// Variants compiled into this binary and usable on this CPU.
std::vector<Variant> available_variants();

bool variant_available(Variant variant);

/// The variant the auto-dispatching entry points will use.
Variant active_variant();

/// out[i] = sum_{n=0}^{N-1} (exc_re[n] + j exc_im[n]) * exp(j * n * step[i]).
///
/// `step[i]` is the per-element phase increment of sweep point i (for a
/// uniform line array, k * d * cos(theta_i)).  The sum runs in ascending n
/// via a unit-modulus phasor recurrence.
void steered_sum(std::span<const double> step,
                 std::span<const double> exc_re,
                 std::span<const double> exc_im,
                 std::span<double> out_re,
                 std::span<double> out_im);

void steered_sum_with(Variant variant,
                      std::span<const double> step,
                      std::span<const double> exc_re,
                      std::span<const double> exc_im,
                      std::span<double> out_re,
                      std::span<double> out_im);

/// out[i] = re[i]^2 + im[i]^2.
void magnitude_squared(std::span<const double> re,
                       std::span<const double> im,
                       std::span<double> out);

void magnitude_squared_with(Variant variant,
                            std::span<const double> re,
                            std::span<const double> im,
                            std::span<double> out);

}  // namespace haarbeam::kernels
