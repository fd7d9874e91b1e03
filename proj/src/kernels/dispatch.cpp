// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/kernels.hpp"

#include <stdexcept>
#include <string>

#include "kernels_internal.hpp"

namespace haarbeam::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void require_shapes(std::span<const double> step,
                    std::span<const double> exc_re,
                    std::span<const double> exc_im,
                    std::span<double> out_re,
                    std::span<double> out_im) {
    if (exc_re.size() != exc_im.size()) {
        throw std::invalid_argument("excitation re/im lengths differ");
    }
    if (out_re.size() != step.size() || out_im.size() != step.size()) {
        throw std::invalid_argument("kernel output length must match sweep length");
    }
}

}  // namespace

const char* variant_name(Variant variant) {
    switch (variant) {
        case Variant::scalar: return "scalar";
        case Variant::avx2: return "avx2";
        case Variant::neon: return "neon";
    }
    return "unknown";
}

bool variant_available(Variant variant) {
    switch (variant) {
        case Variant::scalar:
            return true;
        case Variant::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return cpu_has_avx2();
#else
            return false;
#endif
        case Variant::neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

std::vector<Variant> available_variants() {
    std::vector<Variant> out{Variant::scalar};
    if (variant_available(Variant::avx2)) out.push_back(Variant::avx2);
    if (variant_available(Variant::neon)) out.push_back(Variant::neon);
    return out;
}

Variant active_variant() {
    if (variant_available(Variant::avx2)) return Variant::avx2;
    if (variant_available(Variant::neon)) return Variant::neon;
    return Variant::scalar;
}

void steered_sum_with(Variant variant,
                      std::span<const double> step,
                      std::span<const double> exc_re,
                      std::span<const double> exc_im,
                      std::span<double> out_re,
                      std::span<double> out_im) {
    require_shapes(step, exc_re, exc_im, out_re, out_im);
    if (!variant_available(variant)) {
        throw std::invalid_argument(std::string("kernel variant unavailable: ") +
                                    variant_name(variant));
    }
    switch (variant) {
        case Variant::scalar:
            detail::steered_sum_scalar(step, exc_re, exc_im, out_re, out_im);
            return;
        case Variant::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            detail::steered_sum_avx2(step, exc_re, exc_im, out_re, out_im);
            return;
#else
            break;
#endif
        case Variant::neon:
#if defined(__aarch64__)
            detail::steered_sum_neon(step, exc_re, exc_im, out_re, out_im);
            return;
#else
            break;
#endif
    }
    detail::steered_sum_scalar(step, exc_re, exc_im, out_re, out_im);
}

void steered_sum(std::span<const double> step,
                 std::span<const double> exc_re,
                 std::span<const double> exc_im,
                 std::span<double> out_re,
                 std::span<double> out_im) {
    steered_sum_with(active_variant(), step, exc_re, exc_im, out_re, out_im);
}

void magnitude_squared_with(Variant variant,
                            std::span<const double> re,
                            std::span<const double> im,
                            std::span<double> out) {
    if (re.size() != im.size() || out.size() != re.size()) {
        throw std::invalid_argument("magnitude_squared spans must share one length");
    }
    if (!variant_available(variant)) {
        throw std::invalid_argument(std::string("kernel variant unavailable: ") +
                                    variant_name(variant));
    }
    switch (variant) {
        case Variant::scalar:
            detail::magnitude_squared_scalar(re, im, out);
            return;
        case Variant::avx2:
#if defined(__x86_64__) || defined(_M_X64)
            detail::magnitude_squared_avx2(re, im, out);
            return;
#else
            break;
#endif
        case Variant::neon:
#if defined(__aarch64__)
            detail::magnitude_squared_neon(re, im, out);
            return;
#else
            break;
#endif
    }
    detail::magnitude_squared_scalar(re, im, out);
}

void magnitude_squared(std::span<const double> re,
                       std::span<const double> im,
                       std::span<double> out) {
    magnitude_squared_with(active_variant(), re, im, out);
}

}  // namespace haarbeam::kernels
