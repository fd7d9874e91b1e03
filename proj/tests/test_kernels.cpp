// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"

using namespace haarbeam;

namespace {

struct SweepCase {
    std::vector<double> step;
    std::vector<double> exc_re;
    std::vector<double> exc_im;
};

SweepCase make_case(std::size_t points, std::size_t elements, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    SweepCase out;
    out.step.resize(points);
    out.exc_re.resize(elements);
    out.exc_im.resize(elements);
    for (double& v : out.step) v = angle(rng);
    for (double& v : out.exc_re) v = amp(rng);
    for (double& v : out.exc_im) v = amp(rng);
    return out;
}

bool bit_identical(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar steered sum matches a direct phasor evaluation") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{16}, std::size_t{64}}) {
        const SweepCase c = make_case(37, n, 100u + static_cast<unsigned>(n));
        std::vector<double> out_re(c.step.size()), out_im(c.step.size());
        kernels::steered_sum_with(kernels::Variant::scalar, c.step, c.exc_re, c.exc_im, out_re,
                                  out_im);
        for (std::size_t i = 0; i < c.step.size(); ++i) {
            std::complex<double> expected{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                expected += std::complex<double>(c.exc_re[k], c.exc_im[k]) *
                            std::polar(1.0, static_cast<double>(k) * c.step[i]);
            }
            CHECK(std::abs(std::complex<double>(out_re[i], out_im[i]) - expected) <=
                  1e-12 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("SIMD variants are bit-identical to the scalar reference") {
    const auto variants = kernels::available_variants();
    CHECK(!variants.empty());
    CHECK(std::find(variants.begin(), variants.end(), kernels::active_variant()) != variants.end());

    for (kernels::Variant variant : variants) {
        if (variant == kernels::Variant::scalar) continue;
        for (std::size_t points : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                                   std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{67},
                                   std::size_t{256}}) {
            for (std::size_t n : {std::size_t{1}, std::size_t{4}, std::size_t{16}}) {
                const SweepCase c =
                    make_case(points, n, 7u + static_cast<unsigned>(points * 31 + n));
                std::vector<double> ref_re(points), ref_im(points);
                std::vector<double> simd_re(points), simd_im(points);
                kernels::steered_sum_with(kernels::Variant::scalar, c.step, c.exc_re, c.exc_im,
                                          ref_re, ref_im);
                kernels::steered_sum_with(variant, c.step, c.exc_re, c.exc_im, simd_re, simd_im);
                CAPTURE(kernels::variant_name(variant));
                CAPTURE(points);
                CAPTURE(n);
                CHECK(bit_identical(ref_re, simd_re));
                CHECK(bit_identical(ref_im, simd_im));

                std::vector<double> ref_mag(points), simd_mag(points);
                kernels::magnitude_squared_with(kernels::Variant::scalar, ref_re, ref_im, ref_mag);
                kernels::magnitude_squared_with(variant, ref_re, ref_im, simd_mag);
                CHECK(bit_identical(ref_mag, simd_mag));
            }
        }
    }
}

TEST_CASE("dispatch guards shapes and availability") {
    std::vector<double> step(4, 0.0), re(2, 0.0), im(3, 0.0), out(4, 0.0);
    CHECK_THROWS_AS(kernels::steered_sum(step, re, im, out, out), std::invalid_argument);
    std::vector<double> im2(2, 0.0), short_out(3, 0.0);
    CHECK_THROWS_AS(kernels::steered_sum(step, re, im2, short_out, short_out),
                    std::invalid_argument);

#if defined(__x86_64__) || defined(_M_X64)
    CHECK_FALSE(kernels::variant_available(kernels::Variant::neon));
    CHECK_THROWS_AS(kernels::steered_sum_with(kernels::Variant::neon, step, re, im2,
                                              {out.data(), 4}, {out.data(), 4}),
                    std::invalid_argument);
#endif

    CHECK(kernels::variant_name(kernels::Variant::scalar) == std::string("scalar"));
    CHECK(kernels::variant_name(kernels::Variant::avx2) == std::string("avx2"));
    CHECK(kernels::variant_name(kernels::Variant::neon) == std::string("neon"));
}
