// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/spectrum.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "haarbeam/haar.hpp"
#include "oracles.hpp"

using namespace haarbeam;

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

int mod(int a, int b) { return ((a % b) + b) % b; }

}  // namespace

TEST_CASE("wavelet Fourier coefficients, closed form vs quadrature") {
    CHECK(spectrum::haar_fourier_coeff({0, 1}, 0) == std::complex<double>{0.0, 0.0});

    const std::complex<double> g011 = spectrum::haar_fourier_coeff({0, 1}, 1);
    CHECK(std::abs(g011 - std::complex<double>{0.0, -2.0 / kPi}) <= 1e-14);
    CHECK(std::abs(g011 - oracles::quad_haar_fourier(0, 1, 1)) <= 1e-9);

    CHECK(std::abs(spectrum::haar_fourier_coeff({0, 1}, 2)) <= 1e-14);

    for (int degree = 0; degree <= 3; ++degree) {
        for (int order = 1; order <= (1 << degree); ++order) {
            for (int q : {-17, -5, -1, 1, 2, 3, 9, 20}) {
                const std::complex<double> closed =
                    spectrum::haar_fourier_coeff({degree, order}, q);
                const std::complex<double> quad = oracles::quad_haar_fourier(degree, order, q);
                CAPTURE(degree);
                CAPTURE(order);
                CAPTURE(q);
                CHECK(std::abs(closed - quad) <= 1e-9);
            }
        }
    }

    CHECK_THROWS_AS(spectrum::haar_fourier_coeff({2, 5}, 1), std::domain_error);
}

TEST_CASE("waveform spectrum of the stair-step sine") {
    const haar::HaarCoefficients c32 = haar::hdwt_forward(haar::sample_sine(32));

    const double expected_c1 = std::sin(kPi / 32.0) / (kPi / 32.0) / 2.0;
    CHECK(std::abs(std::abs(spectrum::waveform_spectrum(c32, 1)) - expected_c1) <= 1e-12);

    CHECK(std::abs(spectrum::waveform_spectrum(c32, 2)) <= 1e-12);

    const double c31 = std::abs(spectrum::waveform_spectrum(c32, 31));
    CHECK(std::abs(c31 - 0.016103135371542249) <= 1e-12);
    CHECK(c31 * 31.0 == doctest::Approx(expected_c1).epsilon(1e-12));

    haar::WaveformSamples ones;
    ones.values.assign(8, 1.0);
    const haar::HaarCoefficients biased = haar::hdwt_forward(ones);
    CHECK_THROWS_AS(spectrum::waveform_spectrum(biased, 1), std::domain_error);
}

TEST_CASE("waveform spectrum support: only q = +/-1 mod M survives") {
    for (int m : {8, 16, 32}) {
        const haar::HaarCoefficients c = haar::hdwt_forward(haar::sample_sine(m));
        for (int q = -(2 * m + 2); q <= 2 * m + 2; ++q) {
            const double magnitude = std::abs(spectrum::waveform_spectrum(c, q));
            const int residue = mod(q, m);
            CAPTURE(m);
            CAPTURE(q);
            if (residue == 1 || residue == m - 1) {
                CHECK(magnitude > 1e-3);
            } else {
                CHECK(magnitude <= 1e-12);
            }
        }
    }
}

TEST_CASE("conjugate symmetry of the real waveform spectrum") {
    const haar::HaarCoefficients c16 = haar::hdwt_forward(haar::sample_sine(16));
    for (int q = 1; q <= 34; ++q) {
        const std::complex<double> pos = spectrum::waveform_spectrum(c16, q);
        const std::complex<double> neg = spectrum::waveform_spectrum(c16, -q);
        CHECK(std::abs(neg - std::conj(pos)) <= 1e-12);
    }
}

TEST_CASE("ssb gate takes its exact four values") {
    CHECK(spectrum::ssb_gate(1) == std::complex<double>{2.0, 0.0});
    CHECK(spectrum::ssb_gate(5) == std::complex<double>{2.0, 0.0});
    CHECK(spectrum::ssb_gate(-7) == std::complex<double>{2.0, 0.0});
    CHECK(spectrum::ssb_gate(9) == std::complex<double>{2.0, 0.0});
    CHECK(spectrum::ssb_gate(-1) == std::complex<double>{0.0, 0.0});
    CHECK(spectrum::ssb_gate(3) == std::complex<double>{0.0, 0.0});
    CHECK(spectrum::ssb_gate(-5) == std::complex<double>{0.0, 0.0});
    CHECK(spectrum::ssb_gate(2) == std::complex<double>{1.0, -1.0});
    CHECK(spectrum::ssb_gate(0) == std::complex<double>{1.0, 1.0});
    CHECK(spectrum::ssb_gate(-2) == std::complex<double>{1.0, -1.0});
}

TEST_CASE("pulse spectrum gates, scales, and rejects off-grid delays") {
    const haar::HaarCoefficients c32 = haar::hdwt_forward(haar::sample_sine(32));
    const spectrum::PulseSpectrum pulse =
        spectrum::pulse_spectrum(c32, 1.0e6, spectrum::default_q_range(32));

    const double c1 = std::abs(spectrum::waveform_spectrum(c32, 1));
    CHECK(std::abs(std::abs(pulse.at(1)) - std::sqrt(2.0) * c1) <= 1e-12);
    CHECK(pulse.at(-1) == std::complex<double>{0.0, 0.0});
    CHECK(std::abs(std::abs(pulse.at(-31)) - 0.022773272439164959) <= 1e-12);
    CHECK(pulse.quarter_delay_samples == 8);
    CHECK(pulse.q_lo == -66);
    CHECK(pulse.q_hi() == 66);
    CHECK_THROWS_AS(pulse.at(67), std::domain_error);

    // Suppressed family: exactly zero, not merely small.
    for (int q = -66; q <= 66; ++q) {
        if (mod(q, 4) == 3) {
            CHECK(pulse.at(q) == std::complex<double>{0.0, 0.0});
        }
        if (mod(q, 4) != 3 && mod(q, 4) != 1) {
            CHECK(std::abs(pulse.at(q)) <= 1e-12);  // even q: gate nonzero, c_q zero
        }
    }

    haar::HaarCoefficients invalid;
    invalid.resolution = 1;
    invalid.detail.assign(1, 0.0);
    CHECK_THROWS_AS(spectrum::pulse_spectrum(invalid, 1.0e6, {-4, 4}), std::domain_error);
    CHECK_THROWS_AS(spectrum::pulse_spectrum(c32, 0.0, {-4, 4}), std::domain_error);
    CHECK_THROWS_AS(spectrum::pulse_spectrum(c32, 1.0e6, {4, -4}), std::domain_error);
}

TEST_CASE("dual-oracle equivalence of the spectrum routes") {
    for (int m : {8, 16, 32}) {
        const haar::WaveformSamples samples = haar::sample_sine(m);
        const haar::HaarCoefficients coeffs = haar::hdwt_forward(samples);
        double scale = 0.0;
        for (int q = -(2 * m + 2); q <= 2 * m + 2; ++q) {
            scale = std::max(scale, std::abs(oracles::zoh_spectrum(samples.values, q)));
        }
        for (int q = -(2 * m + 2); q <= 2 * m + 2; ++q) {
            if (q == 0) continue;  // implementation requires zero mean and returns 0
            const std::complex<double> via_wavelets = spectrum::waveform_spectrum(coeffs, q);
            const std::complex<double> via_zoh = oracles::zoh_spectrum(samples.values, q);
            const std::complex<double> via_quadrature =
                oracles::quadrature_spectrum(samples.values, q);
            CAPTURE(m);
            CAPTURE(q);
            CHECK(std::abs(via_wavelets - via_zoh) <= 1e-9 * scale);
            CHECK(std::abs(via_wavelets - via_quadrature) <= 1e-9 * scale);
            CHECK(std::abs(via_zoh - via_quadrature) <= 1e-9 * scale);
            if (std::abs(via_zoh) > 1e-6 * scale) {
                CHECK(std::abs(via_wavelets - via_zoh) <= 1e-9 * std::abs(via_zoh));
                CHECK(std::abs(via_quadrature - via_zoh) <= 1e-9 * std::abs(via_zoh));
            }
        }
    }
}

TEST_CASE("pulse Parseval against the exact time-domain power") {
    for (int m : {8, 16, 32}) {
        const haar::HaarCoefficients coeffs = haar::hdwt_forward(haar::sample_sine(m));
        const double exact = spectrum::pulse_mean_power(coeffs);
        CHECK(std::abs(exact - 0.5) <= 1e-12);  // midpoint sine: exactly 1/2

        double truncated = 0.0;
        for (int q = -1024; q <= 1024; ++q) {
            truncated += std::norm(spectrum::pulse_coefficient(coeffs, q));
        }
        CAPTURE(m);
        CHECK(std::abs(truncated - exact) <= 1e-3 * exact);
    }
}
