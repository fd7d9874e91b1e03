// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace haarbeam::spectrum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

std::complex<double> unit_phasor(double angle) {
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

void require_valid(const QRange& range) {
    if (range.lo > range.hi) {
        throw std::domain_error("harmonic range lo must not exceed hi");
    }
}

QRange default_q_range(int m) {
    return {-(2 * m + 2), 2 * m + 2};
}

std::complex<double> haar_fourier_coeff(const haar::HaarIndex& index, int q) {
    haar::require_valid(index);
    if (q == 0) return {0.0, 0.0};  // zero-mean wavelet
    const double scale = static_cast<double>(1 << index.degree);
    const double a = (index.order - 1.0) / scale;
    const double b = (index.order - 0.5) / scale;
    const double c = index.order / scale;
    const double omega = kTwoPi * q;
    // integral_a^b e^{-j w t} dt - integral_b^c e^{-j w t} dt
    //   = (E(a) - 2 E(b) + E(c)) / (j w),  E(u) = e^{-j w u}
    const std::complex<double> numerator =
        unit_phasor(-omega * a) - 2.0 * unit_phasor(-omega * b) + unit_phasor(-omega * c);
    return std::sqrt(scale) * numerator / std::complex<double>(0.0, omega);
}

std::complex<double> waveform_spectrum(const haar::HaarCoefficients& coeffs, int q) {
    haar::require_valid(coeffs);
    if (std::abs(coeffs.mean) > 1e-9) {
        throw std::domain_error("waveform spectrum requires a zero-mean coefficient set (W^0 = 0)");
    }
    std::complex<double> acc{0.0, 0.0};
    for (int degree = 0; degree < coeffs.resolution; ++degree) {
        for (int order = 1; order <= (1 << degree); ++order) {
            const haar::HaarIndex index{degree, order};
            const double w = coeffs.detail[haar::HaarCoefficients::flat_index(index)];
            if (w == 0.0) continue;
            acc += w * haar_fourier_coeff(index, q);
        }
    }
    return acc;
}

std::complex<double> ssb_gate(int q) {
    // (-j)^n cycles with period 4: 1, -j, -1, j.
    const int n = ((q + 1) % 4 + 4) % 4;
    switch (n) {
        case 0: return {0.0, 0.0};   // 1 - 1
        case 1: return {1.0, 1.0};   // 1 + j
        case 2: return {2.0, 0.0};   // 1 + 1
        default: return {1.0, -1.0}; // 1 - j
    }
}

std::complex<double> pulse_coefficient(const haar::HaarCoefficients& coeffs, int q) {
    const std::complex<double> gate = ssb_gate(q);
    if (gate == std::complex<double>{0.0, 0.0}) return {0.0, 0.0};
    return gate * waveform_spectrum(coeffs, q) * kInvSqrt2;
}

std::complex<double> PulseSpectrum::at(int q) const {
    if (!contains(q)) {
        throw std::domain_error("harmonic order " + std::to_string(q) +
                                " outside computed pulse spectrum range");
    }
    return coefficients[static_cast<std::size_t>(q - q_lo)];
}

PulseSpectrum pulse_spectrum(const haar::HaarCoefficients& coeffs, double f0_hz, QRange range) {
    haar::require_valid(coeffs);
    require_valid(range);
    const int m = coeffs.sample_count();
    if (m % 4 != 0) {
        throw std::domain_error("pulse spectrum requires M divisible by 4 (quarter-period delay "
                                "must lie on the sample grid)");
    }
    if (!(f0_hz > 0.0)) {
        throw std::domain_error("fundamental frequency must be positive");
    }
    PulseSpectrum out;
    out.fundamental_hz = f0_hz;
    out.quarter_delay_samples = m / 4;
    out.q_lo = range.lo;
    out.coefficients.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
    for (int q = range.lo; q <= range.hi; ++q) {
        out.coefficients.push_back(pulse_coefficient(coeffs, q));
    }
    return out;
}

double pulse_mean_power(const haar::HaarCoefficients& coeffs) {
    const haar::WaveformSamples samples = haar::hdwt_inverse(coeffs);
    double acc = 0.0;
    for (const double v : samples.values) acc += v * v;
    return acc / samples.count();
}

}  // namespace haarbeam::spectrum
