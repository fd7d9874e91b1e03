// SPDX-License-Identifier: Apache-2.0
//
// Fourier-series analysis of the periodic Haar wavelets and of the
// single-sideband complex modulating pulse h(t) = f(t) + j f(t - T0/4).

#pragma once

#include <complex>
#include <vector>

#include "haarbeam/haar.hpp"

namespace haarbeam::spectrum {

/// Closed interval of harmonic orders [lo, hi].
struct QRange {
    int lo = 0;
    int hi = 0;
};

void require_valid(const QRange& range);

/// Default reporting window [-(2M+2), 2M+2]; captures the first two replica
/// families of an M-step stair-step (levels beyond decay as 1/q).
QRange default_q_range(int m);

/// Fourier coefficient G_q^{lm} of the periodic Haar wavelet h^{lm}(t),
/// evaluated from the closed-form antiderivative of the piecewise-constant
/// integrand (never quadrature).  G_0^{lm} = 0 exactly.
std::complex<double> haar_fourier_coeff(const haar::HaarIndex& index, int q);

/// Fourier coefficient c_q of the stair-step waveform: sum over (l, m) of
/// W^{lm} G_q^{lm}.  Requires a zero-mean coefficient set (|W^0| <= 1e-9);
/// the modulating waveform is an approximation of a pure sine.
std::complex<double> waveform_spectrum(const haar::HaarCoefficients& coeffs, int q);

/// The single-sideband gate 1 - (-j)^{q+1}, computed exactly: 2 for
/// q in {4k - 3}, 0 for q = 3 (mod 4), 1 -/+ j for even q.
std::complex<double> ssb_gate(int q);

/// Baseband Fourier coefficient of h(t)/sqrt(2) at harmonic q:
/// ssb_gate(q) * c_q / sqrt(2).
std::complex<double> pulse_coefficient(const haar::HaarCoefficients& coeffs, int q);

/// Complex Fourier-series coefficients of the normalized SSB pulse over a
/// harmonic window.  The quarter-period delay is represented as a grid shift
/// of M/4 samples, so M must be divisible by 4.
struct PulseSpectrum {
    double fundamental_hz = 0.0;
    int quarter_delay_samples = 0;  // M / 4
    int q_lo = 0;
    std::vector<std::complex<double>> coefficients;

    int q_hi() const { return q_lo + static_cast<int>(coefficients.size()) - 1; }
    bool contains(int q) const { return q >= q_lo && q <= q_hi(); }
    std::complex<double> at(int q) const;
};

PulseSpectrum pulse_spectrum(const haar::HaarCoefficients& coeffs, double f0_hz, QRange range);

/// Exact time-average of |h(t)|^2 / 2 (equivalently the mean power of the
/// stair-step itself), from the piecewise-constant integral of the
/// reconstructed samples.  Used wherever truncated harmonic sums would lose
/// accuracy.
double pulse_mean_power(const haar::HaarCoefficients& coeffs);

}  // namespace haarbeam::spectrum
