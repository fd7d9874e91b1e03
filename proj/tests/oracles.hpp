// SPDX-License-Identifier: Apache-2.0
//
// Independent oracles for the test and acceptance suites.  Everything here
// is computed from first principles (closed forms, quadrature, dense scans)
// without touching the implementation paths under test.

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace haarbeam::oracles {

/// Fourier coefficient of the periodic Haar wavelet by composite Simpson
/// quadrature over its support (checks the closed-form implementation).
std::complex<double> quad_haar_fourier(int degree, int order, int q, int subintervals = 4096);

/// Continuous Haar coefficient of sin(2*pi*t):
/// W^{lm} = sqrt(2^l)/(2 pi) * (cos 2 pi a - 2 cos 2 pi b + cos 2 pi c).
double continuous_sine_haar_coeff(int degree, int order);

/// Exact Fourier coefficient of the zero-order-hold stair-step holding
/// values[k] on [k/M, (k+1)/M), via per-segment antiderivatives.
std::complex<double> zoh_spectrum(const std::vector<double>& values, int q);

/// The same coefficient by composite Simpson quadrature of the Fourier
/// integral over a dense grid of stair-step samples (points_per_segment
/// nodes in every hold segment; the default gives 4096*M points).
std::complex<double> quadrature_spectrum(const std::vector<double>& values, int q,
                                         int points_per_segment = 4096);

/// Magnitude of the Dirichlet kernel |sin(N psi / 2) / sin(psi / 2)|.
double dirichlet_magnitude(int n, double psi);

/// Maximum sidelobe level of an N-element uniform array in dB relative to
/// the main peak, from a fine scan of the Dirichlet kernel.
double dirichlet_msll_db(int n);

/// sum_{q=1}^{inf} sin(2 pi q x)/q = pi (1/2 - frac(x)) minus the partial sum
/// up to q_cut: the exact remainder of the sawtooth Fourier series.
double sawtooth_tail(double x, int q_cut);

/// Remainder of the symmetric partial Fourier sum (|q| <= q_cut) of the
/// stair-step holding values[k] on [k/M, (k+1)/M), evaluated at u (interior
/// point): stair(u) - S_Q(u), summed in closed form via sawtooth tails.
double stair_fourier_tail(const std::vector<double>& values, double u, int q_cut);

/// Integrated squared error between sin(2*pi*t) and its midpoint-sampled
/// stair-step over one period (closed form).
double sine_stairstep_ise(int m);

/// Fourier coefficient (1/T) * integral of a T-periodic piecewise-constant
/// complex signal against e^{-j 2 pi q t / T}.  `breakpoints` are the
/// discontinuity times within [0, T); the signal is sampled once per
/// interval at its midpoint.
std::complex<double> piecewise_fourier_coefficient(
    const std::function<std::complex<double>(double)>& signal,
    const std::vector<double>& breakpoints, double period, int q);

}  // namespace haarbeam::oracles
