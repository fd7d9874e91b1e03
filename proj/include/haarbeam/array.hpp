// SPDX-License-Identifier: Apache-2.0
//
// Array geometry, steering delays, dynamic excitations, and harmonic /
// time-domain array factors.

#pragma once

#include <complex>
#include <vector>

#include "haarbeam/haar.hpp"
#include "haarbeam/spectrum.hpp"

namespace haarbeam::array {

/// Cosine of an angle given in degrees, with exact quadrant folding so that
/// cos_degrees(90) == 0 (broadside delays come out exactly zero).
double cos_degrees(double deg);

/// Uniform linear array along the z axis: element n sits at z_n = n * d with
/// d = spacing_wavelengths * lambda_c.  Angles are measured from the array
/// axis, so broadside is 90 degrees.  The carrier only fixes lambda_c; the
/// per-element phase k * z_n * cos(theta) = 2*pi*spacing * n * cos(theta) is
/// carrier-independent.
struct ArrayGeometry {
    int element_count = 0;
    double spacing_wavelengths = 0.5;
    double carrier_hz = 1.0e9;

    double wavelength_m() const;
    double wavenumber() const;            // 2*pi / lambda_c
    double position_m(int n) const;       // n * spacing * lambda_c
    double phase_per_element() const;     // k * d = 2*pi * spacing
};

ArrayGeometry uniform_geometry(int element_count, double spacing_wavelengths = 0.5,
                               double carrier_hz = 1.0e9);

/// Steering state: target angle, fundamental, and the per-element delays
/// D_n = n cos(theta0) / (2 f0) reduced into [0, T0).
struct SteeringConfig {
    double target_angle_deg = 90.0;
    double fundamental_hz = 1.0e6;
    std::vector<double> delays_s;

    int element_count() const { return static_cast<int>(delays_s.size()); }
    double period_s() const { return 1.0 / fundamental_hz; }
};

SteeringConfig steering_delays(double theta0_deg, int element_count, double f0_hz);

/// Complex element weights I_nq at one harmonic; identical modulus across n.
struct DynamicExcitations {
    int harmonic = 0;
    std::vector<std::complex<double>> values;

    int element_count() const { return static_cast<int>(values.size()); }
};

DynamicExcitations dynamic_excitations(const haar::HaarCoefficients& coeffs,
                                       const SteeringConfig& steering, int q);

/// F_q(theta) = sum_n I_nq * exp(j k z_n cos(theta)).
std::complex<double> array_factor(const DynamicExcitations& excitations,
                                  const ArrayGeometry& geometry, double theta_deg);

/// Sampled harmonic patterns over a theta grid, normalized to the global
/// peak power across all requested harmonics.
struct Pattern {
    std::vector<double> theta_deg;
    std::vector<int> harmonics;
    std::vector<std::vector<std::complex<double>>> values;  // [harmonic][angle]
    double peak_power = 0.0;

    int harmonic_index(int q) const;  // -1 when absent
    double power(int harmonic_index, int angle_index) const;
    /// Normalized power in dB; exact zeros map to -infinity.
    double power_db(int harmonic_index, int angle_index) const;
};

/// Evaluates every requested harmonic over the grid.  The sweep may be
/// chunked across threads (max_threads <= 0 selects the hardware count);
/// per-angle results are independent, so outputs do not depend on the chunking.
Pattern compute_pattern(const haar::HaarCoefficients& coeffs, const SteeringConfig& steering,
                        const ArrayGeometry& geometry, const std::vector<int>& q_list,
                        const std::vector<double>& theta_grid_deg, int max_threads = 0);

/// Baseband time-domain field (1/sqrt(2)) sum_n h_n(t) exp(j k z_n cos
/// theta), with h_n built directly from stair-step evaluations delayed by
/// D_n and the quarter-period imaginary branch.
std::complex<double> time_domain_field(const haar::HaarCoefficients& coeffs,
                                       const SteeringConfig& steering,
                                       const ArrayGeometry& geometry, double theta_deg,
                                       double t_s);

/// Uniform grid over [0, 180] with the given step in degrees.
std::vector<double> make_theta_grid(double step_deg);

/// Harmonics of an M-step stair-step SSB pulse that survive both the replica
/// structure (q = +/-1 mod M) and the SSB gate (q = 1 mod 4), within
/// |q| <= q_max; always contains q = 1.
std::vector<int> default_q_list(int m, int q_max);

}  // namespace haarbeam::array
