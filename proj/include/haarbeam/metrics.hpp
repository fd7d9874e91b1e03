// SPDX-License-Identifier: Apache-2.0
//
// Quality metrics of the modulation scheme: relative harmonic levels, peak
// sideband radiation, efficiencies, usable bandwidth, and pattern statistics.

#pragma once

#include <vector>

#include "haarbeam/array.hpp"
#include "haarbeam/haar.hpp"
#include "haarbeam/spectrum.hpp"

namespace haarbeam::metrics {

/// Per-harmonic power relative to the useful harmonic q = 1, in dB.
/// Suppressed harmonics carry -infinity.
struct HarmonicLevelReport {
    std::vector<std::pair<int, double>> rows;  // (q, dB), ascending q

    double at(int q) const;
};

HarmonicLevelReport harmonic_levels(const haar::HaarCoefficients& coeffs,
                                    const spectrum::QRange& range);

/// Largest relative level over all q != 1 in the range.  The default window
/// |q| <= 2M+2 already contains the global maximum: replica levels decay as
/// 1/|q|, so nothing beyond the first two families can exceed it.
double peak_sideband_level(const haar::HaarCoefficients& coeffs, const spectrum::QRange& range);

struct EfficiencyReport {
    double eta_tma = 0.0;    // useful-harmonic power / total radiated power
    double eta_mod = 0.0;    // mean switched-feed power vs unit static drive
    double eta_total = 0.0;  // eta_tma * eta_mod
    double b_max_hz = 0.0;   // replica spacing M * f0
};

EfficiencyReport efficiencies(const haar::HaarCoefficients& coeffs, double f0_hz);

/// Replica spacing of the M-step stair-step spectrum: M * f0.
double max_bandwidth(int m, double f0_hz);

struct PatternStats {
    double main_lobe_deg = 0.0;
    double msll_db = 0.0;  // highest lobe outside the main null-to-null extent
};

PatternStats pattern_stats(const array::Pattern& pattern, int q);

}  // namespace haarbeam::metrics
