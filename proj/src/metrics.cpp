// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace haarbeam::metrics {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

double HarmonicLevelReport::at(int q) const {
    for (const auto& [order, db] : rows) {
        if (order == q) return db;
    }
    throw std::domain_error("harmonic order " + std::to_string(q) + " not in report");
}

HarmonicLevelReport harmonic_levels(const haar::HaarCoefficients& coeffs,
                                    const spectrum::QRange& range) {
    spectrum::require_valid(range);
    const double reference = std::abs(spectrum::pulse_coefficient(coeffs, 1));
    if (reference <= 0.0) {
        throw std::domain_error("no useful harmonic: pulse coefficient at q = 1 is zero");
    }
    HarmonicLevelReport report;
    report.rows.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
    for (int q = range.lo; q <= range.hi; ++q) {
        const double magnitude = std::abs(spectrum::pulse_coefficient(coeffs, q));
        const double db = magnitude == 0.0 ? kNegInf : 20.0 * std::log10(magnitude / reference);
        report.rows.emplace_back(q, db);
    }
    return report;
}

double peak_sideband_level(const haar::HaarCoefficients& coeffs, const spectrum::QRange& range) {
    const HarmonicLevelReport report = harmonic_levels(coeffs, range);
    double peak = kNegInf;
    for (const auto& [q, db] : report.rows) {
        if (q == 1) continue;
        peak = std::max(peak, db);
    }
    return peak;
}

EfficiencyReport efficiencies(const haar::HaarCoefficients& coeffs, double f0_hz) {
    haar::require_valid(coeffs);
    if (coeffs.sample_count() % 4 != 0) {
        throw std::domain_error("efficiencies require M divisible by 4");
    }
    if (!(f0_hz > 0.0)) {
        throw std::domain_error("fundamental frequency must be positive");
    }
    // Total radiated power from the exact piecewise-constant integral, not a
    // truncated harmonic sum.
    const double total_power = spectrum::pulse_mean_power(coeffs);
    if (total_power <= 0.0) {
        throw std::domain_error("total mean power is zero");
    }
    const double useful = std::abs(spectrum::pulse_coefficient(coeffs, 1));
    EfficiencyReport out;
    out.eta_mod = total_power;  // unit static reference
    out.eta_tma = useful * useful / total_power;
    out.eta_total = out.eta_tma * out.eta_mod;
    out.b_max_hz = coeffs.sample_count() * f0_hz;
    return out;
}

double max_bandwidth(int m, double f0_hz) {
    if (m < 8 || !is_power_of_two(m)) {
        throw std::domain_error("bandwidth rule needs M a power of two >= 8");
    }
    if (!(f0_hz > 0.0)) {
        throw std::domain_error("fundamental frequency must be positive");
    }
    return m * f0_hz;
}

PatternStats pattern_stats(const array::Pattern& pattern, int q) {
    const int qi = pattern.harmonic_index(q);
    if (qi < 0) {
        throw std::domain_error("pattern does not contain harmonic " + std::to_string(q));
    }
    const int points = static_cast<int>(pattern.theta_deg.size());
    int peak_index = 0;
    double peak = 0.0;
    for (int i = 0; i < points; ++i) {
        const double p = pattern.power(qi, i);
        if (p > peak) {
            peak = p;
            peak_index = i;
        }
    }
    if (peak <= 0.0) {
        throw std::domain_error("pattern has no nonzero peak at harmonic " + std::to_string(q));
    }

    // Null-to-null extent of the main lobe: walk downhill from the peak.
    int left = peak_index;
    while (left > 0 && pattern.power(qi, left - 1) < pattern.power(qi, left)) --left;
    int right = peak_index;
    while (right + 1 < points && pattern.power(qi, right + 1) < pattern.power(qi, right)) ++right;

    double max_side = 0.0;
    bool found = false;
    for (int i = 0; i < points; ++i) {
        if (i >= left && i <= right) continue;
        found = true;
        max_side = std::max(max_side, pattern.power(qi, i));
    }
    // A flat response (single element) has no null-to-null extent: the
    // "sidelobes" tie the peak.
    if (!found || max_side <= 0.0 || max_side >= peak * (1.0 - 1e-12)) {
        throw std::domain_error("pattern has no sidelobe structure at harmonic " +
                                std::to_string(q));
    }

    PatternStats out;
    out.main_lobe_deg = pattern.theta_deg[peak_index];
    out.msll_db = 10.0 * std::log10(max_side / peak);
    return out;
}

}  // namespace haarbeam::metrics
