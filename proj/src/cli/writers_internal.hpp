// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "haarbeam/array.hpp"
#include "haarbeam/haar.hpp"
#include "haarbeam/hardware.hpp"
#include "haarbeam/metrics.hpp"
#include "haarbeam/spectrum.hpp"

namespace haarbeam::cli {

/// %.15g: report precision.  Infinities print as "-inf"/"inf".
std::string fmt15(double value);
/// %.17g: exact round-trip precision, used for re-ingested files.
std::string fmt17(double value);

/// Writes content to path atomically (temp file + rename); no partial file
/// is left behind on failure.
void atomic_write(const std::string& path, const std::string& content);

std::string coefficients_to_json(const haar::HaarCoefficients& coeffs);
haar::HaarCoefficients coefficients_from_json_file(const std::string& path);

std::string spectrum_to_csv(const spectrum::PulseSpectrum& pulse);

std::string pattern_to_csv(const array::Pattern& pattern);

std::string metrics_to_json(int m, double f0_hz, double peak_sr_db,
                            const metrics::EfficiencyReport& efficiency,
                            const metrics::HarmonicLevelReport& levels);

std::string schedule_to_json(const hardware::BfnPlan& plan,
                             const std::vector<hardware::SwitchSchedule>& schedules);

std::string multibeam_to_json(const hardware::MultibeamPlan& plan);

std::string multibeam_pattern_to_csv(const array::Pattern& beam_a, const array::Pattern& beam_b);

}  // namespace haarbeam::cli
