// SPDX-License-Identifier: Apache-2.0
//
// Compilation of Haar coefficients and steering into feeding-network plans:
// active sub-networks, attenuator levels, SPDT switch timelines, and the
// dual-beam repurposing of the M = 32 architecture.

#pragma once

#include <utility>
#include <vector>

#include "haarbeam/array.hpp"
#include "haarbeam/haar.hpp"

namespace haarbeam::hardware {

enum class AttenuatorKind {
    none,      // all active slots at 0 dB
    fixed,     // one distinct level
    variable,  // several discrete levels
};

const char* attenuator_kind_name(AttenuatorKind kind);

/// One Haar sub-network: the square-wave drive at 2^l f0 plus the per-order
/// attenuation (dB relative to |W^{01}|) and slot polarities sign(W^{lm}).
struct BfnDegreePlan {
    int degree = 0;
    bool active = false;
    double square_wave_hz = 0.0;
    AttenuatorKind attenuator = AttenuatorKind::none;
    std::vector<double> slot_attenuation_db;  // one per order m = 1..2^l
    std::vector<int> slot_polarity;           // +1 / -1
};

struct BfnPlan {
    double fundamental_hz = 0.0;
    int resolution = 0;              // p
    double reference_amplitude = 0.0;  // |W^{01}|, the unattenuated branch
    std::vector<BfnDegreePlan> degrees;

    const BfnDegreePlan& degree(int l) const { return degrees[static_cast<std::size_t>(l)]; }
};

BfnPlan plan_bfn(const haar::HaarCoefficients& coeffs, double f0_hz);

/// Half of one wavelet slot: constant polarity and attenuation over
/// [t_start, t_end).  A degree-l timeline holds 2^{l+1} half-slots tiling
/// [0, T0) exactly.
struct HalfSlot {
    double t_start_s = 0.0;
    double t_end_s = 0.0;
    double attenuation_db = 0.0;
    int polarity = 1;
};

struct NetworkTimeline {
    int degree = 0;
    double square_wave_hz = 0.0;
    std::vector<HalfSlot> half_slots;
};

/// Per-element switching program: the canonical timelines (one per active
/// degree) plus the cyclic start offset D_n.
struct SwitchSchedule {
    int element = 0;
    double start_offset_s = 0.0;
    std::vector<NetworkTimeline> networks;
};

std::vector<SwitchSchedule> switching_schedule(const BfnPlan& plan,
                                               const array::SteeringConfig& steering);

/// Rebuilds the modulating waveform a schedule realizes at absolute time t:
/// sum over active degrees of polarity * 10^(dB/20) * |W^{01}| * sqrt(2^l),
/// with the timeline shifted cyclically by the start offset.  Equals the
/// stair-step evaluated at t - D_n.
double schedule_waveform_value(const BfnPlan& plan, const SwitchSchedule& schedule, double t_s);

/// One beam of the dual-beam configuration: an M = 8 plan at its own
/// fundamental and steering, mapped onto a set of physical networks of the
/// M = 32 hardware.
struct BeamPlan {
    double theta0_deg = 0.0;
    double fundamental_hz = 0.0;
    haar::HaarCoefficients coeffs;
    BfnPlan plan;
    array::SteeringConfig steering;
    std::vector<int> physical_degrees;  // networks used on the M = 32 hardware
    std::vector<int> logical_degrees;   // degrees they realize in the M = 8 plan
};

struct MultibeamPlan {
    BeamPlan beam_a;  // physical networks {0, 2}
    BeamPlan beam_b;  // physical networks {3, 4} re-tasked as degrees {0, 2}
};

/// Two independent M = 8 beams on the M = 32 single-beam hardware.  The
/// fundamentals must differ or the beams' harmonic sets are not separable.
MultibeamPlan multibeam_plan(double theta_a_deg, double f0_a_hz, double theta_b_deg,
                             double f0_b_hz, int element_count);

/// Patterns of the two beams of a composite drive h_a(t) + h_b(t), each over
/// its own surviving harmonics, normalized to the shared global peak.
std::pair<array::Pattern, array::Pattern> multibeam_patterns(
    const MultibeamPlan& plan, const array::ArrayGeometry& geometry,
    const std::vector<double>& theta_grid_deg, int max_threads = 0);

}  // namespace haarbeam::hardware
