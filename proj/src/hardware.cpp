// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace haarbeam::hardware {

namespace {

constexpr double kActivityFloor = 1e-12;
// Slot levels within this many dB are one physical attenuator setting;
// mirrored orders of a sine differ only by floating-point noise.
constexpr double kLevelMergeDb = 1e-6;

int count_distinct_levels(const std::vector<double>& levels_db) {
    std::vector<double> sorted = levels_db;
    std::sort(sorted.begin(), sorted.end());
    int distinct = sorted.empty() ? 0 : 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i] - sorted[i - 1] > kLevelMergeDb) ++distinct;
    }
    return distinct;
}

}  // namespace

const char* attenuator_kind_name(AttenuatorKind kind) {
    switch (kind) {
        case AttenuatorKind::none: return "none";
        case AttenuatorKind::fixed: return "fixed";
        case AttenuatorKind::variable: return "variable";
    }
    return "unknown";
}

BfnPlan plan_bfn(const haar::HaarCoefficients& coeffs, double f0_hz) {
    haar::require_valid(coeffs);
    if (coeffs.sample_count() % 4 != 0) {
        throw std::domain_error("feeding-network plan requires M divisible by 4");
    }
    if (std::abs(coeffs.mean) > 1e-9) {
        throw std::domain_error("feeding-network plan requires sine-derived coefficients "
                                "(W^0 = 0)");
    }
    if (!(f0_hz > 0.0)) {
        throw std::domain_error("fundamental frequency must be positive");
    }
    const double reference = std::abs(coeffs.at(0, 1));
    if (reference <= kActivityFloor) {
        throw std::domain_error("no reference branch: |W^{01}| is zero");
    }

    BfnPlan plan;
    plan.fundamental_hz = f0_hz;
    plan.resolution = coeffs.resolution;
    plan.reference_amplitude = reference;
    plan.degrees.resize(coeffs.resolution);
    for (int l = 0; l < coeffs.resolution; ++l) {
        BfnDegreePlan& entry = plan.degrees[l];
        entry.degree = l;
        entry.square_wave_hz = static_cast<double>(1 << l) * f0_hz;
        const int orders = 1 << l;
        entry.slot_attenuation_db.resize(orders);
        entry.slot_polarity.resize(orders);
        bool any_active = false;
        std::vector<double> active_levels;
        for (int m = 1; m <= orders; ++m) {
            const double w = coeffs.at(l, m);
            const double magnitude = std::abs(w);
            entry.slot_polarity[m - 1] = w < 0.0 ? -1 : 1;
            if (magnitude <= kActivityFloor) {
                entry.slot_attenuation_db[m - 1] = -std::numeric_limits<double>::infinity();
                continue;
            }
            any_active = true;
            entry.slot_attenuation_db[m - 1] = 20.0 * std::log10(magnitude / reference);
            active_levels.push_back(entry.slot_attenuation_db[m - 1]);
        }
        entry.active = any_active;
        if (!any_active) {
            entry.attenuator = AttenuatorKind::none;
            continue;
        }
        const int distinct = count_distinct_levels(active_levels);
        const bool all_zero_db =
            std::all_of(active_levels.begin(), active_levels.end(),
                        [](double db) { return std::abs(db) <= kLevelMergeDb; });
        if (all_zero_db) {
            entry.attenuator = AttenuatorKind::none;
        } else if (distinct == 1) {
            entry.attenuator = AttenuatorKind::fixed;
        } else {
            entry.attenuator = AttenuatorKind::variable;
        }
    }
    return plan;
}

std::vector<SwitchSchedule> switching_schedule(const BfnPlan& plan,
                                               const array::SteeringConfig& steering) {
    if (plan.fundamental_hz != steering.fundamental_hz) {
        throw std::domain_error("plan and steering fundamentals differ");
    }
    const double period = steering.period_s();

    // Canonical (undelayed) timelines, shared by every element.
    std::vector<NetworkTimeline> canonical;
    for (const BfnDegreePlan& entry : plan.degrees) {
        if (!entry.active) continue;
        NetworkTimeline timeline;
        timeline.degree = entry.degree;
        timeline.square_wave_hz = entry.square_wave_hz;
        const int half_slots = 2 << entry.degree;  // 2^{l+1}
        timeline.half_slots.reserve(half_slots);
        for (int h = 0; h < half_slots; ++h) {
            HalfSlot slot;
            // Dyadic fractions of the period tile [0, T0) exactly.
            slot.t_start_s = period * (static_cast<double>(h) / half_slots);
            slot.t_end_s = period * (static_cast<double>(h + 1) / half_slots);
            const int order = h / 2;  // m - 1
            slot.attenuation_db = entry.slot_attenuation_db[order];
            const int base = entry.slot_polarity[order];
            slot.polarity = (h % 2 == 0) ? base : -base;
            timeline.half_slots.push_back(slot);
        }
        canonical.push_back(std::move(timeline));
    }

    std::vector<SwitchSchedule> out;
    out.reserve(steering.element_count());
    for (int n = 0; n < steering.element_count(); ++n) {
        SwitchSchedule schedule;
        schedule.element = n;
        schedule.start_offset_s = steering.delays_s[n];
        schedule.networks = canonical;
        out.push_back(std::move(schedule));
    }
    return out;
}

double schedule_waveform_value(const BfnPlan& plan, const SwitchSchedule& schedule, double t_s) {
    const double period = 1.0 / plan.fundamental_hz;
    double u = std::fmod(t_s - schedule.start_offset_s, period);
    if (u < 0.0) u += period;
    if (u >= period) u = 0.0;
    double value = 0.0;
    for (const NetworkTimeline& timeline : schedule.networks) {
        const int half_slots = static_cast<int>(timeline.half_slots.size());
        int index = static_cast<int>(u / period * half_slots);
        if (index >= half_slots) index = half_slots - 1;
        // Slot boundaries are exact dyadic multiples; nudge across one if the
        // division rounded to the wrong side.
        if (u < timeline.half_slots[index].t_start_s && index > 0) --index;
        if (u >= timeline.half_slots[index].t_end_s && index + 1 < half_slots) ++index;
        const HalfSlot& slot = timeline.half_slots[index];
        if (std::isinf(slot.attenuation_db)) continue;
        const double amplitude = std::pow(10.0, slot.attenuation_db / 20.0) *
                                 plan.reference_amplitude *
                                 std::sqrt(static_cast<double>(1 << timeline.degree));
        value += slot.polarity * amplitude;
    }
    return value;
}

MultibeamPlan multibeam_plan(double theta_a_deg, double f0_a_hz, double theta_b_deg,
                             double f0_b_hz, int element_count) {
    if (f0_a_hz == f0_b_hz) {
        throw std::domain_error("multibeam fundamentals must differ (beams not separable)");
    }
    const haar::HaarCoefficients coeffs = haar::hdwt_forward(haar::sample_sine(8));

    MultibeamPlan out;
    out.beam_a.theta0_deg = theta_a_deg;
    out.beam_a.fundamental_hz = f0_a_hz;
    out.beam_a.coeffs = coeffs;
    out.beam_a.plan = plan_bfn(coeffs, f0_a_hz);
    out.beam_a.steering = array::steering_delays(theta_a_deg, element_count, f0_a_hz);
    out.beam_a.physical_degrees = {0, 2};
    out.beam_a.logical_degrees = {0, 2};

    out.beam_b.theta0_deg = theta_b_deg;
    out.beam_b.fundamental_hz = f0_b_hz;
    out.beam_b.coeffs = coeffs;
    out.beam_b.plan = plan_bfn(coeffs, f0_b_hz);
    out.beam_b.steering = array::steering_delays(theta_b_deg, element_count, f0_b_hz);
    // The M = 32 hardware's degree-3/4 networks regenerate the M = 8 wave at
    // the second fundamental: their square-wave drives become 2^0 f0_b and
    // 2^2 f0_b.
    out.beam_b.physical_degrees = {3, 4};
    out.beam_b.logical_degrees = {0, 2};
    return out;
}

std::pair<array::Pattern, array::Pattern> multibeam_patterns(
    const MultibeamPlan& plan, const array::ArrayGeometry& geometry,
    const std::vector<double>& theta_grid_deg, int max_threads) {
    const int m = plan.beam_a.coeffs.sample_count();
    const std::vector<int> q_list = array::default_q_list(m, 2 * m + 2);
    array::Pattern a = array::compute_pattern(plan.beam_a.coeffs, plan.beam_a.steering, geometry,
                                              q_list, theta_grid_deg, max_threads);
    array::Pattern b = array::compute_pattern(plan.beam_b.coeffs, plan.beam_b.steering, geometry,
                                              q_list, theta_grid_deg, max_threads);
    // Joint normalization: the composite pulse superposes both beams on
    // disjoint harmonic sets.
    const double peak = std::max(a.peak_power, b.peak_power);
    a.peak_power = peak;
    b.peak_power = peak;
    return {std::move(a), std::move(b)};
}

}  // namespace haarbeam::hardware
