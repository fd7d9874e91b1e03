// SPDX-License-Identifier: Apache-2.0

#include "writers_internal.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "haarbeam/cli.hpp"

namespace haarbeam::cli {

namespace {

std::string fmt(const char* spec, double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, value);
    return buf;
}

/// dB values can legitimately be -infinity (suppressed harmonics); JSON has
/// no literal for it, so those serialize as the string "-inf".
std::string json_db(double value) {
    if (std::isinf(value)) return value < 0 ? "\"-inf\"" : "\"inf\"";
    return fmt15(value);
}

}  // namespace

std::string fmt15(double value) { return fmt("%.15g", value); }

std::string fmt17(double value) { return fmt("%.17g", value); }

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot open output file: " + tmp);
        }
        out << content;
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw ConfigError("failed writing output file: " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw ConfigError("failed moving output into place: " + path);
    }
}

std::string coefficients_to_json(const haar::HaarCoefficients& coeffs) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"m\": " << coeffs.sample_count() << ",\n";
    out << "  \"resolution\": " << coeffs.resolution << ",\n";
    out << "  \"mean\": " << fmt17(coeffs.mean) << ",\n";
    out << "  \"detail\": {\n";
    bool first = true;
    for (int l = 0; l < coeffs.resolution; ++l) {
        for (int m = 1; m <= (1 << l); ++m) {
            if (!first) out << ",\n";
            first = false;
            out << "    \"" << l << "." << m << "\": " << fmt17(coeffs.at(l, m));
        }
    }
    out << "\n  }\n}\n";
    return out.str();
}

haar::HaarCoefficients coefficients_from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open coefficients file: " + path);
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("malformed coefficients file " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("resolution") || !doc.contains("mean") ||
        !doc.contains("detail")) {
        throw ConfigError("coefficients file " + path +
                          " must hold keys resolution, mean, detail");
    }
    if (!doc["resolution"].is_number_integer() || !doc["mean"].is_number() ||
        !doc["detail"].is_object()) {
        throw ConfigError("coefficients file " + path + " has wrongly typed entries");
    }
    haar::HaarCoefficients coeffs;
    coeffs.resolution = doc["resolution"].get<int>();
    if (coeffs.resolution < 2 || coeffs.resolution > 20) {
        throw ConfigError("coefficients file resolution must lie in [2, 20]");
    }
    coeffs.mean = doc["mean"].get<double>();
    coeffs.detail.assign(coeffs.detail_count(), 0.0);
    const auto& detail = doc["detail"];
    if (static_cast<int>(detail.size()) != coeffs.detail_count()) {
        throw ConfigError("coefficients file must hold exactly 2^resolution - 1 detail entries");
    }
    for (const auto& [key, value] : detail.items()) {
        const auto dot = key.find('.');
        if (dot == std::string::npos || !value.is_number()) {
            throw ConfigError("bad detail entry '" + key + "' in coefficients file");
        }
        int l = 0, m = 0;
        try {
            l = std::stoi(key.substr(0, dot));
            m = std::stoi(key.substr(dot + 1));
        } catch (const std::exception&) {
            throw ConfigError("bad detail key '" + key + "' in coefficients file");
        }
        if (l < 0 || l >= coeffs.resolution || m < 1 || m > (1 << l)) {
            throw ConfigError("detail key '" + key + "' out of range in coefficients file");
        }
        coeffs.detail[haar::HaarCoefficients::flat_index({l, m})] = value.get<double>();
    }
    return coeffs;
}

std::string spectrum_to_csv(const spectrum::PulseSpectrum& pulse) {
    const double reference = std::abs(pulse.contains(1) ? pulse.at(1)
                                                        : std::complex<double>{0.0, 0.0});
    std::ostringstream out;
    out << "q,re,im,magnitude,power_db_rel_q1\n";
    for (int q = pulse.q_lo; q <= pulse.q_hi(); ++q) {
        const std::complex<double> c = pulse.at(q);
        const double magnitude = std::abs(c);
        const double db = (magnitude > 0.0 && reference > 0.0)
                              ? 20.0 * std::log10(magnitude / reference)
                              : -std::numeric_limits<double>::infinity();
        out << q << ',' << fmt15(c.real()) << ',' << fmt15(c.imag()) << ',' << fmt15(magnitude)
            << ',' << fmt15(db) << '\n';
    }
    return out.str();
}

std::string pattern_to_csv(const array::Pattern& pattern) {
    std::ostringstream out;
    out << "theta_deg,q,re,im,power_db_norm\n";
    for (std::size_t qi = 0; qi < pattern.harmonics.size(); ++qi) {
        for (std::size_t i = 0; i < pattern.theta_deg.size(); ++i) {
            const std::complex<double> v = pattern.values[qi][i];
            out << fmt15(pattern.theta_deg[i]) << ',' << pattern.harmonics[qi] << ','
                << fmt15(v.real()) << ',' << fmt15(v.imag()) << ','
                << fmt15(pattern.power_db(static_cast<int>(qi), static_cast<int>(i))) << '\n';
        }
    }
    return out.str();
}

std::string metrics_to_json(int m, double f0_hz, double peak_sr_db,
                            const metrics::EfficiencyReport& efficiency,
                            const metrics::HarmonicLevelReport& levels) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"m\": " << m << ",\n";
    out << "  \"f0_hz\": " << fmt15(f0_hz) << ",\n";
    out << "  \"peak_sr_db\": " << json_db(peak_sr_db) << ",\n";
    out << "  \"eta_tma\": " << fmt15(efficiency.eta_tma) << ",\n";
    out << "  \"eta_mod\": " << fmt15(efficiency.eta_mod) << ",\n";
    out << "  \"eta_total\": " << fmt15(efficiency.eta_total) << ",\n";
    out << "  \"b_max_hz\": " << fmt15(efficiency.b_max_hz) << ",\n";
    out << "  \"harmonic_levels\": {\n";
    bool first = true;
    for (const auto& [q, db] : levels.rows) {
        if (!first) out << ",\n";
        first = false;
        out << "    \"" << q << "\": " << json_db(db);
    }
    out << "\n  }\n}\n";
    return out.str();
}

std::string schedule_to_json(const hardware::BfnPlan& plan,
                             const std::vector<hardware::SwitchSchedule>& schedules) {
    std::ostringstream out;
    out << "{\n  \"f0_hz\": " << fmt15(plan.fundamental_hz) << ",\n  \"elements\": [\n";
    for (std::size_t e = 0; e < schedules.size(); ++e) {
        const hardware::SwitchSchedule& schedule = schedules[e];
        out << "    {\n      \"n\": " << schedule.element << ",\n      \"start_offset_s\": "
            << fmt15(schedule.start_offset_s) << ",\n      \"networks\": [\n";
        for (std::size_t t = 0; t < schedule.networks.size(); ++t) {
            const hardware::NetworkTimeline& timeline = schedule.networks[t];
            out << "        {\n          \"degree\": " << timeline.degree
                << ",\n          \"square_wave_hz\": " << fmt15(timeline.square_wave_hz)
                << ",\n          \"half_slots\": [\n";
            for (std::size_t h = 0; h < timeline.half_slots.size(); ++h) {
                const hardware::HalfSlot& slot = timeline.half_slots[h];
                out << "            {\"t_start_s\": " << fmt15(slot.t_start_s)
                    << ", \"t_end_s\": " << fmt15(slot.t_end_s)
                    << ", \"attenuation_db\": " << json_db(slot.attenuation_db)
                    << ", \"polarity\": \"" << (slot.polarity > 0 ? "+" : "-") << "\"}";
                out << (h + 1 < timeline.half_slots.size() ? ",\n" : "\n");
            }
            out << "          ]\n        }";
            out << (t + 1 < schedule.networks.size() ? ",\n" : "\n");
        }
        out << "      ]\n    }";
        out << (e + 1 < schedules.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

namespace {

void append_beam_json(std::ostringstream& out, const char* name,
                      const hardware::BeamPlan& beam, bool trailing_comma) {
    out << "  \"" << name << "\": {\n";
    out << "    \"theta0_deg\": " << fmt15(beam.theta0_deg) << ",\n";
    out << "    \"f0_hz\": " << fmt15(beam.fundamental_hz) << ",\n";
    out << "    \"m\": " << beam.coeffs.sample_count() << ",\n";
    out << "    \"physical_degrees\": [";
    for (std::size_t i = 0; i < beam.physical_degrees.size(); ++i) {
        out << (i ? ", " : "") << beam.physical_degrees[i];
    }
    out << "],\n    \"logical_degrees\": [";
    for (std::size_t i = 0; i < beam.logical_degrees.size(); ++i) {
        out << (i ? ", " : "") << beam.logical_degrees[i];
    }
    out << "],\n    \"networks\": [\n";
    bool first = true;
    for (const hardware::BfnDegreePlan& degree : beam.plan.degrees) {
        if (!degree.active) continue;
        if (!first) out << ",\n";
        first = false;
        out << "      {\"degree\": " << degree.degree
            << ", \"square_wave_hz\": " << fmt15(degree.square_wave_hz) << ", \"attenuator\": \""
            << hardware::attenuator_kind_name(degree.attenuator)
            << "\", \"slot_attenuation_db\": [";
        for (std::size_t i = 0; i < degree.slot_attenuation_db.size(); ++i) {
            out << (i ? ", " : "") << json_db(degree.slot_attenuation_db[i]);
        }
        out << "], \"slot_polarity\": [";
        for (std::size_t i = 0; i < degree.slot_polarity.size(); ++i) {
            out << (i ? ", " : "") << '"' << (degree.slot_polarity[i] > 0 ? "+" : "-") << '"';
        }
        out << "]}";
    }
    out << "\n    ]\n  }" << (trailing_comma ? ",\n" : "\n");
}

}  // namespace

std::string multibeam_to_json(const hardware::MultibeamPlan& plan) {
    std::ostringstream out;
    out << "{\n";
    append_beam_json(out, "beam_a", plan.beam_a, true);
    append_beam_json(out, "beam_b", plan.beam_b, false);
    out << "}\n";
    return out.str();
}

std::string multibeam_pattern_to_csv(const array::Pattern& beam_a, const array::Pattern& beam_b) {
    std::ostringstream out;
    out << "theta_deg,beam,q,re,im,power_db_norm\n";
    const auto emit = [&out](const array::Pattern& pattern, const char* beam) {
        for (std::size_t qi = 0; qi < pattern.harmonics.size(); ++qi) {
            for (std::size_t i = 0; i < pattern.theta_deg.size(); ++i) {
                const std::complex<double> v = pattern.values[qi][i];
                out << fmt15(pattern.theta_deg[i]) << ',' << beam << ',' << pattern.harmonics[qi]
                    << ',' << fmt15(v.real()) << ',' << fmt15(v.imag()) << ','
                    << fmt15(pattern.power_db(static_cast<int>(qi), static_cast<int>(i))) << '\n';
            }
        }
    };
    emit(beam_a, "a");
    emit(beam_b, "b");
    return out.str();
}

}  // namespace haarbeam::cli
