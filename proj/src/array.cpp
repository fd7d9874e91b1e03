// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/array.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "haarbeam/kernels.hpp"

namespace haarbeam::array {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
constexpr double kSpeedOfLight = 299792458.0;

double deg_to_rad(double deg) { return deg * (kPi / 180.0); }

int effective_threads(int max_threads, std::size_t work_items) {
    int threads = max_threads > 0 ? max_threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    const int chunks = static_cast<int>((work_items + 7) / 8);
    return std::min(threads, std::max(1, chunks));
}

}  // namespace

double cos_degrees(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) r += 360.0;
    double folded;
    double sign;
    if (r <= 90.0) {
        folded = r;
        sign = 1.0;
    } else if (r <= 180.0) {
        folded = 180.0 - r;
        sign = -1.0;
    } else if (r <= 270.0) {
        folded = r - 180.0;
        sign = -1.0;
    } else {
        folded = 360.0 - r;
        sign = 1.0;
    }
    // cos over [0, 45], sin of the complement over (45, 90]: keeps the
    // argument small and makes cos_degrees(90) exactly zero.
    const double value = folded <= 45.0 ? std::cos(deg_to_rad(folded))
                                        : std::sin(deg_to_rad(90.0 - folded));
    return sign * value;
}

double ArrayGeometry::wavelength_m() const { return kSpeedOfLight / carrier_hz; }

double ArrayGeometry::wavenumber() const { return kTwoPi / wavelength_m(); }

double ArrayGeometry::position_m(int n) const { return n * spacing_wavelengths * wavelength_m(); }

double ArrayGeometry::phase_per_element() const { return kTwoPi * spacing_wavelengths; }

ArrayGeometry uniform_geometry(int element_count, double spacing_wavelengths, double carrier_hz) {
    if (element_count < 1) {
        throw std::domain_error("element count must be >= 1");
    }
    if (!(spacing_wavelengths > 0.0)) {
        throw std::domain_error("element spacing must be positive");
    }
    if (!(carrier_hz > 0.0)) {
        throw std::domain_error("carrier frequency must be positive");
    }
    return ArrayGeometry{element_count, spacing_wavelengths, carrier_hz};
}

SteeringConfig steering_delays(double theta0_deg, int element_count, double f0_hz) {
    if (!(theta0_deg >= 0.0 && theta0_deg <= 180.0)) {
        throw std::domain_error("steering angle must lie in [0, 180] degrees");
    }
    if (element_count < 1) {
        throw std::domain_error("element count must be >= 1");
    }
    if (!(f0_hz > 0.0)) {
        throw std::domain_error("fundamental frequency must be positive");
    }
    const double period = 1.0 / f0_hz;
    const double cos0 = cos_degrees(theta0_deg);
    SteeringConfig out;
    out.target_angle_deg = theta0_deg;
    out.fundamental_hz = f0_hz;
    out.delays_s.resize(element_count);
    for (int n = 0; n < element_count; ++n) {
        // omega0 * D_n = pi * n * cos(theta0)
        double d = n * cos0 / (2.0 * f0_hz);
        d = std::fmod(d, period);
        if (d < 0.0) d += period;
        if (d >= period) d = 0.0;
        if (d == 0.0) d = 0.0;  // normalize -0.0
        out.delays_s[n] = d;
    }
    return out;
}

DynamicExcitations dynamic_excitations(const haar::HaarCoefficients& coeffs,
                                       const SteeringConfig& steering, int q) {
    const std::complex<double> pulse = spectrum::pulse_coefficient(coeffs, q);
    const int m = coeffs.sample_count();
    if (m % 4 != 0) {
        throw std::domain_error("dynamic excitations require M divisible by 4");
    }
    DynamicExcitations out;
    out.harmonic = q;
    out.values.resize(steering.element_count());
    if (pulse == std::complex<double>{0.0, 0.0}) {
        // Suppressed harmonic: exactly zero for every element.
        return out;
    }
    const double omega0 = kTwoPi * steering.fundamental_hz;
    for (int n = 0; n < steering.element_count(); ++n) {
        const double phase = -q * omega0 * steering.delays_s[n];
        out.values[n] = pulse * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return out;
}

std::complex<double> array_factor(const DynamicExcitations& excitations,
                                  const ArrayGeometry& geometry, double theta_deg) {
    if (excitations.element_count() != geometry.element_count) {
        throw std::domain_error("excitation length does not match array geometry");
    }
    const int n = excitations.element_count();
    std::vector<double> exc_re(n), exc_im(n);
    for (int i = 0; i < n; ++i) {
        exc_re[i] = excitations.values[i].real();
        exc_im[i] = excitations.values[i].imag();
    }
    const double step = geometry.phase_per_element() * cos_degrees(theta_deg);
    double out_re = 0.0, out_im = 0.0;
    kernels::steered_sum({&step, 1}, exc_re, exc_im, {&out_re, 1}, {&out_im, 1});
    return {out_re, out_im};
}

int Pattern::harmonic_index(int q) const {
    const auto it = std::find(harmonics.begin(), harmonics.end(), q);
    return it == harmonics.end() ? -1 : static_cast<int>(it - harmonics.begin());
}

double Pattern::power(int harmonic_index, int angle_index) const {
    const std::complex<double> v = values[harmonic_index][angle_index];
    return v.real() * v.real() + v.imag() * v.imag();
}

double Pattern::power_db(int harmonic_index, int angle_index) const {
    const double p = power(harmonic_index, angle_index);
    if (p == 0.0 || peak_power == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(p / peak_power);
}

Pattern compute_pattern(const haar::HaarCoefficients& coeffs, const SteeringConfig& steering,
                        const ArrayGeometry& geometry, const std::vector<int>& q_list,
                        const std::vector<double>& theta_grid_deg, int max_threads) {
    if (q_list.empty()) {
        throw std::domain_error("pattern evaluation needs at least one harmonic");
    }
    if (theta_grid_deg.empty()) {
        throw std::domain_error("pattern evaluation needs a non-empty theta grid");
    }
    for (std::size_t i = 0; i < theta_grid_deg.size(); ++i) {
        if (!(theta_grid_deg[i] >= 0.0 && theta_grid_deg[i] <= 180.0)) {
            throw std::domain_error("theta grid must lie within [0, 180] degrees");
        }
        if (i > 0 && !(theta_grid_deg[i] > theta_grid_deg[i - 1])) {
            throw std::domain_error("theta grid must be strictly increasing");
        }
    }
    if (steering.element_count() != geometry.element_count) {
        throw std::domain_error("steering delays do not match array geometry");
    }

    const std::size_t points = theta_grid_deg.size();
    std::vector<double> step(points);
    const double kd = geometry.phase_per_element();
    for (std::size_t i = 0; i < points; ++i) {
        step[i] = kd * cos_degrees(theta_grid_deg[i]);
    }

    Pattern out;
    out.theta_deg = theta_grid_deg;
    out.harmonics = q_list;
    out.values.resize(q_list.size());

    const int threads = effective_threads(max_threads, points);
    std::vector<double> exc_re(geometry.element_count), exc_im(geometry.element_count);
    std::vector<double> sweep_re(points), sweep_im(points);
    for (std::size_t qi = 0; qi < q_list.size(); ++qi) {
        const DynamicExcitations exc = dynamic_excitations(coeffs, steering, q_list[qi]);
        for (int n = 0; n < exc.element_count(); ++n) {
            exc_re[n] = exc.values[n].real();
            exc_im[n] = exc.values[n].imag();
        }
        if (threads == 1) {
            kernels::steered_sum(step, exc_re, exc_im, sweep_re, sweep_im);
        } else {
            // Chunks are multiples of 8 points so SIMD lane grouping, and
            // therefore bit-level output, never depends on the thread count.
            const std::size_t chunk = ((points + threads - 1) / threads + 7) / 8 * 8;
            std::vector<std::thread> pool;
            for (std::size_t begin = 0; begin < points; begin += chunk) {
                const std::size_t len = std::min(chunk, points - begin);
                pool.emplace_back([&, begin, len] {
                    kernels::steered_sum(std::span(step).subspan(begin, len), exc_re, exc_im,
                                         std::span(sweep_re).subspan(begin, len),
                                         std::span(sweep_im).subspan(begin, len));
                });
            }
            for (auto& t : pool) t.join();
        }
        out.values[qi].resize(points);
        for (std::size_t i = 0; i < points; ++i) {
            out.values[qi][i] = {sweep_re[i], sweep_im[i]};
        }
    }

    std::vector<double> mag2(points);
    double peak = 0.0;
    for (std::size_t qi = 0; qi < q_list.size(); ++qi) {
        for (std::size_t i = 0; i < points; ++i) {
            sweep_re[i] = out.values[qi][i].real();
            sweep_im[i] = out.values[qi][i].imag();
        }
        kernels::magnitude_squared(sweep_re, sweep_im, mag2);
        for (std::size_t i = 0; i < points; ++i) peak = std::max(peak, mag2[i]);
    }
    out.peak_power = peak;
    return out;
}

std::complex<double> time_domain_field(const haar::HaarCoefficients& coeffs,
                                       const SteeringConfig& steering,
                                       const ArrayGeometry& geometry, double theta_deg,
                                       double t_s) {
    if (steering.element_count() != geometry.element_count) {
        throw std::domain_error("steering delays do not match array geometry");
    }
    if (coeffs.sample_count() % 4 != 0) {
        throw std::domain_error("time-domain field requires M divisible by 4");
    }
    const double f0 = steering.fundamental_hz;
    const double kd = geometry.phase_per_element();
    const double cos_theta = cos_degrees(theta_deg);
    std::complex<double> acc{0.0, 0.0};
    for (int n = 0; n < geometry.element_count; ++n) {
        const double u = (t_s - steering.delays_s[n]) * f0;  // normalized time
        const std::complex<double> h{haar::stairstep_eval(coeffs, u),
                                     haar::stairstep_eval(coeffs, u - 0.25)};
        const double phase = kd * n * cos_theta;
        acc += h * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc * kInvSqrt2;
}

std::vector<double> make_theta_grid(double step_deg) {
    if (!(step_deg > 0.0 && step_deg <= 180.0)) {
        throw std::domain_error("theta step must lie in (0, 180] degrees");
    }
    const long long count = std::llround(180.0 / step_deg);
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count) + 1);
    for (long long i = 0; i <= count; ++i) {
        grid.push_back(std::min(i * step_deg, 180.0));
    }
    // Strictly increasing even if count*step overshot 180 by rounding.
    while (grid.size() >= 2 && grid[grid.size() - 2] >= grid.back()) {
        grid.erase(grid.end() - 2);
    }
    return grid;
}

std::vector<int> default_q_list(int m, int q_max) {
    std::vector<int> out;
    for (int q = -q_max; q <= q_max; ++q) {
        const int mod4 = ((q % 4) + 4) % 4;
        if (mod4 != 1) continue;
        const int mod_m = ((q % m) + m) % m;
        if (mod_m == 1 || mod_m == m - 1) out.push_back(q);
    }
    return out;
}

}  // namespace haarbeam::array
