// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace haarbeam::oracles {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

std::complex<double> expi(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Simpson integral of e^{-j w t} weighted by a constant, over [a, b].
/// The phasor recurrence is resynchronized every 64 nodes to keep the
/// accumulated rounding below 1e-14.
std::complex<double> simpson_phase_integral(double w, double a, double b, int subintervals) {
    if (subintervals % 2 != 0) ++subintervals;
    const double h = (b - a) / subintervals;
    const std::complex<double> step = expi(-w * h);
    std::complex<double> node = expi(-w * a);
    std::complex<double> acc = node;  // weight 1
    for (int i = 1; i < subintervals; ++i) {
        if (i % 64 == 0) {
            node = expi(-w * (a + i * h));
        } else {
            node *= step;
        }
        acc += (i % 2 == 1 ? 4.0 : 2.0) * node;
    }
    acc += expi(-w * b);
    return acc * (h / 3.0);
}

}  // namespace

std::complex<double> quad_haar_fourier(int degree, int order, int q, int subintervals) {
    const double scale = static_cast<double>(1 << degree);
    const double a = (order - 1.0) / scale;
    const double b = (order - 0.5) / scale;
    const double c = order / scale;
    const double amplitude = std::sqrt(scale);
    const double w = kTwoPi * q;
    if (q == 0) {
        return {0.0, 0.0};
    }
    return amplitude * (simpson_phase_integral(w, a, b, subintervals) -
                        simpson_phase_integral(w, b, c, subintervals));
}

double continuous_sine_haar_coeff(int degree, int order) {
    const double scale = static_cast<double>(1 << degree);
    const double a = (order - 1.0) / scale;
    const double b = (order - 0.5) / scale;
    const double c = order / scale;
    return std::sqrt(scale) / kTwoPi *
           (std::cos(kTwoPi * a) - 2.0 * std::cos(kTwoPi * b) + std::cos(kTwoPi * c));
}

std::complex<double> zoh_spectrum(const std::vector<double>& values, int q) {
    const int m = static_cast<int>(values.size());
    if (q == 0) {
        double mean = 0.0;
        for (double v : values) mean += v;
        return {mean / m, 0.0};
    }
    const double w = kTwoPi * q;
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < m; ++k) {
        const double a = static_cast<double>(k) / m;
        const double b = static_cast<double>(k + 1) / m;
        acc += values[k] * (expi(-w * a) - expi(-w * b));
    }
    return acc / std::complex<double>(0.0, w);
}

std::complex<double> quadrature_spectrum(const std::vector<double>& values, int q,
                                         int points_per_segment) {
    const int m = static_cast<int>(values.size());
    if (q == 0) return zoh_spectrum(values, 0);
    const double w = kTwoPi * q;
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < m; ++k) {
        const double a = static_cast<double>(k) / m;
        const double b = static_cast<double>(k + 1) / m;
        acc += values[k] * simpson_phase_integral(w, a, b, points_per_segment);
    }
    return acc;
}

double dirichlet_magnitude(int n, double psi) {
    const double denom = std::sin(psi / 2.0);
    if (std::abs(denom) < 1e-14) return static_cast<double>(n);
    return std::abs(std::sin(n * psi / 2.0) / denom);
}

double dirichlet_msll_db(int n) {
    const double first_null = kTwoPi / n;
    double best = 0.0;
    for (double psi = first_null; psi <= kPi; psi += 1e-6) {
        best = std::max(best, dirichlet_magnitude(n, psi));
    }
    return 20.0 * std::log10(best / n);
}

double sawtooth_tail(double x, int q_cut) {
    double frac = x - std::floor(x);
    const double full = kPi * (0.5 - frac);
    // Partial sum via phasor recurrence, resynchronized periodically.
    const std::complex<double> step = expi(kTwoPi * frac);
    std::complex<double> node{1.0, 0.0};
    double partial = 0.0;
    for (int q = 1; q <= q_cut; ++q) {
        if (q % 64 == 0) {
            node = expi(kTwoPi * frac * q);
        } else {
            node *= step;
        }
        partial += node.imag() / q;
    }
    return full - partial;
}

double stair_fourier_tail(const std::vector<double>& values, double u, int q_cut) {
    const int m = static_cast<int>(values.size());
    // stair = sum_k values[k] * indicator([k/M, (k+1)/M)); the remainder of
    // each indicator's series telescopes into jump terms at the breakpoints.
    double tail = 0.0;
    for (int j = 0; j < m; ++j) {
        const double jump = values[(j + 1) % m] - values[j];
        if (jump == 0.0) continue;
        tail += jump * sawtooth_tail(u - static_cast<double>(j + 1) / m, q_cut);
    }
    return tail / kPi;
}

double sine_stairstep_ise(int m) {
    double ise = 0.0;
    for (int k = 1; k <= m; ++k) {
        const double a = (k - 1.0) / m;
        const double b = static_cast<double>(k) / m;
        const double f = std::sin(kTwoPi * (k - 0.5) / m);
        const double int_sin2 =
            (b - a) / 2.0 - (std::sin(2.0 * kTwoPi * b) - std::sin(2.0 * kTwoPi * a)) / (4.0 * kTwoPi);
        const double int_sin = (std::cos(kTwoPi * a) - std::cos(kTwoPi * b)) / kTwoPi;
        ise += int_sin2 - 2.0 * f * int_sin + f * f * (b - a);
    }
    return ise;
}

std::complex<double> piecewise_fourier_coefficient(
    const std::function<std::complex<double>(double)>& signal,
    const std::vector<double>& breakpoints, double period, int q) {
    std::vector<double> edges = breakpoints;
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [period](double a, double b) { return b - a < 1e-15 * period; }),
                edges.end());
    if (edges.empty() || edges.front() > 1e-15 * period) {
        edges.insert(edges.begin(), 0.0);
    }
    edges.push_back(period);

    const double w = kTwoPi * q / period;
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i];
        const double b = edges[i + 1];
        if (b - a <= 0.0) continue;
        const std::complex<double> value = signal(0.5 * (a + b));
        if (q == 0) {
            acc += value * (b - a);
        } else {
            acc += value * (expi(-w * a) - expi(-w * b)) / std::complex<double>(0.0, w);
        }
    }
    return acc / period;
}

}  // namespace haarbeam::oracles
