// SPDX-License-Identifier: Apache-2.0

#include "haarbeam/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace haarbeam::haar {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int int_log2(int n) {
    int p = 0;
    while (n > 1) {
        n >>= 1;
        ++p;
    }
    return p;
}

}  // namespace

bool is_valid(const HaarIndex& index) {
    return index.degree >= 0 && index.degree < 31 && index.order >= 1 &&
           index.order <= (1 << index.degree);
}

void require_valid(const HaarIndex& index) {
    if (!is_valid(index)) {
        throw std::domain_error("invalid Haar index: degree " + std::to_string(index.degree) +
                                ", order " + std::to_string(index.order));
    }
}

void require_valid(const WaveformSamples& samples) {
    const int m = samples.count();
    if (m < 4 || !is_power_of_two(m)) {
        throw std::domain_error("waveform sample count must be a power of two >= 4, got " +
                                std::to_string(m));
    }
}

WaveformSamples sample_sine(int m, SampleGrid grid) {
    if (m < 4 || !is_power_of_two(m)) {
        throw std::domain_error("m must be a power of two >= 4, got " + std::to_string(m));
    }
    WaveformSamples out;
    out.grid = grid;
    out.values.resize(m);
    for (int k = 1; k <= m; ++k) {
        const double x = grid == SampleGrid::midpoint ? (k - 0.5) / m : (k - 1.0) / m;
        out.values[k - 1] = std::sin(kTwoPi * x);
    }
    return out;
}

std::size_t HaarCoefficients::flat_index(const HaarIndex& index) {
    return static_cast<std::size_t>((1 << index.degree) - 1 + (index.order - 1));
}

double HaarCoefficients::at(const HaarIndex& index) const {
    require_valid(index);
    if (index.degree >= resolution) {
        throw std::domain_error("Haar index degree " + std::to_string(index.degree) +
                                " exceeds resolution " + std::to_string(resolution));
    }
    return detail[flat_index(index)];
}

double& HaarCoefficients::at(const HaarIndex& index) {
    require_valid(index);
    if (index.degree >= resolution) {
        throw std::domain_error("Haar index degree " + std::to_string(index.degree) +
                                " exceeds resolution " + std::to_string(resolution));
    }
    return detail[flat_index(index)];
}

void require_valid(const HaarCoefficients& coeffs) {
    if (coeffs.resolution < 2) {
        throw std::domain_error("Haar coefficient resolution must be >= 2 (M >= 4)");
    }
    if (static_cast<int>(coeffs.detail.size()) != coeffs.detail_count()) {
        throw std::domain_error("Haar coefficient set must hold exactly 2^p - 1 detail entries");
    }
}

double haar_wavelet_eval(const HaarIndex& index, double t) {
    require_valid(index);
    const double scale = static_cast<double>(1 << index.degree);
    const double a = (index.order - 1.0) / scale;
    const double b = (index.order - 0.5) / scale;
    const double c = index.order / scale;
    const double amplitude = std::sqrt(scale);
    if (t >= a && t <= b) return amplitude;
    if (t > b && t <= c) return -amplitude;
    return 0.0;
}

HaarMatrix haar_matrix(int m) {
    if (!is_power_of_two(m)) {
        throw std::domain_error("Haar matrix order must be a power of two, got " +
                                std::to_string(m));
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<double> h{1.0};
    for (int size = 2; size <= m; size *= 2) {
        const int half = size / 2;
        std::vector<double> next(static_cast<std::size_t>(size) * size, 0.0);
        // Top half: H_{size/2} (x) (+1 +1), scaled by 1/sqrt(2).
        for (int r = 0; r < half; ++r) {
            for (int c = 0; c < half; ++c) {
                const double v = inv_sqrt2 * h[static_cast<std::size_t>(r) * half + c];
                next[static_cast<std::size_t>(r) * size + 2 * c] = v;
                next[static_cast<std::size_t>(r) * size + 2 * c + 1] = v;
            }
        }
        // Bottom half: I_{size/2} (x) (+1 -1), scaled by 1/sqrt(2).
        for (int r = 0; r < half; ++r) {
            next[static_cast<std::size_t>(half + r) * size + 2 * r] = inv_sqrt2;
            next[static_cast<std::size_t>(half + r) * size + 2 * r + 1] = -inv_sqrt2;
        }
        h = std::move(next);
    }
    HaarMatrix out;
    out.order = m;
    out.entries = std::move(h);
    return out;
}

HaarCoefficients hdwt_forward_dense(const WaveformSamples& samples) {
    require_valid(samples);
    const int m = samples.count();
    const HaarMatrix h = haar_matrix(m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    std::vector<double> w(m, 0.0);
    for (int r = 0; r < m; ++r) {
        double acc = 0.0;
        for (int c = 0; c < m; ++c) acc += h.at(r, c) * samples.values[c];
        w[r] = scale * acc;
    }
    HaarCoefficients out;
    out.resolution = int_log2(m);
    out.mean = w[0];
    out.detail.assign(w.begin() + 1, w.end());
    return out;
}

HaarCoefficients hdwt_forward_fast(const WaveformSamples& samples) {
    require_valid(samples);
    const int m = samples.count();
    const int p = int_log2(m);
    HaarCoefficients out;
    out.resolution = p;
    out.detail.resize(m - 1, 0.0);

    // Pyramid of block averages: level l holds 2^l averages of f over the
    // dyadic intervals of width 1/2^l.  W^{lm} = (A_left - A_right) /
    // (2 sqrt(2^l)) with the two children at level l+1.
    std::vector<double> averages = samples.values;
    for (int level = p - 1; level >= 0; --level) {
        const int blocks = 1 << level;
        const double denom = 2.0 * std::sqrt(static_cast<double>(1 << level));
        std::vector<double> coarser(blocks, 0.0);
        for (int b = 0; b < blocks; ++b) {
            const double left = averages[2 * b];
            const double right = averages[2 * b + 1];
            coarser[b] = 0.5 * (left + right);
            out.detail[HaarCoefficients::flat_index({level, b + 1})] = (left - right) / denom;
        }
        averages = std::move(coarser);
    }
    out.mean = averages[0];
    return out;
}

HaarCoefficients hdwt_forward(const WaveformSamples& samples) {
    require_valid(samples);
    return samples.count() <= 64 ? hdwt_forward_dense(samples) : hdwt_forward_fast(samples);
}

WaveformSamples hdwt_inverse_dense(const HaarCoefficients& coeffs) {
    require_valid(coeffs);
    const int m = coeffs.sample_count();
    const HaarMatrix h = haar_matrix(m);
    const double scale = std::sqrt(static_cast<double>(m));
    WaveformSamples out;
    out.values.resize(m, 0.0);
    for (int c = 0; c < m; ++c) {
        double acc = h.at(0, c) * coeffs.mean;
        for (int r = 1; r < m; ++r) acc += h.at(r, c) * coeffs.detail[r - 1];
        out.values[c] = scale * acc;
    }
    return out;
}

WaveformSamples hdwt_inverse_fast(const HaarCoefficients& coeffs) {
    require_valid(coeffs);
    const int p = coeffs.resolution;
    std::vector<double> averages{coeffs.mean};
    for (int level = 0; level < p; ++level) {
        const int blocks = 1 << level;
        const double half_step = std::sqrt(static_cast<double>(1 << level));
        std::vector<double> finer(2 * blocks, 0.0);
        for (int b = 0; b < blocks; ++b) {
            const double d = coeffs.detail[HaarCoefficients::flat_index({level, b + 1})];
            finer[2 * b] = averages[b] + half_step * d;
            finer[2 * b + 1] = averages[b] - half_step * d;
        }
        averages = std::move(finer);
    }
    WaveformSamples out;
    out.values = std::move(averages);
    return out;
}

WaveformSamples hdwt_inverse(const HaarCoefficients& coeffs) {
    require_valid(coeffs);
    return coeffs.sample_count() <= 64 ? hdwt_inverse_dense(coeffs) : hdwt_inverse_fast(coeffs);
}

double stairstep_eval(const HaarCoefficients& coeffs, double t) {
    require_valid(coeffs);
    double u = t - std::floor(t);
    if (u >= 1.0) u = 0.0;  // guards floor rounding for tiny negative t
    // Walk down the dyadic tree: at each degree exactly one wavelet covers u.
    // Half-open segments give the zero-order-hold convention at breakpoints.
    double value = coeffs.mean;
    for (int level = 0; level < coeffs.resolution; ++level) {
        const double scaled = u * (1 << level);
        int block = static_cast<int>(scaled);
        if (block >= (1 << level)) block = (1 << level) - 1;
        const double amplitude = std::sqrt(static_cast<double>(1 << level));
        const double sign = (scaled - block) < 0.5 ? 1.0 : -1.0;
        value += coeffs.detail[HaarCoefficients::flat_index({level, block + 1})] * sign * amplitude;
    }
    return value;
}

}  // namespace haarbeam::haar
