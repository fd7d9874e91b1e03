// SPDX-License-Identifier: Apache-2.0
//
// Haar wavelet evaluation, Haar matrix construction, the forward/inverse
// discrete Haar transform (HDWT), and stair-step waveform synthesis.

#pragma once

#include <cstddef>
#include <vector>

namespace haarbeam::haar {

/// Identifies one Haar wavelet h^{lm}: degree l (scale) and order m
/// (position within the degree), with 1 <= m <= 2^l.
struct HaarIndex {
    int degree = 0;
    int order = 1;
};

bool is_valid(const HaarIndex& index);

/// Throws std::domain_error when the index violates 1 <= order <= 2^degree.
void require_valid(const HaarIndex& index);

enum class SampleGrid {
    midpoint,       // x_k = (k - 1/2) / M, k = 1..M  (normative)
    left_endpoint,  // x_k = (k - 1) / M
};

/// One period of a modulating waveform, sampled at M = 2^p equally spaced
/// points over the normalized period [0, 1).  M must be a power of two >= 4.
struct WaveformSamples {
    std::vector<double> values;
    SampleGrid grid = SampleGrid::midpoint;

    int count() const { return static_cast<int>(values.size()); }
};

/// Validates the sample-count invariant (power of two, >= 4).
void require_valid(const WaveformSamples& samples);

/// Samples sin(2*pi*t) over one normalized period.
WaveformSamples sample_sine(int m, SampleGrid grid = SampleGrid::midpoint);

/// The HDWT of one waveform period: the mean W^0 plus the 2^p - 1 detail
/// coefficients W^{lm} for degrees 0..p-1, stored in degree-major order
/// (W^0, W^{01}, W^{11}, W^{12}, W^{21}, ...).
struct HaarCoefficients {
    int resolution = 0;  // p, with M = 2^p samples
    double mean = 0.0;   // W^0
    std::vector<double> detail;

    int sample_count() const { return 1 << resolution; }
    int detail_count() const { return (1 << resolution) - 1; }

    double at(const HaarIndex& index) const;
    double& at(const HaarIndex& index);
    double at(int degree, int order) const { return at(HaarIndex{degree, order}); }

    /// Flat offset of (l, m) in `detail`: 2^l - 1 + (m - 1).
    static std::size_t flat_index(const HaarIndex& index);
};

void require_valid(const HaarCoefficients& coeffs);

/// Orthogonal M x M Haar matrix built from the Kronecker recursion seeded
/// with H_1 = [1].  Row 0 is the constant function; row r >= 1 holds the
/// wavelet of degree l = floor(log2 r), order m = r - 2^l + 1, scaled by
/// 1/sqrt(M).
struct HaarMatrix {
    int order = 0;
    std::vector<double> entries;  // row-major

    double at(int row, int col) const { return entries[static_cast<std::size_t>(row) * order + col]; }
};

/// Evaluates h^{lm}(t) for t in [0, 1) following the closed/open interval
/// conventions of the defining piecewise formula: +sqrt(2^l) on
/// [a, b], -sqrt(2^l) on (b, c], 0 otherwise, with a = (m-1)/2^l,
/// b = (m-1/2)/2^l, c = m/2^l.
double haar_wavelet_eval(const HaarIndex& index, double t);

/// Builds H_M.  M must be a power of two >= 1.
HaarMatrix haar_matrix(int m);

/// Forward HDWT.  Equals the normalized sums W^{lm} = (1/M) sum f(x_k)
/// h^{lm}(x_k), i.e. W = (1/sqrt(M)) * H_M * f.  Uses the dense matrix for
/// M <= 64 and the O(M) pyramid recursion above; both paths agree to 1e-12
/// and are exposed below for testing.
HaarCoefficients hdwt_forward(const WaveformSamples& samples);
HaarCoefficients hdwt_forward_dense(const WaveformSamples& samples);
HaarCoefficients hdwt_forward_fast(const WaveformSamples& samples);

/// Inverse HDWT, the exact adjoint: f = sqrt(M) * H_M^T * W.
WaveformSamples hdwt_inverse(const HaarCoefficients& coeffs);
WaveformSamples hdwt_inverse_dense(const HaarCoefficients& coeffs);
WaveformSamples hdwt_inverse_fast(const HaarCoefficients& coeffs);

/// Evaluates the truncated Haar series W^0 + sum W^{lm} h^{lm}(t mod 1) at
/// any real t.  The result is the zero-order-hold stair-step: on the segment
/// [(k-1)/M, k/M) it equals the k-th reconstructed sample.
double stairstep_eval(const HaarCoefficients& coeffs, double t);

}  // namespace haarbeam::haar
