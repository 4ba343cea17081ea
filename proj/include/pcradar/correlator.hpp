#pragma once

#include "pcradar/types.hpp"

#include <optional>

namespace pcradar {

// Circular cross-correlation, r[k] = sum_n received[n] * conj(reference[(n - k) mod N]).
//
// The FFT route computes IDFT(DFT(received) .* conj(DFT(reference))) and requires a
// power-of-two length. The direct route evaluates the sum as written in O(N^2) and is
// the reference implementation the FFT route is validated against.
cvec circular_xcorr_fft(const cvec& received, const cvec& reference);
cvec circular_xcorr_direct(const cvec& received, const cvec& reference);

// One correlation trace plus the data derived from it.
struct AScan {
    cvec correlation;
    std::vector<double> magnitudes;
    int n_bins = 0;
    bool aligned = false;
    std::optional<int> reference_bin;
};

AScan to_ascan(cvec correlation);

struct Peak {
    int bin;
    double magnitude;
};

// Circular local maxima (>= both neighbours) at or above relative_threshold * max.
// An all-zero scan yields no peaks. Results are sorted by bin.
std::vector<Peak> find_peaks(const AScan& scan, double relative_threshold);

} // namespace pcradar
