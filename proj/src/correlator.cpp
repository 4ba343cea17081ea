#include "pcradar/correlator.hpp"

#include "pcradar/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pcradar {

namespace {

void require_equal_lengths(const cvec& received, const cvec& reference) {
    if (received.size() != reference.size()) {
        throw std::invalid_argument("correlation length mismatch: received has " +
                                    std::to_string(received.size()) + " samples, reference has " +
                                    std::to_string(reference.size()));
    }
    if (received.empty()) {
        throw std::invalid_argument("correlation inputs must be non-empty");
    }
}

} // namespace

cvec circular_xcorr_fft(const cvec& received, const cvec& reference) {
    require_equal_lengths(received, reference);
    if (!is_power_of_two(received.size())) {
        throw std::invalid_argument("FFT correlation requires a power-of-two length, got " +
                                    std::to_string(received.size()));
    }
    cvec x = received;
    cvec ref = reference;
    fft_inplace(x);
    fft_inplace(ref);
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] *= std::conj(ref[k]);
    }
    ifft_inplace(x);
    return x;
}

cvec circular_xcorr_direct(const cvec& received, const cvec& reference) {
    require_equal_lengths(received, reference);
    const int n = static_cast<int>(received.size());
    cvec out(received.size());
    // Summation runs over the reference index j, so bin k of a rotated input is
    // evaluated with exactly the operand sequence of bin (k - d) of the original:
    // the output of a circularly shifted input is the bit-exact shifted output.
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            acc += received[static_cast<std::size_t>((j + k) % n)] *
                   std::conj(reference[static_cast<std::size_t>(j)]);
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

AScan to_ascan(cvec correlation) {
    AScan scan;
    scan.n_bins = static_cast<int>(correlation.size());
    scan.magnitudes.resize(correlation.size());
    for (std::size_t k = 0; k < correlation.size(); ++k) {
        scan.magnitudes[k] = std::abs(correlation[k]);
    }
    scan.correlation = std::move(correlation);
    return scan;
}

std::vector<Peak> find_peaks(const AScan& scan, double relative_threshold) {
    if (scan.n_bins < 1) {
        throw std::invalid_argument("find_peaks requires at least one bin");
    }
    if (!(relative_threshold > 0.0) || relative_threshold > 1.0) {
        throw std::invalid_argument("relative_threshold must lie in (0, 1]");
    }
    const int n = scan.n_bins;
    double max_mag = 0.0;
    for (double m : scan.magnitudes) max_mag = std::max(max_mag, m);

    std::vector<Peak> peaks;
    if (max_mag == 0.0) return peaks; // nothing to detect in an all-zero scan

    const double floor = relative_threshold * max_mag;
    for (int k = 0; k < n; ++k) {
        const double m = scan.magnitudes[static_cast<std::size_t>(k)];
        const double left = scan.magnitudes[static_cast<std::size_t>((k + n - 1) % n)];
        const double right = scan.magnitudes[static_cast<std::size_t>((k + 1) % n)];
        if (m >= left && m >= right && m >= floor) {
            peaks.push_back({k, m});
        }
    }
    return peaks;
}

} // namespace pcradar
