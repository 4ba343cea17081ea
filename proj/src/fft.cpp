#include "pcradar/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pcradar {

namespace {

// Iterative decimation-in-time radix-2 with bit-reversal reordering.
// No retained plan or workspace: every call is self-contained, so the
// transform is safe from any number of threads.
void transform(cvec& data, bool inverse) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n)) {
        throw std::invalid_argument("FFT length must be a power of two, got " +
                                    std::to_string(n));
    }
    if (n == 1) return;

    for (std::size_t i = 1, rev = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; rev & bit; bit >>= 1) rev ^= bit;
        rev ^= bit;
        if (i < rev) std::swap(data[i], data[rev]);
    }

    const double sign = inverse ? +1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t start = 0; start < n; start += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[start + k];
                const std::complex<double> v = data[start + k + len / 2] * w;
                data[start + k] = u + v;
                data[start + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

} // namespace

void fft_inplace(cvec& data) { transform(data, false); }

void ifft_inplace(cvec& data) {
    transform(data, true);
    const double scale = 1.0 / static_cast<double>(data.size());
    for (auto& x : data) x *= scale;
}

} // namespace pcradar
