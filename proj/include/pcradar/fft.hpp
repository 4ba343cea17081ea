#pragma once

#include "pcradar/types.hpp"

namespace pcradar {

// In-place radix-2 transforms; data.size() must be a power of two.
// Forward is unscaled, inverse carries the 1/N factor.
void fft_inplace(cvec& data);
void ifft_inplace(cvec& data);

} // namespace pcradar
