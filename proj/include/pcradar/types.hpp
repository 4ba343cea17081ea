#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pcradar {

using cvec = std::vector<std::complex<double>>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace pcradar
