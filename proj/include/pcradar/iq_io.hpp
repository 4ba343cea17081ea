#pragma once

#include "pcradar/channel.hpp"
#include "pcradar/types.hpp"

#include <string>
#include <vector>

namespace pcradar {

// Raw capture format: interleaved 32-bit IEEE-754 little-endian float pairs,
// in-phase then quadrature. The standard SDR file layout; no auto-detection.

// Segments a capture into consecutive windows of params.n_bins samples. A trailing
// partial window is truncated; its sample count is returned via dropped_samples.
std::vector<cvec> ingest_iq(const std::string& path, const RadarParams& params,
                            std::size_t* dropped_samples = nullptr);

// Samples are narrowed to float32 on write.
void write_iq(const std::string& path, const cvec& samples);

} // namespace pcradar
