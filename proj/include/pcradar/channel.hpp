#pragma once

#include "pcradar/codes.hpp"
#include "pcradar/rng.hpp"
#include "pcradar/types.hpp"

#include <cstdint>
#include <vector>

namespace pcradar {

struct RadarParams {
    double sample_rate = 10e6;      // samples / second
    double wave_speed = 3e8;        // m/s
    int n_bins = 128;               // code length after samples-per-symbol expansion
    int samples_per_symbol = 1;

    double bin_resolution_m() const { return wave_speed / (2.0 * sample_rate); }
    double max_unambiguous_range_m() const { return n_bins * bin_resolution_m(); }

    void validate() const;
};

struct Target {
    double range_m;    // one-way range
    double amplitude;  // relative to the direct path, in (0, 1]
};

enum class DelayKind { fixed, uniform_over_bins };

struct DelayModel {
    DelayKind kind = DelayKind::uniform_over_bins;
    int fixed_bin = 0;

    static DelayModel fixed(int bin) { return {DelayKind::fixed, bin}; }
    static DelayModel uniform() { return {DelayKind::uniform_over_bins, 0}; }
};

struct ChannelConfig {
    double direct_amplitude = 1.0;
    std::vector<Target> targets;
    DelayModel delay;
    double noise_sigma = 0.0;   // std-dev per real/imaginary component
    int smoothing_window = 1;   // 1 = off
    std::uint64_t seed = 0;

    void validate(const RadarParams& params) const;
};

struct BinQuantization {
    int bin;
    double residual; // signed distance from the exact delay to the chosen bin, in bins
};

// Round-trip range -> bin index, round to nearest. Throws if the bin falls at or
// beyond n_bins, naming the unambiguous-range limit.
BinQuantization quantize_range(double range_m, const RadarParams& params);
int range_to_bin(double range_m, const RadarParams& params);

double bin_to_range(int bin, const RadarParams& params);

int draw_delay(const ChannelConfig& config, const RadarParams& params, SplitMix64& rng);

// One received window: direct path plus target echoes, all rotated by the protocol
// delay, then an optional circular moving average, then complex Gaussian noise.
// Noise is added after smoothing; the smoothing models the band-limited channel,
// not the receiver noise floor.
cvec simulate_received(const PaddedCode& code, int delay, const ChannelConfig& config,
                       const RadarParams& params, SplitMix64& rng);

} // namespace pcradar
