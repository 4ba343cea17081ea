#include "pcradar/channel.hpp"

#include "pcradar/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pcradar {

namespace {

std::string format_meters(double m) {
    std::ostringstream out;
    out << m;
    return out.str();
}

} // namespace

void RadarParams::validate() const {
    if (!(sample_rate > 0.0)) throw validation_error("sample_rate must be positive");
    if (!(wave_speed > 0.0)) throw validation_error("wave_speed must be positive");
    if (n_bins <= 0 || !is_power_of_two(static_cast<std::size_t>(n_bins))) {
        throw validation_error("n_bins must be a positive power of two, got " +
                               std::to_string(n_bins));
    }
    if (samples_per_symbol < 1) {
        throw validation_error("samples_per_symbol must be >= 1, got " +
                               std::to_string(samples_per_symbol));
    }
}

void ChannelConfig::validate(const RadarParams& params) const {
    if (direct_amplitude < 0.0) throw validation_error("direct_amplitude must be non-negative");
    double max_target = 0.0;
    for (const Target& t : targets) {
        if (!(t.amplitude > 0.0) || t.amplitude > 1.0) {
            throw validation_error("target amplitude must lie in (0, 1], got " +
                                   format_meters(t.amplitude));
        }
        if (t.range_m < 0.0) throw validation_error("target range must be non-negative");
        quantize_range(t.range_m, params); // throws beyond the unambiguous limit
        max_target = std::max(max_target, t.amplitude);
    }
    // The alignment method anchors on the strongest return being the direct path.
    if (!targets.empty() && !(direct_amplitude > max_target)) {
        throw validation_error("direct_amplitude (" + format_meters(direct_amplitude) +
                               ") must exceed every target amplitude (max " +
                               format_meters(max_target) + ")");
    }
    if (delay.kind == DelayKind::fixed &&
        (delay.fixed_bin < 0 || delay.fixed_bin >= params.n_bins)) {
        throw validation_error("fixed delay bin " + std::to_string(delay.fixed_bin) +
                               " outside [0, " + std::to_string(params.n_bins) + ")");
    }
    if (noise_sigma < 0.0) throw validation_error("noise_sigma must be non-negative");
    if (smoothing_window < 1) throw validation_error("smoothing_window must be >= 1");
}

BinQuantization quantize_range(double range_m, const RadarParams& params) {
    if (range_m < 0.0) throw validation_error("range must be non-negative");
    const double exact = 2.0 * range_m * params.sample_rate / params.wave_speed;
    const int bin = static_cast<int>(std::lround(exact));
    if (bin >= params.n_bins) {
        throw validation_error("range " + format_meters(range_m) +
                               " m maps to bin " + std::to_string(bin) +
                               ", at or beyond the maximum unambiguous range of " +
                               format_meters(params.max_unambiguous_range_m()) + " m");
    }
    return {bin, exact - bin};
}

int range_to_bin(double range_m, const RadarParams& params) {
    return quantize_range(range_m, params).bin;
}

double bin_to_range(int bin, const RadarParams& params) {
    if (bin < 0 || bin >= params.n_bins) {
        throw validation_error("bin " + std::to_string(bin) + " outside [0, " +
                               std::to_string(params.n_bins) + ")");
    }
    return bin * params.wave_speed / (2.0 * params.sample_rate);
}

int draw_delay(const ChannelConfig& config, const RadarParams& params, SplitMix64& rng) {
    if (config.delay.kind == DelayKind::fixed) return config.delay.fixed_bin;
    return static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(params.n_bins)));
}

cvec simulate_received(const PaddedCode& code, int delay, const ChannelConfig& config,
                       const RadarParams& params, SplitMix64& rng) {
    const int n = params.n_bins;
    if (code.length() != n) {
        throw std::invalid_argument("code length " + std::to_string(code.length()) +
                                    " does not match n_bins " + std::to_string(n));
    }
    if (delay < 0 || delay >= n) {
        throw std::invalid_argument("delay bin " + std::to_string(delay) + " outside [0, " +
                                    std::to_string(n) + ")");
    }
    std::vector<int> target_bins;
    target_bins.reserve(config.targets.size());
    for (const Target& t : config.targets) {
        target_bins.push_back(range_to_bin(t.range_m, params));
    }

    // Each sample is assembled in a fixed order (direct path, then targets in
    // config order), so a change of `delay` permutes the output bit-exactly.
    cvec received(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double value = config.direct_amplitude *
                       code.symbols[static_cast<std::size_t>((i - delay + n) % n)];
        for (std::size_t t = 0; t < target_bins.size(); ++t) {
            const int shift = (delay + target_bins[t]) % n;
            value += config.targets[t].amplitude *
                     code.symbols[static_cast<std::size_t>((i - shift + 2 * n) % n)];
        }
        received[static_cast<std::size_t>(i)] = {value, 0.0};
    }

    if (config.smoothing_window > 1) {
        const int w = config.smoothing_window;
        const int lead = w / 2; // window centred for odd widths
        cvec smoothed(received.size());
        for (int i = 0; i < n; ++i) {
            std::complex<double> acc(0.0, 0.0);
            for (int j = 0; j < w; ++j) {
                const int idx = ((i - lead + j) % n + n) % n;
                acc += received[static_cast<std::size_t>(idx)];
            }
            smoothed[static_cast<std::size_t>(i)] = acc / static_cast<double>(w);
        }
        received = std::move(smoothed);
    }

    if (config.noise_sigma > 0.0) {
        for (auto& sample : received) {
            const auto [re, im] = rng.gaussian_pair();
            sample += std::complex<double>(config.noise_sigma * re, config.noise_sigma * im);
        }
    }
    return received;
}

} // namespace pcradar
