#pragma once

#include "pcradar/channel.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pcradar {

// A complete simulation run description; with a seed it determines every output.
struct Scenario {
    RadarParams params;
    ChannelConfig channel;
    int trials = 1;
    double threshold = 0.25;
    std::string label;

    void validate() const;

    // Quantized target bins, ascending and deduplicated.
    std::vector<int> expected_target_bins() const;
};

// Parses the line-oriented `key = value` scenario format. Unknown or duplicated
// fields are rejected; see README for the schema. Off-grid targets (quantization
// residual above 0.25 bins) append a warning instead of failing.
Scenario parse_scenario(std::istream& in, const std::string& source_name,
                        std::vector<std::string>* warnings = nullptr);

Scenario load_scenario(const std::string& path, std::vector<std::string>* warnings = nullptr);

} // namespace pcradar
