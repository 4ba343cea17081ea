#pragma once

#include "pcradar/channel.hpp"
#include "pcradar/correlator.hpp"

#include <vector>

namespace pcradar {

struct RangeEntry {
    int bin;
    double range_m;
    double magnitude;
};

struct RangeReport {
    std::vector<RangeEntry> entries;        // sorted by bin; bin 0 is the direct path
    int reference_bin_pre_alignment = 0;
    RadarParams params;
};

// Bin of the strongest magnitude; equal maxima resolve to the lowest bin.
// The uncertain transmit delay lands the direct-path return here.
int detect_reference(const AScan& scan);

// Rotate the scan so reference_bin becomes bin 0: out[k] = in[(k + reference_bin) mod N].
// A pure permutation of both arrays; realigning an already-aligned scan is an error.
AScan realign(const AScan& scan, int reference_bin);

// Peak entries of an aligned scan mapped to ranges. Bin 0 (the direct-path
// reference) is always present.
RangeReport report_ranges(const AScan& scan, double relative_threshold,
                          const RadarParams& params);

} // namespace pcradar
