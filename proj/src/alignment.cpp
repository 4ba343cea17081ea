#include "pcradar/alignment.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pcradar {

int detect_reference(const AScan& scan) {
    if (scan.n_bins < 1) throw std::invalid_argument("scan has no bins");
    int best = 0;
    double best_mag = scan.magnitudes[0];
    for (int k = 1; k < scan.n_bins; ++k) {
        if (scan.magnitudes[static_cast<std::size_t>(k)] > best_mag) {
            best_mag = scan.magnitudes[static_cast<std::size_t>(k)];
            best = k;
        }
    }
    if (best_mag == 0.0) {
        throw std::runtime_error("no reference detectable: scan magnitudes are all zero");
    }
    return best;
}

AScan realign(const AScan& scan, int reference_bin) {
    if (scan.aligned) {
        throw std::logic_error("scan is already aligned; double alignment is always a bug");
    }
    const int n = scan.n_bins;
    if (reference_bin < 0 || reference_bin >= n) {
        throw std::invalid_argument("reference bin " + std::to_string(reference_bin) +
                                    " outside [0, " + std::to_string(n) + ")");
    }
    AScan out;
    out.n_bins = n;
    out.aligned = true;
    out.reference_bin = reference_bin;
    out.correlation.resize(scan.correlation.size());
    out.magnitudes.resize(scan.magnitudes.size());
    for (int k = 0; k < n; ++k) {
        const std::size_t src = static_cast<std::size_t>((k + reference_bin) % n);
        out.correlation[static_cast<std::size_t>(k)] = scan.correlation[src];
        out.magnitudes[static_cast<std::size_t>(k)] = scan.magnitudes[src];
    }
    return out;
}

RangeReport report_ranges(const AScan& scan, double relative_threshold,
                          const RadarParams& params) {
    if (!scan.aligned) {
        throw std::logic_error("report_ranges requires an aligned scan");
    }
    if (scan.n_bins != params.n_bins) {
        throw std::invalid_argument("scan has " + std::to_string(scan.n_bins) +
                                    " bins but params expect " + std::to_string(params.n_bins));
    }
    RangeReport report;
    report.params = params;
    report.reference_bin_pre_alignment = scan.reference_bin.value_or(0);

    const std::vector<Peak> peaks = find_peaks(scan, relative_threshold);
    report.entries.reserve(peaks.size() + 1);
    for (const Peak& p : peaks) {
        report.entries.push_back({p.bin, bin_to_range(p.bin, params), p.magnitude});
    }
    // The direct-path reference always appears, even below threshold, since
    // downstream diagnostics read its magnitude from the report.
    if (report.entries.empty() || report.entries.front().bin != 0) {
        report.entries.insert(report.entries.begin(),
                              {0, 0.0, scan.magnitudes.empty() ? 0.0 : scan.magnitudes[0]});
    }
    return report;
}

} // namespace pcradar
