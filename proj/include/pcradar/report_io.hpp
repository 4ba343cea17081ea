#pragma once

#include "pcradar/monte_carlo.hpp"

#include <string>
#include <vector>

namespace pcradar {

enum class ExportFormat { csv, json };

ExportFormat parse_export_format(const std::string& name);

// CSV: one metadata comment line (the only place a timestamp appears), the fixed
// header `trial,delay_drawn,reference_detected,aligned_peak_bins,success`, then one
// row per trial with peak bins semicolon-joined and success as 1/0.
// JSON: meta + summary + records, record fields named as in TrialRecord.
void export_results(const std::vector<TrialRecord>& records, const RunSummary& summary,
                    ExportFormat format, const std::string& path);

// One row per trial, bins as columns, full double precision.
void export_ascan_magnitudes(const std::vector<std::vector<double>>& magnitudes,
                             const std::string& path);

} // namespace pcradar
