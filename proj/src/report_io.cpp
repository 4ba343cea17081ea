#include "pcradar/report_io.hpp"

#include "pcradar/errors.hpp"

#include "json.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace pcradar {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm parts{};
    gmtime_r(&now, &parts);
    char text[32];
    std::strftime(text, sizeof(text), "%Y-%m-%dT%H:%M:%SZ", &parts);
    return text;
}

std::string hash_hex(std::uint64_t hash) {
    char text[19];
    std::snprintf(text, sizeof(text), "0x%016" PRIx64, hash);
    return text;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

void write_csv(const std::vector<TrialRecord>& records, const RunSummary& summary,
               std::ostream& out) {
    out << "# pcradar run label=" << summary.label << " trials=" << summary.trials
        << " success_rate=" << std::setprecision(17) << summary.success_rate
        << " hash=" << hash_hex(summary.reproducibility_hash)
        << " generated=" << utc_timestamp() << "\n";
    out << "trial,delay_drawn,reference_detected,aligned_peak_bins,success\n";
    for (const TrialRecord& r : records) {
        out << r.trial_index << ',' << r.delay_drawn << ',' << r.reference_detected << ',';
        for (std::size_t i = 0; i < r.aligned_peak_bins.size(); ++i) {
            if (i > 0) out << ';';
            out << r.aligned_peak_bins[i];
        }
        out << ',' << (r.success ? 1 : 0) << "\n";
    }
}

void write_json(const std::vector<TrialRecord>& records, const RunSummary& summary,
                std::ostream& out) {
    nlohmann::json doc;
    doc["meta"] = {{"format", "pcradar-run"}, {"version", 1}, {"generated", utc_timestamp()}};
    doc["summary"] = {{"label", summary.label},
                      {"trials", summary.trials},
                      {"success_rate", summary.success_rate},
                      {"delay_histogram", summary.delay_histogram},
                      {"peak_histogram", summary.peak_histogram},
                      {"reproducibility_hash", hash_hex(summary.reproducibility_hash)}};
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRecord& r : records) {
        rows.push_back({{"trial_index", r.trial_index},
                        {"delay_drawn", r.delay_drawn},
                        {"reference_detected", r.reference_detected},
                        {"aligned_peak_bins", r.aligned_peak_bins},
                        {"success", r.success}});
    }
    doc["records"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

} // namespace

ExportFormat parse_export_format(const std::string& name) {
    if (name == "csv") return ExportFormat::csv;
    if (name == "json") return ExportFormat::json;
    throw validation_error("unknown export format '" + name + "' (expected csv or json)");
}

void export_results(const std::vector<TrialRecord>& records, const RunSummary& summary,
                    ExportFormat format, const std::string& path) {
    std::ofstream out = open_for_write(path);
    if (format == ExportFormat::csv) {
        write_csv(records, summary, out);
    } else {
        write_json(records, summary, out);
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void export_ascan_magnitudes(const std::vector<std::vector<double>>& magnitudes,
                             const std::string& path) {
    std::ofstream out = open_for_write(path);
    out << std::setprecision(17);
    for (const auto& row : magnitudes) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            out << row[i];
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

} // namespace pcradar
