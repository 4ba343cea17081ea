#pragma once

#include "pcradar/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pcradar {

struct TrialRecord {
    int trial_index = 0;
    int delay_drawn = 0;
    int reference_detected = 0;
    std::vector<int> aligned_peak_bins;
    bool success = false; // aligned peaks cover every expected target bin
};

struct RunSummary {
    std::string label;
    int trials = 0;
    double success_rate = 0.0;
    std::vector<long> delay_histogram; // counts of delay_drawn per bin
    std::vector<long> peak_histogram;  // counts of aligned peak occurrences per bin
    std::uint64_t reproducibility_hash = 0;
};

struct RunResult {
    std::vector<TrialRecord> records; // ordered by trial index
    RunSummary summary;
    std::vector<std::vector<double>> ascan_magnitudes; // per trial, when kept
};

// Full pipeline for each trial: draw delay, simulate the channel, correlate
// against the reference code (FFT route), detect the direct-path peak, realign,
// pick peaks. Trials use independent seeded streams, so the parallel driver and
// the serial reference produce identical results.
RunResult run_monte_carlo(const Scenario& scenario, bool keep_ascans = false);
RunResult run_monte_carlo_serial(const Scenario& scenario, bool keep_ascans = false);

// FNV-1a over the record stream; identical records give an identical hash.
std::uint64_t hash_records(const std::vector<TrialRecord>& records);

} // namespace pcradar
