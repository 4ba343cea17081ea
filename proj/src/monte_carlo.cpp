#include "pcradar/monte_carlo.hpp"

#include "pcradar/alignment.hpp"
#include "pcradar/codes.hpp"
#include "pcradar/correlator.hpp"

#include <algorithm>
#include <atomic>
#include <exception>

namespace pcradar {

namespace {

struct TrialContext {
    PaddedCode code;
    cvec reference;
    std::vector<int> expected_bins;
};

TrialContext make_context(const Scenario& scenario) {
    TrialContext ctx;
    ctx.code = repeat_symbols(build_pnc128(), scenario.params.samples_per_symbol);
    ctx.reference.reserve(ctx.code.symbols.size());
    for (int s : ctx.code.symbols) {
        ctx.reference.emplace_back(static_cast<double>(s), 0.0);
    }
    ctx.expected_bins = scenario.expected_target_bins();
    return ctx;
}

TrialRecord run_trial(const Scenario& scenario, const TrialContext& ctx, int trial,
                      std::vector<double>* magnitudes_out) {
    SplitMix64 rng = trial_stream(scenario.channel.seed, static_cast<std::uint64_t>(trial));
    const int delay = draw_delay(scenario.channel, scenario.params, rng);
    const cvec received =
        simulate_received(ctx.code, delay, scenario.channel, scenario.params, rng);
    AScan scan = to_ascan(circular_xcorr_fft(received, ctx.reference));
    const int reference_bin = detect_reference(scan);
    const AScan aligned = realign(scan, reference_bin);
    const std::vector<Peak> peaks = find_peaks(aligned, scenario.threshold);

    TrialRecord record;
    record.trial_index = trial;
    record.delay_drawn = delay;
    record.reference_detected = reference_bin;
    record.aligned_peak_bins.reserve(peaks.size());
    for (const Peak& p : peaks) record.aligned_peak_bins.push_back(p.bin);
    record.success = std::includes(record.aligned_peak_bins.begin(),
                                   record.aligned_peak_bins.end(), ctx.expected_bins.begin(),
                                   ctx.expected_bins.end());
    if (magnitudes_out != nullptr) *magnitudes_out = aligned.magnitudes;
    return record;
}

RunResult summarize(const Scenario& scenario, RunResult result) {
    RunSummary& summary = result.summary;
    summary.label = scenario.label;
    summary.trials = scenario.trials;
    summary.delay_histogram.assign(static_cast<std::size_t>(scenario.params.n_bins), 0);
    summary.peak_histogram.assign(static_cast<std::size_t>(scenario.params.n_bins), 0);
    long successes = 0;
    for (const TrialRecord& r : result.records) {
        successes += r.success ? 1 : 0;
        summary.delay_histogram[static_cast<std::size_t>(r.delay_drawn)] += 1;
        for (int bin : r.aligned_peak_bins) {
            summary.peak_histogram[static_cast<std::size_t>(bin)] += 1;
        }
    }
    summary.success_rate =
        static_cast<double>(successes) / static_cast<double>(result.records.size());
    summary.reproducibility_hash = hash_records(result.records);
    return result;
}

} // namespace

std::uint64_t hash_records(const std::vector<TrialRecord>& records) {
    std::uint64_t hash = 14695981039346656037ULL;
    auto feed = [&hash](std::uint64_t value) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= (value >> (8 * byte)) & 0xFF;
            hash *= 1099511628211ULL;
        }
    };
    for (const TrialRecord& r : records) {
        feed(static_cast<std::uint64_t>(r.trial_index));
        feed(static_cast<std::uint64_t>(r.delay_drawn));
        feed(static_cast<std::uint64_t>(r.reference_detected));
        feed(static_cast<std::uint64_t>(r.aligned_peak_bins.size()));
        for (int bin : r.aligned_peak_bins) feed(static_cast<std::uint64_t>(bin));
        feed(r.success ? 1 : 0);
    }
    return hash;
}

RunResult run_monte_carlo(const Scenario& scenario, bool keep_ascans) {
    scenario.validate();
    const TrialContext ctx = make_context(scenario);

    RunResult result;
    result.records.resize(static_cast<std::size_t>(scenario.trials));
    if (keep_ascans) {
        result.ascan_magnitudes.resize(static_cast<std::size_t>(scenario.trials));
    }

    std::atomic<bool> failed{false};
    std::exception_ptr first_error;

#pragma omp parallel for schedule(static)
    for (int t = 0; t < scenario.trials; ++t) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            std::vector<double>* mags =
                keep_ascans ? &result.ascan_magnitudes[static_cast<std::size_t>(t)] : nullptr;
            result.records[static_cast<std::size_t>(t)] = run_trial(scenario, ctx, t, mags);
        } catch (...) {
#pragma omp critical
            {
                if (!first_error) first_error = std::current_exception();
            }
            failed.store(true, std::memory_order_relaxed);
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    return summarize(scenario, std::move(result));
}

RunResult run_monte_carlo_serial(const Scenario& scenario, bool keep_ascans) {
    scenario.validate();
    const TrialContext ctx = make_context(scenario);

    RunResult result;
    result.records.resize(static_cast<std::size_t>(scenario.trials));
    if (keep_ascans) {
        result.ascan_magnitudes.resize(static_cast<std::size_t>(scenario.trials));
    }
    for (int t = 0; t < scenario.trials; ++t) {
        std::vector<double>* mags =
            keep_ascans ? &result.ascan_magnitudes[static_cast<std::size_t>(t)] : nullptr;
        result.records[static_cast<std::size_t>(t)] = run_trial(scenario, ctx, t, mags);
    }
    return summarize(scenario, std::move(result));
}

} // namespace pcradar
