#include "pcradar/monte_carlo.hpp"

#include "pcradar/errors.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <numeric>

using namespace pcradar;
using test_support::two_target_scenario;

TEST_CASE("noiseless runs succeed on every trial and track the drawn delay") {
    Scenario scenario = two_target_scenario();
    scenario.trials = 200;
    const RunResult run = run_monte_carlo(scenario);

    REQUIRE(run.records.size() == 200);
    CHECK(run.summary.success_rate == 1.0);
    for (const TrialRecord& r : run.records) {
        CHECK(r.reference_detected == r.delay_drawn); // noiseless contract
        CHECK(r.success);
    }
    for (std::size_t i = 0; i < run.records.size(); ++i) {
        CHECK(run.records[i].trial_index == static_cast<int>(i));
    }
}

TEST_CASE("a single fixed-delay trial reports that delay") {
    Scenario scenario = two_target_scenario();
    scenario.trials = 1;
    scenario.channel.delay = DelayModel::fixed(0);
    const RunResult run = run_monte_carlo(scenario);
    REQUIRE(run.records.size() == 1);
    CHECK(run.records[0].delay_drawn == 0);
    CHECK(run.records[0].reference_detected == 0);
    CHECK(run.records[0].aligned_peak_bins == std::vector<int>{0, 16, 32});
}

TEST_CASE("identical scenarios hash identically, different seeds do not") {
    Scenario scenario = two_target_scenario();
    scenario.trials = 64;
    scenario.channel.noise_sigma = 0.05;

    const RunResult a = run_monte_carlo(scenario);
    const RunResult b = run_monte_carlo(scenario);
    CHECK(a.summary.reproducibility_hash == b.summary.reproducibility_hash);

    scenario.channel.seed = 2;
    const RunResult c = run_monte_carlo(scenario);
    CHECK(a.summary.reproducibility_hash != c.summary.reproducibility_hash);
}

TEST_CASE("the parallel driver reproduces the serial reference bit for bit") {
    Scenario scenario = two_target_scenario();
    scenario.trials = 300;
    scenario.channel.noise_sigma = 0.05;

    const RunResult parallel = run_monte_carlo(scenario, /*keep_ascans=*/true);
    const RunResult serial = run_monte_carlo_serial(scenario, /*keep_ascans=*/true);

    REQUIRE(parallel.records.size() == serial.records.size());
    for (std::size_t i = 0; i < parallel.records.size(); ++i) {
        CHECK(parallel.records[i].trial_index == serial.records[i].trial_index);
        CHECK(parallel.records[i].delay_drawn == serial.records[i].delay_drawn);
        CHECK(parallel.records[i].reference_detected == serial.records[i].reference_detected);
        CHECK(parallel.records[i].aligned_peak_bins == serial.records[i].aligned_peak_bins);
        CHECK(parallel.records[i].success == serial.records[i].success);
    }
    CHECK(parallel.summary.reproducibility_hash == serial.summary.reproducibility_hash);
    CHECK(parallel.ascan_magnitudes == serial.ascan_magnitudes);
}

TEST_CASE("summary histograms are consistent with the records") {
    Scenario scenario = two_target_scenario();
    scenario.trials = 150;
    const RunResult run = run_monte_carlo(scenario);

    const long delay_total = std::accumulate(run.summary.delay_histogram.begin(),
                                             run.summary.delay_histogram.end(), 0L);
    CHECK(delay_total == 150);

    std::vector<long> expected_peaks(128, 0);
    for (const TrialRecord& r : run.records) {
        for (int bin : r.aligned_peak_bins) expected_peaks[static_cast<std::size_t>(bin)] += 1;
    }
    CHECK(run.summary.peak_histogram == expected_peaks);
}

TEST_CASE("trial failures propagate out of the parallel loop") {
    // A silent channel produces an all-zero scan, which has no detectable
    // reference; the driver must surface that instead of terminating.
    Scenario scenario;
    scenario.params.sample_rate = 10e6;
    scenario.channel.direct_amplitude = 0.0;
    scenario.trials = 8;
    scenario.threshold = 0.5;
    CHECK_THROWS_WITH_AS(run_monte_carlo(scenario), doctest::Contains("no reference"),
                         std::runtime_error);
}

TEST_CASE("validation failures surface before any trial runs") {
    Scenario scenario = two_target_scenario();
    scenario.trials = 0;
    CHECK_THROWS_AS(run_monte_carlo(scenario), validation_error);
}
