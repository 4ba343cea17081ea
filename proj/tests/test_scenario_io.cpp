#include "pcradar/scenario.hpp"

#include "pcradar/errors.hpp"
#include "pcradar/iq_io.hpp"
#include "pcradar/monte_carlo.hpp"
#include "pcradar/report_io.hpp"

#include "doctest.h"
#include "json.hpp"
#include "test_helpers.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pcradar;
using test_support::temp_path;

#ifndef PCRADAR_SCENARIO_DIR
#error "PCRADAR_SCENARIO_DIR must point at the bundled scenario files"
#endif

namespace {

Scenario parse_text(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return parse_scenario(in, "<test>", warnings);
}

const std::string kBaseline = "sample_rate = 10e6\n"
                              "target = 240 0.6\n"
                              "target = 480 0.4\n"
                              "delay = uniform\n"
                              "seed = 1\n"
                              "trials = 10\n"
                              "threshold = 0.25\n";

} // namespace

TEST_CASE("the bundled fig5 scenario carries the two-target desk setup") {
    std::vector<std::string> warnings;
    const Scenario s =
        load_scenario(std::string(PCRADAR_SCENARIO_DIR) + "/fig5.scenario", &warnings);
    CHECK(warnings.empty());
    CHECK(s.label == "fig5");
    CHECK(s.params.sample_rate == 10e6);
    CHECK(s.params.wave_speed == 3e8);
    CHECK(s.params.n_bins == 128);
    REQUIRE(s.channel.targets.size() == 2);
    CHECK(s.channel.targets[0].range_m == 240.0);
    CHECK(s.channel.targets[0].amplitude == 0.6);
    CHECK(s.channel.targets[1].range_m == 480.0);
    CHECK(s.channel.targets[1].amplitude == 0.4);
    CHECK(s.channel.delay.kind == DelayKind::uniform_over_bins);
    CHECK(s.channel.noise_sigma == 0.0);
    CHECK(s.trials == 1000);
    CHECK(s.expected_target_bins() == std::vector<int>{16, 32});
}

TEST_CASE("scenario validation failures carry field-specific messages") {
    CHECK_THROWS_WITH_AS(parse_text(kBaseline + "target = 2000 0.1\n"),
                         doctest::Contains("1920"), validation_error);
    CHECK_THROWS_WITH_AS(parse_text("sample_rate = 10e6\ntrials = 0\nthreshold = 0.5\n"),
                         doctest::Contains("trials"), validation_error);
    CHECK_THROWS_WITH_AS(parse_text(kBaseline + "bandwith = 3\n"),
                         doctest::Contains("unknown field 'bandwith'"), parse_error);
    CHECK_THROWS_WITH_AS(parse_text(kBaseline + "trials = 5\n"),
                         doctest::Contains("duplicate field 'trials'"), parse_error);
    CHECK_THROWS_WITH_AS(parse_text("trials = 5\nthreshold = 0.5\n"),
                         doctest::Contains("sample_rate"), parse_error);
    CHECK_THROWS_WITH_AS(parse_text(kBaseline + "threshold 0.5\n"), doctest::Contains("key"),
                         parse_error);
    CHECK_THROWS_AS(parse_text(kBaseline + "n_bins = 64\n"), validation_error);
    CHECK_THROWS_AS(parse_text("sample_rate = 10e6\ntrials = 1\nthreshold = 1.5\n"),
                    validation_error);
    CHECK_THROWS_AS(parse_text(kBaseline + "delay = sometimes\n"), parse_error);
    CHECK_THROWS_AS(parse_text(kBaseline + "noise_sigma = loud\n"), parse_error);
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.scenario"), parse_error);
}

TEST_CASE("fixed delays and overrides parse") {
    const Scenario s = parse_text("sample_rate = 10e6\n"
                                  "delay = fixed 42\n"
                                  "trials = 3\n"
                                  "threshold = 0.5\n"
                                  "label = fixed-run\n");
    CHECK(s.channel.delay.kind == DelayKind::fixed);
    CHECK(s.channel.delay.fixed_bin == 42);
    CHECK(s.label == "fixed-run");
    CHECK(s.channel.targets.empty());
}

TEST_CASE("off-grid targets warn instead of failing") {
    std::vector<std::string> warnings;
    const Scenario s = parse_text("sample_rate = 10e6\n"
                                  "target = 247 0.5\n"
                                  "trials = 1\n"
                                  "threshold = 0.5\n",
                                  &warnings);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("off-grid") != std::string::npos);
    CHECK(s.expected_target_bins() == std::vector<int>{16});

    warnings.clear();
    parse_text(kBaseline, &warnings); // on-grid targets stay quiet
    CHECK(warnings.empty());
}

TEST_CASE("csv export writes the fixed header and one row per trial") {
    Scenario s = parse_text(kBaseline);
    s.trials = 2;
    s.channel.delay = DelayModel::fixed(5);
    const RunResult run = run_monte_carlo(s);

    const std::string path = temp_path("records.csv");
    export_results(run.records, run.summary, ExportFormat::csv, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# pcradar run", 0) == 0); // metadata line holds the timestamp
    std::getline(in, line);
    CHECK(line == "trial,delay_drawn,reference_detected,aligned_peak_bins,success");
    std::getline(in, line);
    CHECK(line == "0,5,5,0;16;32,1");
    std::getline(in, line);
    CHECK(line == "1,5,5,0;16;32,1");
    CHECK_FALSE(std::getline(in, line));
    std::filesystem::remove(path);
}

TEST_CASE("json export round-trips the records field for field") {
    Scenario s = parse_text(kBaseline);
    s.trials = 4;
    const RunResult run = run_monte_carlo(s);

    const std::string path = temp_path("records.json");
    export_results(run.records, run.summary, ExportFormat::json, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    const nlohmann::json doc = nlohmann::json::parse(in);
    REQUIRE(doc.at("records").size() == run.records.size());
    for (std::size_t i = 0; i < run.records.size(); ++i) {
        const auto& row = doc.at("records").at(i);
        const TrialRecord& rec = run.records[i];
        CHECK(row.at("trial_index").get<int>() == rec.trial_index);
        CHECK(row.at("delay_drawn").get<int>() == rec.delay_drawn);
        CHECK(row.at("reference_detected").get<int>() == rec.reference_detected);
        CHECK(row.at("aligned_peak_bins").get<std::vector<int>>() == rec.aligned_peak_bins);
        CHECK(row.at("success").get<bool>() == rec.success);
    }
    CHECK(doc.at("summary").at("trials").get<int>() == 4);
    CHECK(doc.at("summary").at("success_rate").get<double>() == run.summary.success_rate);
    std::filesystem::remove(path);
}

TEST_CASE("csv and json exports carry identical data") {
    Scenario s = parse_text(kBaseline);
    s.trials = 6;
    const RunResult run = run_monte_carlo(s);

    const std::string csv_path = temp_path("cross.csv");
    const std::string json_path = temp_path("cross.json");
    export_results(run.records, run.summary, ExportFormat::csv, csv_path);
    export_results(run.records, run.summary, ExportFormat::json, json_path);

    std::ifstream json_in(json_path);
    const nlohmann::json doc = nlohmann::json::parse(json_in);

    std::ifstream csv_in(csv_path);
    std::string line;
    std::getline(csv_in, line); // metadata
    std::getline(csv_in, line); // header
    std::size_t row_index = 0;
    while (std::getline(csv_in, line)) {
        std::stringstream row(line);
        std::string trial, delay, reference, bins, success;
        std::getline(row, trial, ',');
        std::getline(row, delay, ',');
        std::getline(row, reference, ',');
        std::getline(row, bins, ',');
        std::getline(row, success, ',');

        const auto& json_row = doc.at("records").at(row_index);
        CHECK(std::stoi(trial) == json_row.at("trial_index").get<int>());
        CHECK(std::stoi(delay) == json_row.at("delay_drawn").get<int>());
        CHECK(std::stoi(reference) == json_row.at("reference_detected").get<int>());
        CHECK((success == "1") == json_row.at("success").get<bool>());

        std::vector<int> csv_bins;
        std::stringstream bin_stream(bins);
        std::string bin;
        while (std::getline(bin_stream, bin, ';')) csv_bins.push_back(std::stoi(bin));
        CHECK(csv_bins == json_row.at("aligned_peak_bins").get<std::vector<int>>());
        ++row_index;
    }
    CHECK(row_index == run.records.size());
    std::filesystem::remove(csv_path);
    std::filesystem::remove(json_path);
}

TEST_CASE("ascan magnitude dump peaks at the expected columns") {
    Scenario s = parse_text(kBaseline);
    s.trials = 3;
    const RunResult run = run_monte_carlo(s, /*keep_ascans=*/true);
    REQUIRE(run.ascan_magnitudes.size() == 3);

    const std::string path = temp_path("dump.ascans.csv");
    export_ascan_magnitudes(run.ascan_magnitudes, path);

    std::ifstream in(path);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        std::vector<double> values;
        std::stringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) values.push_back(std::stod(field));
        REQUIRE(values.size() == 128);
        std::size_t argmax = 0;
        for (std::size_t k = 1; k < values.size(); ++k) {
            if (values[k] > values[argmax]) argmax = k;
        }
        CHECK(argmax == 0);
        CHECK(values[16] > 0.25 * values[0]);
        CHECK(values[32] > 0.25 * values[0]);
        ++rows;
    }
    CHECK(rows == 3);
    std::filesystem::remove(path);
}

TEST_CASE("iq ingestion segments windows and counts dropped samples") {
    RadarParams params;
    params.sample_rate = 10e6;

    SUBCASE("a 1024-byte file is exactly one window") {
        const std::string path = temp_path("one_window.iq");
        cvec samples(128);
        for (int i = 0; i < 128; ++i) {
            samples[static_cast<std::size_t>(i)] = {static_cast<double>(i), -0.5 * i};
        }
        write_iq(path, samples);
        CHECK(std::filesystem::file_size(path) == 1024);

        std::size_t dropped = 99;
        const auto windows = ingest_iq(path, params, &dropped);
        REQUIRE(windows.size() == 1);
        CHECK(windows[0].size() == 128);
        CHECK(dropped == 0);
        std::filesystem::remove(path);
    }

    SUBCASE("a trailing partial window is truncated and reported") {
        const std::string path = temp_path("partial.iq");
        write_iq(path, cvec(128 + 128 + 40, {1.0, 2.0}));
        std::size_t dropped = 0;
        const auto windows = ingest_iq(path, params, &dropped);
        CHECK(windows.size() == 2);
        CHECK(dropped == 40);
        std::filesystem::remove(path);
    }

    SUBCASE("sizes that are not whole sample records are rejected with offsets") {
        const std::string path = temp_path("ragged.iq");
        std::ofstream out(path, std::ios::binary);
        const std::vector<char> bytes(1027, 0);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.close();
        CHECK_THROWS_WITH_AS(ingest_iq(path, params), doctest::Contains("offset 1024"),
                             parse_error);
        std::filesystem::remove(path);
    }

    SUBCASE("files shorter than one window are rejected") {
        const std::string path = temp_path("short.iq");
        write_iq(path, cvec(100, {0.0, 0.0}));
        CHECK_THROWS_WITH_AS(ingest_iq(path, params), doctest::Contains("128"), parse_error);
        std::filesystem::remove(path);
    }

    CHECK_THROWS_AS(ingest_iq("/nonexistent.iq", params), parse_error);
}

TEST_CASE("iq files round-trip bit-exactly") {
    RadarParams params;
    params.sample_rate = 10e6;

    // Simulated samples narrow to float32 on write; read-back must match that
    // narrowing exactly, and a second round trip must be lossless.
    Scenario s = parse_text(kBaseline);
    s.channel.noise_sigma = 0.1;
    const PaddedCode code = build_pnc128();
    SplitMix64 rng = trial_stream(1, 0);
    const cvec original = simulate_received(code, 11, s.channel, s.params, rng);

    const std::string path_a = temp_path("roundtrip_a.iq");
    const std::string path_b = temp_path("roundtrip_b.iq");
    write_iq(path_a, original);
    const auto first = ingest_iq(path_a, params);
    REQUIRE(first.size() == 1);
    for (std::size_t i = 0; i < original.size(); ++i) {
        CHECK(static_cast<float>(original[i].real()) ==
              static_cast<float>(first[0][i].real()));
        CHECK(static_cast<float>(original[i].imag()) ==
              static_cast<float>(first[0][i].imag()));
    }

    write_iq(path_b, first[0]);
    const auto second = ingest_iq(path_b, params);
    REQUIRE(second.size() == 1);
    CHECK(second[0] == first[0]); // float-clean data survives unchanged

    std::ifstream a(path_a, std::ios::binary), b(path_b, std::ios::binary);
    const std::string bytes_a((std::istreambuf_iterator<char>(a)),
                              std::istreambuf_iterator<char>());
    const std::string bytes_b((std::istreambuf_iterator<char>(b)),
                              std::istreambuf_iterator<char>());
    CHECK(bytes_a == bytes_b);

    std::filesystem::remove(path_a);
    std::filesystem::remove(path_b);
}
