#include "pcradar/scenario.hpp"

#include "pcradar/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace pcradar {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_real(const std::string& value, const std::string& field, int line) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw parse_error("line " + std::to_string(line) + ": field '" + field +
                          "' expects a real number, got '" + value + "'");
    }
    return out;
}

long long parse_integer(const std::string& value, const std::string& field, int line) {
    std::size_t used = 0;
    long long out = 0;
    try {
        out = std::stoll(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw parse_error("line " + std::to_string(line) + ": field '" + field +
                          "' expects an integer, got '" + value + "'");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& value, const std::string& field, int line) {
    std::size_t used = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || value.empty()) {
        throw parse_error("line " + std::to_string(line) + ": field '" + field +
                          "' expects an unsigned integer, got '" + value + "'");
    }
    return out;
}

} // namespace

void Scenario::validate() const {
    params.validate();
    channel.validate(params);
    if (trials < 1) throw validation_error("trials must be >= 1, got " + std::to_string(trials));
    if (!(threshold > 0.0) || threshold > 1.0) {
        throw validation_error("threshold must lie in (0, 1]");
    }
    if (params.n_bins != 128 * params.samples_per_symbol) {
        throw validation_error("n_bins must equal 128 * samples_per_symbol for the length-128 "
                               "reference code (expected " +
                               std::to_string(128 * params.samples_per_symbol) + ", got " +
                               std::to_string(params.n_bins) + ")");
    }
}

std::vector<int> Scenario::expected_target_bins() const {
    std::set<int> bins;
    for (const Target& t : channel.targets) {
        bins.insert(range_to_bin(t.range_m, params));
    }
    return {bins.begin(), bins.end()};
}

Scenario parse_scenario(std::istream& in, const std::string& source_name,
                        std::vector<std::string>* warnings) {
    Scenario scenario;
    bool n_bins_given = false;
    std::set<std::string> seen;
    std::string raw;
    int line = 0;

    auto once = [&](const std::string& key) {
        if (!seen.insert(key).second) {
            throw parse_error(source_name + " line " + std::to_string(line) +
                              ": duplicate field '" + key + "'");
        }
    };

    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;

        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw parse_error(source_name + " line " + std::to_string(line) +
                              ": expected 'key = value', got '" + text + "'");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (key == "label") {
            once(key);
            scenario.label = value;
        } else if (key == "sample_rate") {
            once(key);
            scenario.params.sample_rate = parse_real(value, key, line);
        } else if (key == "wave_speed") {
            once(key);
            scenario.params.wave_speed = parse_real(value, key, line);
        } else if (key == "n_bins") {
            once(key);
            scenario.params.n_bins = static_cast<int>(parse_integer(value, key, line));
            n_bins_given = true;
        } else if (key == "samples_per_symbol") {
            once(key);
            scenario.params.samples_per_symbol =
                static_cast<int>(parse_integer(value, key, line));
        } else if (key == "direct_amplitude") {
            once(key);
            scenario.channel.direct_amplitude = parse_real(value, key, line);
        } else if (key == "target") {
            std::istringstream fields(value);
            double range = 0.0, amplitude = 0.0;
            std::string extra;
            if (!(fields >> range >> amplitude) || (fields >> extra)) {
                throw parse_error(source_name + " line " + std::to_string(line) +
                                  ": field 'target' expects '<range_m> <amplitude>', got '" +
                                  value + "'");
            }
            scenario.channel.targets.push_back({range, amplitude});
        } else if (key == "delay") {
            once(key);
            std::istringstream fields(value);
            std::string kind;
            fields >> kind;
            if (kind == "uniform") {
                scenario.channel.delay = DelayModel::uniform();
                std::string extra;
                if (fields >> extra) {
                    throw parse_error(source_name + " line " + std::to_string(line) +
                                      ": 'delay = uniform' takes no argument");
                }
            } else if (kind == "fixed") {
                long long bin = 0;
                std::string extra;
                if (!(fields >> bin) || (fields >> extra)) {
                    throw parse_error(source_name + " line " + std::to_string(line) +
                                      ": field 'delay' expects 'fixed <bin>', got '" + value +
                                      "'");
                }
                scenario.channel.delay = DelayModel::fixed(static_cast<int>(bin));
            } else {
                throw parse_error(source_name + " line " + std::to_string(line) +
                                  ": field 'delay' must be 'uniform' or 'fixed <bin>', got '" +
                                  value + "'");
            }
        } else if (key == "noise_sigma") {
            once(key);
            scenario.channel.noise_sigma = parse_real(value, key, line);
        } else if (key == "smoothing_window") {
            once(key);
            scenario.channel.smoothing_window =
                static_cast<int>(parse_integer(value, key, line));
        } else if (key == "seed") {
            once(key);
            scenario.channel.seed = parse_u64(value, key, line);
        } else if (key == "trials") {
            once(key);
            scenario.trials = static_cast<int>(parse_integer(value, key, line));
        } else if (key == "threshold") {
            once(key);
            scenario.threshold = parse_real(value, key, line);
        } else {
            throw parse_error(source_name + " line " + std::to_string(line) +
                              ": unknown field '" + key + "'");
        }
    }

    if (!seen.count("sample_rate")) {
        throw parse_error(source_name + ": required field 'sample_rate' is missing");
    }
    if (!n_bins_given) {
        scenario.params.n_bins = 128 * scenario.params.samples_per_symbol;
    }

    scenario.validate();

    if (warnings != nullptr) {
        for (const Target& t : scenario.channel.targets) {
            const BinQuantization q = quantize_range(t.range_m, scenario.params);
            if (std::abs(q.residual) > 0.25) {
                std::ostringstream msg;
                msg << source_name << ": target at " << t.range_m << " m is "
                    << std::abs(q.residual) << " bins off-grid (rounded to bin " << q.bin
                    << ", " << bin_to_range(q.bin, scenario.params) << " m)";
                warnings->push_back(msg.str());
            }
        }
    }
    return scenario;
}

Scenario load_scenario(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open scenario file '" + path + "'");
    }
    return parse_scenario(in, path, warnings);
}

} // namespace pcradar
