#pragma once

#include <stdexcept>
#include <string>

namespace pcradar {

// Malformed input files (scenario text, IQ captures).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates a domain constraint.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pcradar
