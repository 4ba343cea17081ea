#pragma once

#include <cstdint>
#include <utility>

namespace pcradar {

// splitmix64 finalizer; full-avalanche mix of a 64-bit word.
std::uint64_t mix64(std::uint64_t z);

// Minimal splitmix64 engine. One 64-bit state word, so per-trial streams are
// cheap to create and never share state across threads.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next();

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t uniform_below(std::uint64_t n);

    // Uniform double in (0, 1].
    double unit_double();

    // One standard-normal pair via the Box-Muller transform.
    std::pair<double, double> gaussian_pair();

private:
    std::uint64_t state_;
};

// Independent stream for one Monte Carlo trial. The (seed, index) pair is
// hashed into the initial state, so streams for neighbouring indices are
// uncorrelated rather than offset copies of each other.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t index);

} // namespace pcradar
