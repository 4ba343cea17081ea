#include "pcradar/iq_io.hpp"

#include "pcradar/errors.hpp"

#include <cstring>
#include <fstream>

namespace pcradar {

namespace {

static_assert(sizeof(float) == 4, "float must be IEEE-754 binary32");

float load_float_le(const unsigned char* bytes) {
    std::uint32_t word = static_cast<std::uint32_t>(bytes[0]) |
                         static_cast<std::uint32_t>(bytes[1]) << 8 |
                         static_cast<std::uint32_t>(bytes[2]) << 16 |
                         static_cast<std::uint32_t>(bytes[3]) << 24;
    float value;
    std::memcpy(&value, &word, 4);
    return value;
}

void store_float_le(float value, unsigned char* bytes) {
    std::uint32_t word;
    std::memcpy(&word, &value, 4);
    bytes[0] = static_cast<unsigned char>(word & 0xFF);
    bytes[1] = static_cast<unsigned char>((word >> 8) & 0xFF);
    bytes[2] = static_cast<unsigned char>((word >> 16) & 0xFF);
    bytes[3] = static_cast<unsigned char>((word >> 24) & 0xFF);
}

} // namespace

std::vector<cvec> ingest_iq(const std::string& path, const RadarParams& params,
                            std::size_t* dropped_samples) {
    params.validate();
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) {
        throw parse_error("cannot open IQ file '" + path + "'");
    }
    const std::streamoff size = in.tellg();
    in.seekg(0);

    if (size % 8 != 0) {
        throw parse_error("IQ file '" + path + "' is " + std::to_string(size) +
                          " bytes, not a multiple of 8 (one float32 I/Q pair); " +
                          std::to_string(size % 8) + " trailing bytes starting at offset " +
                          std::to_string(size - size % 8));
    }
    const std::size_t total_samples = static_cast<std::size_t>(size / 8);
    const std::size_t window = static_cast<std::size_t>(params.n_bins);
    if (total_samples < window) {
        throw parse_error("IQ file '" + path + "' holds " + std::to_string(total_samples) +
                          " samples (" + std::to_string(size) + " bytes); at least " +
                          std::to_string(window) + " samples are required for one window");
    }

    const std::size_t n_windows = total_samples / window;
    if (dropped_samples != nullptr) *dropped_samples = total_samples % window;

    std::vector<cvec> windows(n_windows);
    std::vector<unsigned char> buffer(window * 8);
    for (std::size_t w = 0; w < n_windows; ++w) {
        in.read(reinterpret_cast<char*>(buffer.data()),
                static_cast<std::streamsize>(buffer.size()));
        if (!in) {
            throw parse_error("short read from IQ file '" + path + "' at window " +
                              std::to_string(w));
        }
        windows[w].resize(window);
        for (std::size_t i = 0; i < window; ++i) {
            const float re = load_float_le(&buffer[i * 8]);
            const float im = load_float_le(&buffer[i * 8 + 4]);
            windows[w][i] = {static_cast<double>(re), static_cast<double>(im)};
        }
    }
    return windows;
}

void write_iq(const std::string& path, const cvec& samples) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    std::vector<unsigned char> buffer(samples.size() * 8);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        store_float_le(static_cast<float>(samples[i].real()), &buffer[i * 8]);
        store_float_le(static_cast<float>(samples[i].imag()), &buffer[i * 8 + 4]);
    }
    out.write(reinterpret_cast<const char*>(buffer.data()),
              static_cast<std::streamsize>(buffer.size()));
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

} // namespace pcradar
