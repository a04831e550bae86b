#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>

namespace singlab {

inline constexpr const char* kVersion = "0.1.0";

/// FNV-1a hash of the canonical configuration string; recorded in every
/// output file so runs are attributable.
inline std::uint64_t config_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Body must already contain the header row; a metadata comment line is
/// appended.
inline void write_csv(const std::string& path, const std::string& body,
                      const std::string& canonical_config) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << body;
    os << "# singlab-version=" << kVersion << " config-hash=" << std::hex
       << config_hash(canonical_config) << std::dec << "\n";
}

}  // namespace singlab
