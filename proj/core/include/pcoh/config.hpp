#pragma once

#include <cstdint>
#include <string>

namespace pcoh {

/// Reproducibility configuration shared by all computations of a session;
/// embedded verbatim in every emitted report.
struct SessionConfig {
    std::uint32_t p = 0;  ///< 0 = use the group's own prime
    std::size_t maxdeg = 10;
    std::size_t max_m = 4;
    std::size_t rank_ceiling = 4096;
    std::size_t bar_cell_cap = 20000;
    std::size_t cert_depth_cap = 32;
    std::string format = "json";  ///< "json" or "text"
    std::string cache_dir;
};

inline constexpr const char* kSchemaVersion = "pcoh/1";

} // namespace pcoh
