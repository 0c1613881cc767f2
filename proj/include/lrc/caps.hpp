#pragma once

#include <cstdint>
#include <string_view>

namespace lrc {

/// Work limits for the exhaustive kernels. Exceeding a cap is an error, never a
/// silent truncation.
struct Caps {
    /// Largest number of codewords weight_distribution() and friends will visit.
    std::uint64_t enumeration = std::uint64_t{1} << 26;
    /// Largest number of coordinate subsets the low-weight search will examine.
    std::uint64_t search = std::uint64_t{1} << 24;
};

/// Parses "enum:2^26,search:2^24" (either key optional; plain integers accepted).
Caps parse_caps(std::string_view spec);

/// Process-wide defaults; read once from LOCALITY_LAB_CAPS when set.
const Caps& default_caps();

}  // namespace lrc
