#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "fusion.hpp"

namespace qtqft {

// Structure-constant cache files. One file per (r, s, format version); the
// triple is embedded both in the file name and in the payload, and either
// mismatch forces a rebuild instead of a silent reuse.
inline constexpr int kCacheFormatVersion = 1;

std::string cache_file_name(const BoxContext& ctx);

// Writes the ring's full structure table under dir (creating it if needed).
void store_structure_table(const FusionRing& ring,
                           const std::filesystem::path& dir);

// Adopts a cached table into the ring when a valid file exists. Corrupt,
// stale-version, or mismatched files are reported to `warn` (when non-null)
// and ignored; the caller rebuilds. Returns true when a cache was adopted.
bool load_structure_table(FusionRing& ring, const std::filesystem::path& dir,
                          std::ostream* warn);

}  // namespace qtqft
