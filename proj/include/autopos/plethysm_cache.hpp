#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "autopos/symfunc.hpp"

namespace autopos {

struct PlethysmCacheEntry {
    static constexpr int current_version = 1;

    Partition lhs;
    Partition rhs;
    Decomposition constituents;
    int format_version = current_version;

    /// "plethysm-cache v1", the two partitions, then "eta<TAB>mult" lines.
    std::string serialize() const;
    /// nullopt when the text is not a well-formed v1 entry.
    static std::optional<PlethysmCacheEntry> parse(std::string_view text);
};

/// One file per (lambda, mu) holding the full characteristic-0 decomposition.
class PlethysmCache {
public:
    explicit PlethysmCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Directory named by AUTOPOS_CACHE_DIR, if set and nonempty.
    static std::optional<std::filesystem::path> directory_from_env();

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path path_for(const Partition& lambda, const Partition& mu) const;

    /// Missing, unreadable or corrupt entries are misses.
    std::optional<Decomposition> load(const Partition& lambda, const Partition& mu) const;

    /// Writes through a temporary file renamed into place.
    void store(const Partition& lambda, const Partition& mu, const Decomposition& constituents) const;

private:
    std::filesystem::path dir_;
};

/// plethysm() behind an optional cache. Only full (unrestricted) results are
/// written; restricted requests are served from a full entry when present.
Decomposition cached_plethysm(const Partition& lambda, const Partition& mu, const PlethysmOptions& options,
                              const PlethysmCache* cache, bool* hit = nullptr);

} // namespace autopos
