#ifndef QWEINGARTEN_CACHE_HPP
#define QWEINGARTEN_CACHE_HPP

#include "qweingarten/weingarten.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qweingarten {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnv = "QWEINGARTEN_CACHE";

class CacheFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Cache record format (JSON, one file per spec):
 *
 *   { "format": "qweingarten-weingarten-table",
 *     "format_version": 1,
 *     "case": "orthogonal" | "unitary",
 *     "half_size": k, "word": "abab", "n": n,
 *     "basis": [[partner array], ...],
 *     "gram": [["num/den", ...], ...],
 *     "weingarten": [["num/den", ...], ...],
 *     "checksum": "<16 hex digits>" }
 *
 * The checksum is FNV-1a 64 over the compact dump of the record without the
 * checksum field.
 */
std::string serialize_table(const WeingartenTable& table);

// Throws CacheFormatError on malformed input, checksum failure, or a
// format version other than kCacheFormatVersion.
WeingartenTable parse_table(std::string_view text);

// "{case}_{k-or-word}_{n}.wgt.json"; the empty unitary word is spelled "empty"
std::string cache_file_name(const GramSpec& spec);

enum class CacheStatus { hit, miss, corrupt };

struct CacheLoadResult {
    CacheStatus status = CacheStatus::miss;
    std::optional<WeingartenTable> table;
    std::string diagnostic;
};

/*
 * In-memory table store with an optional directory backing. Lookups go
 * memory, then disk, then computation; freshly computed tables are written
 * back. Disk entries that fail validation are reported through
 * diagnostics() and recomputed.
 *
 * Safe for concurrent get() calls. Disk writes go to a temporary file that
 * is renamed into place.
 */
class WeingartenCache {
public:
    WeingartenCache() = default;
    explicit WeingartenCache(std::filesystem::path directory, EnumerationLimits limits = {});

    // Directory named by QWEINGARTEN_CACHE, if set and non-empty.
    static std::optional<std::filesystem::path> directory_from_environment();

    const std::optional<std::filesystem::path>& directory() const { return directory_; }
    const EnumerationLimits& limits() const { return limits_; }

    std::shared_ptr<const WeingartenTable> get(const GramSpec& spec);

    // Disk operations; both require a directory.
    void store(const WeingartenTable& table) const;
    CacheLoadResult load(const GramSpec& spec) const;

    std::filesystem::path path_for(const GramSpec& spec) const;

    std::vector<std::string> diagnostics() const;

private:
    std::optional<std::filesystem::path> directory_;
    EnumerationLimits limits_;

    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const WeingartenTable>> memory_;
    std::vector<std::string> diagnostics_;
};

} // namespace qweingarten

#endif
