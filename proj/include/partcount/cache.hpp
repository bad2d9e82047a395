#pragma once

#include "partcount/counts.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace partcount {

/// One line of the result cache. k is 0 for plane partitions.
struct CacheRecord {
    int version = 1;
    Family family = Family::colored;
    std::int64_t k = 0;
    std::uint64_t n = 0;
    std::string value;  // decimal

    friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

inline constexpr int kCacheVersion = 1;

/// A malformed line or two lines disagreeing on one key.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Serializes to one JSON object without a trailing newline.
std::string format_cache_line(const CacheRecord& record);
/// Parses one JSON line; unknown fields are ignored. Throws CacheError.
CacheRecord parse_cache_line(const std::string& line);

/// Append-only line-delimited JSON store of computed counts. Single writer.
class ResultCache {
public:
    /// Reads `path` if it exists. Throws CacheError naming the bad line.
    static ResultCache open(std::filesystem::path path);

    std::optional<std::string> lookup(Family family, std::int64_t k, std::uint64_t n) const;
    /// Appends the record unless the key is already present with the same
    /// value. A different value for a present key throws CacheError.
    void store(const CacheRecord& record);

    std::size_t size() const noexcept { return records_.size(); }
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    using Key = std::tuple<Family, std::int64_t, std::uint64_t>;
    static Key key_of(const CacheRecord& r);

    std::filesystem::path path_;
    std::map<Key, std::string> records_;
};

}  // namespace partcount
