#include "partcount/cache.hpp"

#include <json.hpp>

#include <fstream>

namespace partcount {

using nlohmann::json;

std::string format_cache_line(const CacheRecord& record) {
    json j;
    j["version"] = record.version;
    j["family"] = std::string(to_string(record.family));
    j["k"] = record.k;
    j["n"] = record.n;
    j["value"] = record.value;
    return j.dump();
}

CacheRecord parse_cache_line(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw CacheError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw CacheError("cache line is not a JSON object");
    }
    CacheRecord record;
    try {
        record.version = j.at("version").get<int>();
        const auto family = parse_family(j.at("family").get<std::string>());
        if (!family) {
            throw CacheError("unknown family " + j.at("family").dump());
        }
        record.family = *family;
        record.k = j.at("k").get<std::int64_t>();
        record.n = j.at("n").get<std::uint64_t>();
        record.value = j.at("value").get<std::string>();
    } catch (const json::exception& e) {
        throw CacheError(std::string("bad cache record: ") + e.what());
    }
    if (record.version != kCacheVersion) {
        throw CacheError("unsupported cache version " + std::to_string(record.version));
    }
    try {
        from_decimal(record.value);
    } catch (const DomainError& e) {
        throw CacheError(e.what());
    }
    return record;
}

ResultCache::Key ResultCache::key_of(const CacheRecord& r) {
    return {r.family, r.family == Family::plane ? 0 : r.k, r.n};
}

ResultCache ResultCache::open(std::filesystem::path path) {
    ResultCache cache;
    cache.path_ = std::move(path);
    std::ifstream in(cache.path_);
    if (!in) {
        return cache;
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        CacheRecord record;
        try {
            record = parse_cache_line(line);
        } catch (const CacheError& e) {
            throw CacheError(cache.path_.string() + ":" + std::to_string(line_no) + ": " +
                             e.what());
        }
        auto [it, inserted] = cache.records_.emplace(key_of(record), record.value);
        if (!inserted && it->second != record.value) {
            throw CacheError(cache.path_.string() + ":" + std::to_string(line_no) +
                             ": conflicting values for one key (" + it->second + " vs " +
                             record.value + ")");
        }
    }
    return cache;
}

std::optional<std::string> ResultCache::lookup(Family family, std::int64_t k,
                                               std::uint64_t n) const {
    const auto it = records_.find(Key{family, family == Family::plane ? 0 : k, n});
    if (it == records_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void ResultCache::store(const CacheRecord& record) {
    const auto key = key_of(record);
    if (const auto it = records_.find(key); it != records_.end()) {
        if (it->second != record.value) {
            throw CacheError("refusing to store conflicting value for an existing key (" +
                             it->second + " vs " + record.value + ")");
        }
        return;
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        throw CacheError("cannot append to cache " + path_.string());
    }
    out << format_cache_line(record) << '\n';
    if (!out) {
        throw CacheError("write to cache " + path_.string() + " failed");
    }
    records_.emplace(key, record.value);
}

}  // namespace partcount
