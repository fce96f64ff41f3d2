#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artmod/error.hpp"
#include "artmod/numkit/vector.hpp"

namespace artmod::backend {

/// Insertion-ordered id -> embedding map with a fixed dimension.
class EmbeddingCache {
public:
    using Entry = std::pair<std::string, numkit::EmbeddingVector>;

    explicit EmbeddingCache(std::uint32_t dim);

    std::uint32_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Throws on wrong dimension, duplicate id, or an id longer than 65535 bytes.
    void insert(std::string id, numkit::EmbeddingVector v);
    const numkit::EmbeddingVector* find(std::string_view id) const;

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    std::unordered_map<std::string, numkit::EmbeddingVector> to_map() const;

    friend bool operator==(const EmbeddingCache& a, const EmbeddingCache& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::uint32_t dim_;
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

class CacheError : public Error {
public:
    enum class Kind { io, bad_magic, unsupported_version, truncated, invalid };

    CacheError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

inline constexpr char kCacheMagic[4] = {'A', 'E', 'M', 'B'};
inline constexpr std::uint16_t kCacheVersion = 1;

/// Little-endian layout:
///   "AEMB" | u16 version | u32 dim | u64 count |
///   count x ( u16 id_len | id bytes | dim x f32 )
void write_cache(std::ostream& out, const EmbeddingCache& cache);
EmbeddingCache read_cache(std::istream& in);

void cache_write(const std::filesystem::path& path, const EmbeddingCache& cache);
EmbeddingCache cache_read(const std::filesystem::path& path);

}  // namespace artmod::backend
