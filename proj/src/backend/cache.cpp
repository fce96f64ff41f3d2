#include "artmod/backend/cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace artmod::backend {

namespace {

template <typename U>
void put_le(std::ostream& out, U v) {
    char buf[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, sizeof(U));
}

template <typename U>
U get_le(std::istream& in, const char* what) {
    unsigned char buf[sizeof(U)];
    if (!in.read(reinterpret_cast<char*>(buf), sizeof(U))) {
        throw CacheError(CacheError::Kind::truncated, std::string("cache truncated while reading ") + what);
    }
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(buf[i]) << (8 * i);
    return v;
}

}  // namespace

EmbeddingCache::EmbeddingCache(std::uint32_t dim) : dim_(dim) {
    if (dim == 0) throw InvalidArgument("embedding cache dimension must be positive");
}

void EmbeddingCache::insert(std::string id, numkit::EmbeddingVector v) {
    if (v.dim() != dim_) throw DimensionError(dim_, v.dim(), "cache entry '" + id + "'");
    if (id.size() > 0xFFFF) throw InvalidArgument("cache id longer than 65535 bytes");
    if (index_.contains(id)) throw InvalidArgument("duplicate cache id '" + id + "'");
    index_.emplace(id, entries_.size());
    entries_.emplace_back(std::move(id), std::move(v));
}

const numkit::EmbeddingVector* EmbeddingCache::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? nullptr : &entries_[it->second].second;
}

std::unordered_map<std::string, numkit::EmbeddingVector> EmbeddingCache::to_map() const {
    std::unordered_map<std::string, numkit::EmbeddingVector> out;
    out.reserve(entries_.size());
    for (const auto& [id, v] : entries_) out.emplace(id, v);
    return out;
}

void write_cache(std::ostream& out, const EmbeddingCache& cache) {
    out.write(kCacheMagic, 4);
    put_le<std::uint16_t>(out, kCacheVersion);
    put_le<std::uint32_t>(out, cache.dim());
    put_le<std::uint64_t>(out, cache.size());
    for (const auto& [id, v] : cache) {
        put_le<std::uint16_t>(out, static_cast<std::uint16_t>(id.size()));
        out.write(id.data(), static_cast<std::streamsize>(id.size()));
        for (float x : v.values()) put_le<std::uint32_t>(out, std::bit_cast<std::uint32_t>(x));
    }
    if (!out) throw CacheError(CacheError::Kind::io, "failed writing embedding cache");
}

EmbeddingCache read_cache(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4)) throw CacheError(CacheError::Kind::truncated, "cache truncated in header");
    if (std::memcmp(magic, kCacheMagic, 4) != 0) {
        throw CacheError(CacheError::Kind::bad_magic, "not an embedding cache (bad magic)");
    }
    const auto version = get_le<std::uint16_t>(in, "version");
    if (version != kCacheVersion) {
        throw CacheError(CacheError::Kind::unsupported_version,
                         "unsupported cache version " + std::to_string(version));
    }
    const auto dim = get_le<std::uint32_t>(in, "dim");
    if (dim == 0) throw CacheError(CacheError::Kind::invalid, "cache declares dimension 0");
    const auto count = get_le<std::uint64_t>(in, "count");

    EmbeddingCache cache(dim);
    std::string id;
    std::vector<float> values(dim);
    for (std::uint64_t r = 0; r < count; ++r) {
        const std::string where = "record " + std::to_string(r) + " of " + std::to_string(count);
        const auto len = get_le<std::uint16_t>(in, where.c_str());
        id.resize(len);
        if (len > 0 && !in.read(id.data(), len)) {
            throw CacheError(CacheError::Kind::truncated, "cache truncated while reading " + where);
        }
        for (auto& x : values) x = std::bit_cast<float>(get_le<std::uint32_t>(in, where.c_str()));
        try {
            cache.insert(id, numkit::EmbeddingVector(values));
        } catch (const InvalidArgument& e) {
            throw CacheError(CacheError::Kind::invalid, where + ": " + e.what());
        }
    }
    if (in.peek() != std::char_traits<char>::eof()) {
        throw CacheError(CacheError::Kind::invalid, "trailing bytes after " + std::to_string(count) + " records");
    }
    return cache;
}

void cache_write(const std::filesystem::path& path, const EmbeddingCache& cache) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError(CacheError::Kind::io, "cannot open '" + path.string() + "' for writing");
    write_cache(out, cache);
    out.close();
    if (!out) throw CacheError(CacheError::Kind::io, "failed writing '" + path.string() + "'");
}

EmbeddingCache cache_read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError(CacheError::Kind::io, "cannot open embedding cache '" + path.string() + "'");
    return read_cache(in);
}

}  // namespace artmod::backend
