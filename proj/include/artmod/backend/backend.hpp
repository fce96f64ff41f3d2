#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artmod/backend/errors.hpp"
#include "artmod/backend/spec.hpp"
#include "artmod/backend/verdict.hpp"
#include "artmod/dataset/manifest.hpp"
#include "artmod/numkit/vector.hpp"

namespace artmod::backend {

/// Inference handle. Implementations are safe to share across threads for
/// read-only use.
class Backend {
public:
    virtual ~Backend() = default;

    virtual BackendKind kind() const noexcept = 0;
    /// Embedding dimension (1 for scorers).
    virtual std::size_t dim() const noexcept = 0;

    /// Throws DecodeError when the input cannot be processed.
    virtual numkit::EmbeddingVector embed_image(const dataset::ImageRecord& record) const;
    virtual numkit::EmbeddingVector embed_text(std::string_view term) const;
    /// Unsafeness in [0, 1].
    virtual double score_image(const dataset::ImageRecord& record) const;
};

/// Throws BackendError (missing_file, shape_mismatch, unsupported_kind, ...).
std::unique_ptr<Backend> open_backend(const BackendSpec& spec);

struct EmbedFailure {
    std::string key;
    std::string message;
};

struct EmbedResult {
    std::vector<std::pair<std::string, numkit::EmbeddingVector>> vectors;  // input order
    std::vector<EmbedFailure> failures;
};

/// One vector per decodable record; failures are collected, not thrown.
EmbedResult embed_images(const Backend& backend, std::span<const dataset::ImageRecord> records);

/// Distinct terms only, in first-occurrence order.
EmbedResult embed_texts(const Backend& backend, std::span<const std::string> terms);

Verdict nsfw_score(const Backend& backend, const dataset::ImageRecord& record, double threshold);

}  // namespace artmod::backend
