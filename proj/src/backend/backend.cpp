#include "artmod/backend/backend.hpp"

#include <filesystem>
#include <unordered_set>

#include "adapters.hpp"

namespace artmod::backend {

numkit::EmbeddingVector Backend::embed_image(const dataset::ImageRecord&) const {
    throw BackendError(BackendError::Kind::unsupported_kind,
                       std::string(to_string(kind())) + " backend cannot embed images");
}

numkit::EmbeddingVector Backend::embed_text(std::string_view) const {
    throw BackendError(BackendError::Kind::unsupported_kind,
                       std::string(to_string(kind())) + " backend cannot embed text");
}

double Backend::score_image(const dataset::ImageRecord&) const {
    throw BackendError(BackendError::Kind::unsupported_kind,
                       std::string(to_string(kind())) + " backend cannot score images");
}

std::unique_ptr<Backend> open_backend(const BackendSpec& spec) {
    auto require_file = [](const std::optional<std::filesystem::path>& p, const char* what) {
        if (!p) throw BackendError(BackendError::Kind::invalid_spec, std::string(what) + " is not set");
        if (!std::filesystem::is_regular_file(*p)) {
            throw BackendError(BackendError::Kind::missing_file,
                               std::string(what) + " not found: '" + p->string() + "'");
        }
    };
    switch (spec.kind) {
        case BackendKind::mock:
            require_file(spec.fixture_path, "mock fixture");
            return detail::make_mock_backend(spec);
        case BackendKind::dual_encoder:
            if (spec.dim == 0) throw BackendError(BackendError::Kind::invalid_spec, "dual_encoder requires dim > 0");
            require_file(spec.model_path, "image model");
            if (spec.text_model_path) require_file(spec.text_model_path, "text model");
            if (spec.tokenizer_path) require_file(spec.tokenizer_path, "tokenizer");
            return detail::make_onnx_backend(spec);
        case BackendKind::nsfw_scorer:
            require_file(spec.model_path, "scorer model");
            return detail::make_onnx_backend(spec);
    }
    throw BackendError(BackendError::Kind::unsupported_kind, "unsupported backend kind");
}

EmbedResult embed_images(const Backend& backend, std::span<const dataset::ImageRecord> records) {
    EmbedResult result;
    result.vectors.reserve(records.size());
    for (const auto& r : records) {
        try {
            auto v = backend.embed_image(r);
            if (v.dim() != backend.dim()) throw DimensionError(backend.dim(), v.dim(), "embedding of '" + r.id + "'");
            result.vectors.emplace_back(r.id, std::move(v));
        } catch (const DecodeError& e) {
            result.failures.push_back({r.id, e.what()});
        }
    }
    return result;
}

EmbedResult embed_texts(const Backend& backend, std::span<const std::string> terms) {
    EmbedResult result;
    std::unordered_set<std::string> seen;
    for (const auto& t : terms) {
        if (!seen.insert(t).second) continue;
        try {
            auto v = backend.embed_text(t);
            if (v.dim() != backend.dim()) throw DimensionError(backend.dim(), v.dim(), "embedding of '" + t + "'");
            result.vectors.emplace_back(t, std::move(v));
        } catch (const DecodeError& e) {
            result.failures.push_back({t, e.what()});
        }
    }
    return result;
}

Verdict nsfw_score(const Backend& backend, const dataset::ImageRecord& record, double threshold) {
    return binarize(backend.score_image(record), threshold);
}

}  // namespace artmod::backend
