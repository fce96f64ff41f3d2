#include "artmod/numkit/vector.hpp"

#include <algorithm>
#include <cmath>

#include "artmod/error.hpp"
#include "artmod/numkit/kernels.hpp"

namespace artmod::numkit {

namespace {

void validate(const std::vector<float>& v) {
    if (v.empty()) throw InvalidArgument("embedding must have dimension > 0");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw InvalidArgument("embedding entry " + std::to_string(i) + " is not finite");
        }
    }
}

}  // namespace

EmbeddingVector::EmbeddingVector(std::vector<float> values) : values_(std::move(values)) {
    validate(values_);
}

EmbeddingVector::EmbeddingVector(std::initializer_list<float> values) : values_(values) {
    validate(values_);
}

EmbeddingVector EmbeddingVector::scaled(float factor) const {
    std::vector<float> out(values_);
    for (auto& x : out) x *= factor;
    return EmbeddingVector(std::move(out));
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) throw DimensionError(a.size(), b.size(), "cosine_similarity");
    double parts[3];
    kernels().dot3_f32(a.data(), b.data(), a.size(), parts);
    if (parts[1] == 0.0 || parts[2] == 0.0) {
        throw ZeroNormError("cosine_similarity: zero-norm embedding (degenerate input)");
    }
    const double c = parts[0] / (std::sqrt(parts[1]) * std::sqrt(parts[2]));
    return std::clamp(c, -1.0, 1.0);
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
    return cosine_similarity(a.values(), b.values());
}

}  // namespace artmod::numkit
