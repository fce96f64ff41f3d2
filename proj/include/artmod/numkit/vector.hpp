#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace artmod::numkit {

/// Fixed-dimension point in the shared image/text latent space.
///
/// Stored as f32, the precision models emit and the cache persists.
/// Construction rejects empty or non-finite input, so a live instance always
/// satisfies both invariants.
class EmbeddingVector {
public:
    explicit EmbeddingVector(std::vector<float> values);
    EmbeddingVector(std::initializer_list<float> values);

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const float> values() const noexcept { return values_; }
    float operator[](std::size_t i) const noexcept { return values_[i]; }

    /// Copy scaled by `factor`; throws if the result is non-finite.
    EmbeddingVector scaled(float factor) const;

    friend bool operator==(const EmbeddingVector&, const EmbeddingVector&) = default;

private:
    std::vector<float> values_;
};

/// dot(a,b) / (|a| |b|), clamped to [-1, 1].
/// Throws DimensionError on mismatch and ZeroNormError on an all-zero input.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);
double cosine_similarity(std::span<const float> a, std::span<const float> b);

}  // namespace artmod::numkit
