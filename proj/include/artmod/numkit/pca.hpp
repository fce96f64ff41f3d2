#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "artmod/numkit/vector.hpp"

namespace artmod::numkit {

/// Principal directions of a point cloud, strongest first.
///
/// Kept in double precision (inputs are f32) so projection followed by
/// reconstruction is exact to ~1e-12.
struct PcaModel {
    std::vector<double> mean;
    std::vector<std::vector<double>> components;  // unit norm, mutually orthogonal
    std::vector<double> explained_variance;       // nonincreasing, sample variance (n - 1)

    std::size_t input_dim() const noexcept { return mean.size(); }
    std::size_t output_dim() const noexcept { return components.size(); }

    std::vector<double> project(std::span<const float> point) const;
    /// Inverse of project, up to the discarded components.
    std::vector<double> reconstruct(std::span<const double> coords) const;
};

struct PcaProjection {
    PcaModel model;
    std::vector<std::vector<double>> points;  // one row per input, out_dims columns
};

/// Fit PCA by one-sided Jacobi SVD of the centered data matrix and project
/// the data onto the top `out_dims` directions.
///
/// Each component is sign-normalized so that its entry of largest magnitude
/// is positive. Throws InvalidArgument when there are fewer than
/// out_dims + 1 points or all points coincide, DimensionError on ragged input.
PcaProjection pca_fit_project(std::span<const EmbeddingVector> data, std::size_t out_dims);

}  // namespace artmod::numkit
