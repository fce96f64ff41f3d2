#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "artmod/numkit/vector.hpp"

namespace artmod::numkit {

struct KMeansOptions {
    int restarts = 10;
    int max_iterations = 300;
};

struct KMeansResult {
    std::vector<std::size_t> assignments;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;  // sum of squared distances to assigned centroid
    int iterations = 0;
    /// Inertia after each assignment step of the winning restart.
    std::vector<double> inertia_trace;
};

/// Lloyd's algorithm seeded with greedy k-means++ (2 + floor(ln k) candidate
/// draws per center, keep the one that lowers the potential most). The best
/// of `restarts` runs by inertia wins; the first run wins ties.
///
/// Fully determined by (data, k, seed, options). Nearest-centroid ties go to
/// the lower index; a cluster that empties keeps its previous centroid.
KMeansResult kmeans(std::span<const EmbeddingVector> data, std::size_t k, std::uint64_t seed,
                    const KMeansOptions& options = {});

}  // namespace artmod::numkit
