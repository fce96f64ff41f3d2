#include "artmod/numkit/kmeans.hpp"

#include <cmath>
#include <limits>

#include "artmod/error.hpp"
#include "artmod/numkit/kernels.hpp"
#include "artmod/numkit/random.hpp"

namespace artmod::numkit {

namespace {

using Points = std::vector<std::vector<double>>;

std::size_t sample_weighted(Rng& rng, const std::vector<double>& weights, double total) {
    const double target = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (target < acc) return i;
    }
    // Rounding pushed target past the last nonzero weight.
    for (std::size_t i = weights.size(); i-- > 0;) {
        if (weights[i] > 0.0) return i;
    }
    return weights.size() - 1;
}

Points seed_centroids(const Points& x, std::size_t k, Rng& rng) {
    const auto& kern = kernels();
    const std::size_t n = x.size();
    const std::size_t dim = x.front().size();
    const int trials = 2 + static_cast<int>(std::log(static_cast<double>(k)));

    Points centers;
    centers.push_back(x[rng.uniform_below(n)]);
    std::vector<double> closest(n);
    for (std::size_t i = 0; i < n; ++i) closest[i] = kern.sq_l2_f64(x[i].data(), centers[0].data(), dim);

    while (centers.size() < k) {
        double potential = 0.0;
        for (double c : closest) potential += c;
        if (potential == 0.0) {
            // Every point already coincides with a center.
            centers.push_back(x[rng.uniform_below(n)]);
            continue;
        }
        std::size_t best_candidate = 0;
        double best_potential = std::numeric_limits<double>::infinity();
        std::vector<double> best_closest;
        for (int t = 0; t < trials; ++t) {
            const std::size_t cand = sample_weighted(rng, closest, potential);
            std::vector<double> next(n);
            double pot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                next[i] = std::min(closest[i], kern.sq_l2_f64(x[i].data(), x[cand].data(), dim));
                pot += next[i];
            }
            if (pot < best_potential) {
                best_potential = pot;
                best_candidate = cand;
                best_closest = std::move(next);
            }
        }
        centers.push_back(x[best_candidate]);
        closest = std::move(best_closest);
    }
    return centers;
}

KMeansResult lloyd(const Points& x, Points centers, int max_iterations) {
    const auto& kern = kernels();
    const std::size_t n = x.size();
    const std::size_t k = centers.size();
    const std::size_t dim = x.front().size();

    KMeansResult r;
    r.assignments.assign(n, k);  // sentinel: nothing assigned yet
    for (int it = 0; it < max_iterations; ++it) {
        bool changed = false;
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t best = 0;
            double best_d = kern.sq_l2_f64(x[i].data(), centers[0].data(), dim);
            for (std::size_t c = 1; c < k; ++c) {
                const double dc = kern.sq_l2_f64(x[i].data(), centers[c].data(), dim);
                if (dc < best_d) {
                    best_d = dc;
                    best = c;
                }
            }
            if (r.assignments[i] != best) {
                r.assignments[i] = best;
                changed = true;
            }
            inertia += best_d;
        }
        r.inertia_trace.push_back(inertia);
        r.inertia = inertia;
        r.iterations = it + 1;
        if (!changed) break;

        Points sums(k, std::vector<double>(dim, 0.0));
        std::vector<std::size_t> counts(k, 0);
        for (std::size_t i = 0; i < n; ++i) {
            kern.axpy_f64(1.0, x[i].data(), sums[r.assignments[i]].data(), dim);
            ++counts[r.assignments[i]];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) centers[c][j] = sums[c][j] / static_cast<double>(counts[c]);
        }
    }
    r.centroids = std::move(centers);
    return r;
}

}  // namespace

KMeansResult kmeans(std::span<const EmbeddingVector> data, std::size_t k, std::uint64_t seed,
                    const KMeansOptions& options) {
    if (k == 0) throw InvalidArgument("k-means: k must be positive");
    if (k > data.size()) {
        throw InvalidArgument("k-means: k = " + std::to_string(k) + " exceeds number of points (" +
                              std::to_string(data.size()) + ")");
    }
    if (options.restarts < 1 || options.max_iterations < 1) {
        throw InvalidArgument("k-means: restarts and max_iterations must be positive");
    }
    const std::size_t dim = data.front().dim();
    Points x;
    x.reserve(data.size());
    for (const auto& v : data) {
        if (v.dim() != dim) throw DimensionError(dim, v.dim(), "k-means input");
        x.emplace_back(v.values().begin(), v.values().end());
    }

    Rng rng(seed);
    KMeansResult best;
    bool have_best = false;
    for (int run = 0; run < options.restarts; ++run) {
        auto result = lloyd(x, seed_centroids(x, k, rng), options.max_iterations);
        if (!have_best || result.inertia < best.inertia) {
            best = std::move(result);
            have_best = true;
        }
    }
    return best;
}

}  // namespace artmod::numkit
